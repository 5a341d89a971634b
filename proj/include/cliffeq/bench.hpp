#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cliffeq/equivalence.hpp"
#include "cliffeq/randgen.hpp"

namespace cliffeq {

enum class SweepAxis : std::uint8_t { qubits, depth };

struct BenchRecord {
    std::uint32_t n = 0;
    std::uint32_t depth = 0;
    std::size_t m = 0;  // lowered gate count over both circuits
    PairKind pair_kind = PairKind::equivalent;
    Verdict verdict = Verdict::equivalent;
    double wall_ms = 0.0;  // median over repetitions
    std::uint32_t reps = 0;
    std::uint64_t seed = 0;
};

using RecordSink = std::function<void(const BenchRecord&)>;

// One sweep point per value per pair kind (equivalent and nonequivalent).
// Generation and parsing stay outside the timed section; only
// check_equivalence is measured, reps times, and the median is recorded.
// Records are handed to `sink` as they complete and returned at the end.
// Points run sequentially.  Values must be ascending and reps >= 3.
std::vector<BenchRecord> run_sweep(SweepAxis axis, const std::vector<std::uint32_t>& values,
                                   const GenConfig& fixed, std::uint32_t reps,
                                   const RecordSink& sink = {});

std::string csv_header();
std::string csv_row(const BenchRecord& r);

double median(std::vector<double> samples);

}  // namespace cliffeq
