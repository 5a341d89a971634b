#include "cliffeq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <new>
#include <sstream>
#include <stdexcept>

namespace cliffeq {

double median(std::vector<double> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("median: no samples");
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) {
        return samples[mid];
    }
    return 0.5 * (samples[mid - 1] + samples[mid]);
}

std::string csv_header() {
    return "n,depth,m,pair_kind,verdict,wall_ms,reps,seed";
}

std::string csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.n << ',' << r.depth << ',' << r.m << ',' << pair_kind_name(r.pair_kind) << ','
        << verdict_name(r.verdict) << ',' << r.wall_ms << ',' << r.reps << ',' << r.seed;
    return out.str();
}

namespace {

using steady = std::chrono::steady_clock;

BenchRecord run_point(const GenConfig& cfg, std::uint32_t reps) {
    const auto [a, b] = gen_pair(cfg);

    BenchRecord rec;
    rec.n = cfg.n;
    rec.depth = cfg.depth;
    rec.m = gate_count(a) + gate_count(b);
    rec.pair_kind = cfg.pair_kind;
    rec.reps = reps;
    rec.seed = cfg.seed;

    std::vector<double> samples;
    samples.reserve(reps);
    EquivalenceResult result = check_equivalence(a, b);  // untimed warm-up
    for (std::uint32_t r = 0; r < reps; ++r) {
        const auto start = steady::now();
        result = check_equivalence(a, b);
        samples.push_back(std::chrono::duration<double, std::milli>(steady::now() - start).count());
    }
    rec.verdict = result.verdict;
    rec.wall_ms = median(std::move(samples));
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_sweep(SweepAxis axis, const std::vector<std::uint32_t>& values,
                                   const GenConfig& fixed, std::uint32_t reps,
                                   const RecordSink& sink) {
    if (!std::is_sorted(values.begin(), values.end())) {
        throw std::invalid_argument("run_sweep: values must be sorted ascending");
    }
    if (reps < 3) {
        throw std::invalid_argument("run_sweep: need at least 3 repetitions");
    }

    std::vector<BenchRecord> records;
    records.reserve(values.size() * 2);
    for (const std::uint32_t value : values) {
        for (const PairKind kind : {PairKind::equivalent, PairKind::nonequivalent}) {
            GenConfig cfg = fixed;
            if (axis == SweepAxis::qubits) {
                cfg.n = value;
            } else {
                cfg.depth = value;
            }
            cfg.pair_kind = kind;
            cfg.seed = Rng::mix(fixed.seed, (std::uint64_t{value} << 1) | (kind == PairKind::equivalent ? 0 : 1));
            try {
                records.push_back(run_point(cfg, reps));
            } catch (const std::bad_alloc&) {
                throw std::runtime_error("run_sweep: out of memory at n=" + std::to_string(cfg.n) +
                                         " depth=" + std::to_string(cfg.depth));
            }
            if (sink) {
                sink(records.back());
            }
        }
    }
    return records;
}

}  // namespace cliffeq
