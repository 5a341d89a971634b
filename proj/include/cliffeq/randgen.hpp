#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "cliffeq/circuit.hpp"

namespace cliffeq {

// Fixed, portable PRNG so that a (config, seed) pair reproduces the same
// circuits bit for bit on every platform: xoshiro256** with its state
// seeded from splitmix64.  Nothing here depends on implementation-defined
// standard-library distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    // Uniform in [0, bound) without modulo bias (rejection sampling).
    std::uint64_t below(std::uint64_t bound);

    bool coin() { return next() >> 63; }

    // Deterministic stream derivation for sub-tasks and sweep points.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);

  private:
    std::array<std::uint64_t, 4> state_;
};

enum class PairKind : std::uint8_t { equivalent, nonequivalent, single };

std::string_view pair_kind_name(PairKind k);

struct GenConfig {
    std::uint32_t n = 1;
    std::uint32_t depth = 1;
    std::uint64_t seed = 0;
    PairKind pair_kind = PairKind::single;
    std::uint32_t mutation_count = 1;   // nonequivalent pairs
    std::uint32_t insertion_count = 2;  // equivalent pairs
};

// Random filled circuit: exactly `depth` layers, and in each layer every
// qubit receives exactly one gate.  A layer consumes a uniformly shuffled
// qubit order left to right; each position picks uniformly among H, S and
// CNOT-with-the-next-unconsumed-qubit (CNOT only while a partner remains,
// with the current qubit as control).  Total gate count falls in
// [depth*n/2, depth*n].
Circuit gen_filled(const GenConfig& cfg);

// (C, C') with C' derived from C by insertion_count equivalence-preserving
// edits: insert H;H, S;S;S;S, CNOT;CNOT, a 6-gate H,S,H,S,H,S phase block,
// or swap two adjacent gates with disjoint qubit support.  Equivalent by
// construction.
std::pair<Circuit, Circuit> gen_equivalent_pair(const GenConfig& cfg);

// (C, C') with C' differing from C in mutation_count gate substitutions on
// the same qubits (H <-> S, CNOT direction reversed).  The pair is verified
// NotEquivalent by the checker before being returned; a fresh set of
// positions is drawn until verification passes, with a bounded retry
// budget.
std::pair<Circuit, Circuit> gen_nonequivalent_pair(const GenConfig& cfg);

// Dispatch on cfg.pair_kind (single yields (C, C)).
std::pair<Circuit, Circuit> gen_pair(const GenConfig& cfg);

}  // namespace cliffeq
