#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cliffeq/circuit.hpp"
#include "cliffeq/pauli.hpp"
#include "cliffeq/tableau.hpp"

namespace cliffeq {

enum class Verdict : std::uint8_t { equivalent, not_equivalent };

struct Witness {
    BasisKind basis;
    std::uint32_t generator;
    PauliString u_pauli;
    PauliString v_pauli;
};

struct EquivalenceResult {
    Verdict verdict = Verdict::equivalent;
    std::optional<Witness> witness;
    std::uint32_t n = 0;
    std::size_t m_u = 0;
    std::size_t m_v = 0;
    double time_ms = 0.0;

    bool equivalent() const { return verdict == Verdict::equivalent; }
};

struct CheckOptions {
    // Run the four tableau simulations concurrently.  Never changes the
    // result or the witness; flip off for single-threaded timing.
    bool parallel = true;

    // When set, the packed kernel is replaced by the serial row-by-row
    // reference engine.  Verdicts and witnesses are identical.
    bool use_reference_engine = false;
};

// Decides whether the two circuits implement the same unitary up to a
// global phase by conjugating all Z_j and X_j generators through both
// circuits and comparing exactly, sign included.  Both bases are always
// simulated in full; a Z-basis mismatch wins the witness over an X-basis
// one, and within a basis the smallest generator index wins.  Width
// mismatch is an error, not a verdict.
EquivalenceResult check_equivalence(const Circuit& u, const Circuit& v,
                                    const CheckOptions& options = {});

// check_equivalence against the identity circuit of the same width; the
// identity side is not simulated, its tableaux are the fresh bases.
EquivalenceResult check_identity(const Circuit& u, const CheckOptions& options = {});

// {"verdict", "witness", "n", "m_u", "m_v", "time_ms"}; witness is null
// for equivalent results.
std::string to_json(const EquivalenceResult& r);

std::string_view verdict_name(Verdict v);
std::string_view basis_name(BasisKind k);

}  // namespace cliffeq
