#pragma once

#include <vector>

#include "cliffeq/circuit.hpp"
#include "cliffeq/pauli.hpp"
#include "cliffeq/tableau.hpp"

namespace cliffeq {

// Serial reference engine: conjugates each basis generator through the
// circuit one row at a time using the Pauli-level rules, with no bit
// packing and no laziness.  Same semantics as the packed tableau kernel,
// a word-width slower; kept as an independent route for tests and as the
// baseline in the engine benchmark.
std::vector<PauliString> reference_rows(const Circuit& c, BasisKind kind);

// Basis generators Z_i (or X_i) without any simulation.
std::vector<PauliString> basis_rows(std::uint32_t n, BasisKind kind);

}  // namespace cliffeq
