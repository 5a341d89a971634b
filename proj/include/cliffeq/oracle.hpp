#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cliffeq/circuit.hpp"
#include "cliffeq/pauli.hpp"

namespace cliffeq {

// Brute-force ground truth.  Everything here is dense 2^n x 2^n linear
// algebra in double precision and is capped at kMaxOracleQubits so that
// every call stays desk-scale.  No performance claims are made for this
// module; it exists to be obviously correct.

inline constexpr std::uint32_t kMaxOracleQubits = 8;
inline constexpr double kOracleTolerance = 1e-9;

using cdouble = std::complex<double>;

struct DenseUnitary {
    std::uint32_t n = 0;
    std::size_t dim = 0;
    std::vector<cdouble> m;  // row-major, dim x dim

    cdouble& at(std::size_t r, std::size_t c) { return m[r * dim + c]; }
    const cdouble& at(std::size_t r, std::size_t c) const { return m[r * dim + c]; }
};

// Ordered product of the circuit's gate matrices, built by applying each
// gate to the matrix columns in place (no full Kronecker factors are ever
// materialized).  Accepts extended gate kinds, which is what makes this a
// useful cross-check for the lowering rules.  Basis convention: qubit 0 is
// the most significant bit of the index, so |01> on two qubits is index 1.
DenseUnitary dense_unitary(const Circuit& c);

// Dense matrix of a signed Pauli string.
DenseUnitary dense_pauli(const PauliString& p);

// max_ij |A_ij - B_ij|
double max_norm_distance(const DenseUnitary& a, const DenseUnitary& b);

// True iff U = c*V for some complex c, decided by pivoting on the first
// entry of V with modulus > 1e-6 in row-major order and checking the
// max-norm residual against kOracleTolerance.
bool oracle_equivalent(const Circuit& u, const Circuit& v);

// Same check, exposing the recovered phase factor when equivalent.
bool oracle_equivalent(const Circuit& u, const Circuit& v, cdouble& c_out);

// U * P * U^dagger decoded back into a phased Pauli.  Throws if the result
// is not a Pauli string, which cannot happen for this gate set.
PhasedPauli oracle_conjugate(const Circuit& c, const PauliString& p);

// U applied to a computational basis state (index uses the convention
// above).  Used to compare output states directly.
std::vector<cdouble> apply_to_basis_state(const DenseUnitary& u, std::size_t index);

// U applied to the uniform superposition |+...+>.
std::vector<cdouble> apply_to_plus_state(const DenseUnitary& u);

}  // namespace cliffeq
