#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliffeq/bitvec.hpp"

namespace cliffeq {

enum class GateKind : std::uint8_t;
struct Gate;

// Signed n-qubit Pauli operator in the symplectic (x,z)-bit convention:
// per qubit, (x,z) = I:(0,0), X:(1,0), Y:(1,1), Z:(0,1).  Qubit 0 is the
// leftmost factor in tensor notation and in the text rendering.
class PauliString {
  public:
    explicit PauliString(std::uint32_t n);

    static PauliString identity(std::uint32_t n) { return PauliString(n); }

    // Parses e.g. "+XZIY" or "-IZ" (sign character optional, defaults to +).
    static PauliString from_text(std::string_view text);

    std::uint32_t num_qubits() const { return n_; }

    bool x(std::uint32_t j) const { return get_bit(x_, j); }
    bool z(std::uint32_t j) const { return get_bit(z_, j); }
    void set_x(std::uint32_t j, bool b) { set_bit(x_, j, b); }
    void set_z(std::uint32_t j, bool b) { set_bit(z_, j, b); }

    // sign is +1 when false, -1 when true.
    bool negative() const { return negative_; }
    void set_negative(bool b) { negative_ = b; }

    char pauli_char(std::uint32_t j) const;
    void set_pauli(std::uint32_t j, char p);

    // "+XZIY" rendering: sign character, then one letter per qubit.
    std::string str() const;

    bool operator==(const PauliString& other) const = default;

    const std::vector<word_t>& x_words() const { return x_; }
    const std::vector<word_t>& z_words() const { return z_; }

  private:
    std::uint32_t n_;
    std::vector<word_t> x_;
    std::vector<word_t> z_;
    bool negative_ = false;
};

// Power of i in {1, i, -1, -i}, stored as the exponent k of i^k.
enum class Phase : std::uint8_t {
    plus_one = 0,
    plus_i = 1,
    minus_one = 2,
    minus_i = 3,
};

Phase phase_mul(Phase a, Phase b);
std::string phase_str(Phase p);

// A Pauli string with a full quarter-turn phase.  The embedded string is
// kept sign-positive; the whole phase lives in `phase`.  General Pauli
// products need this because they can pick up factors of +/-i, which a
// plain PauliString cannot hold.
struct PhasedPauli {
    PauliString pauli;
    Phase phase = Phase::plus_one;

    PhasedPauli(PauliString p);  // folds the sign into the phase
    PhasedPauli(PauliString p, Phase ph);

    // Fails if the phase is imaginary.
    PauliString to_pauli_string() const;

    std::string str() const;

    bool operator==(const PhasedPauli& other) const = default;
};

// Exact group product a*b with the phase tracked in {1, i, -1, -i}.
PhasedPauli pauli_mul(const PhasedPauli& a, const PhasedPauli& b);

// True iff the symplectic inner product sum_j (a.x_j & b.z_j) xor
// (a.z_j & b.x_j) is even.
bool commutes(const PauliString& a, const PauliString& b);

// g * p * g^dagger for an elementary Clifford gate g in {H, S, CNOT}.
// Only the gate's qubit(s) and the sign change.
PauliString conjugate_by_gate(const PauliString& p, const Gate& g);
void conjugate_by_gate_in_place(PauliString& p, const Gate& g);

}  // namespace cliffeq
