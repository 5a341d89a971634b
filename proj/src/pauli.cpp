#include "cliffeq/pauli.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "cliffeq/circuit.hpp"

namespace cliffeq {

PauliString::PauliString(std::uint32_t n)
    : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {
    if (n == 0) {
        throw std::invalid_argument("PauliString needs at least one qubit");
    }
}

PauliString PauliString::from_text(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    PauliString p(static_cast<std::uint32_t>(text.size()));
    for (std::uint32_t j = 0; j < text.size(); ++j) {
        p.set_pauli(j, text[j]);
    }
    p.set_negative(neg);
    return p;
}

char PauliString::pauli_char(std::uint32_t j) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};  // index = x + 2z
    return table[(x(j) ? 1 : 0) + (z(j) ? 2 : 0)];
}

void PauliString::set_pauli(std::uint32_t j, char p) {
    switch (p) {
        case 'I': set_x(j, false); set_z(j, false); break;
        case 'X': set_x(j, true);  set_z(j, false); break;
        case 'Y': set_x(j, true);  set_z(j, true);  break;
        case 'Z': set_x(j, false); set_z(j, true);  break;
        default: throw std::invalid_argument(std::string("unknown Pauli letter: ") + p);
    }
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(n_ + 1);
    s.push_back(negative_ ? '-' : '+');
    for (std::uint32_t j = 0; j < n_; ++j) {
        s.push_back(pauli_char(j));
    }
    return s;
}

Phase phase_mul(Phase a, Phase b) {
    return static_cast<Phase>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 3u);
}

std::string phase_str(Phase p) {
    switch (p) {
        case Phase::plus_one: return "+1";
        case Phase::plus_i: return "+i";
        case Phase::minus_one: return "-1";
        case Phase::minus_i: return "-i";
    }
    return "?";
}

PhasedPauli::PhasedPauli(PauliString p) : pauli(std::move(p)) {
    if (pauli.negative()) {
        pauli.set_negative(false);
        phase = Phase::minus_one;
    }
}

PhasedPauli::PhasedPauli(PauliString p, Phase ph) : pauli(std::move(p)), phase(ph) {
    if (pauli.negative()) {
        pauli.set_negative(false);
        phase = phase_mul(phase, Phase::minus_one);
    }
}

PauliString PhasedPauli::to_pauli_string() const {
    if (phase == Phase::plus_i || phase == Phase::minus_i) {
        throw std::domain_error("phase is imaginary, not representable as a signed Pauli string");
    }
    PauliString p = pauli;
    p.set_negative(phase == Phase::minus_one);
    return p;
}

std::string PhasedPauli::str() const {
    std::string s = phase_str(phase);
    s += "*";
    s += pauli.str().substr(1);
    return s;
}

namespace {

// Exponent of i contributed by the single-qubit product a*b, where each
// operand is encoded as x + 2z.  Derived from X*Z = -i*Y and cyclic
// relatives; checked against dense 2x2 products in the test suite.
constexpr std::array<std::uint8_t, 16> make_mul_phase_table() {
    std::array<std::uint8_t, 16> t{};
    // order: I=0, X=1, Z=2, Y=3 (x + 2z encoding)
    auto set = [&](unsigned a, unsigned b, unsigned k) { t[a * 4 + b] = static_cast<std::uint8_t>(k); };
    // X*Z = -i Y, Z*X = +i Y, X*Y = +i Z, Y*X = -i Z, Y*Z = +i X, Z*Y = -i X
    set(1, 2, 3);
    set(2, 1, 1);
    set(1, 3, 1);
    set(3, 1, 3);
    set(3, 2, 1);
    set(2, 3, 3);
    return t;
}

constexpr auto kMulPhase = make_mul_phase_table();

}  // namespace

PhasedPauli pauli_mul(const PhasedPauli& a, const PhasedPauli& b) {
    if (a.pauli.num_qubits() != b.pauli.num_qubits()) {
        throw std::invalid_argument("pauli_mul: qubit counts differ");
    }
    const std::uint32_t n = a.pauli.num_qubits();
    PauliString out(n);
    unsigned k = static_cast<unsigned>(phase_mul(a.phase, b.phase));
    for (std::uint32_t j = 0; j < n; ++j) {
        const unsigned pa = (a.pauli.x(j) ? 1u : 0u) + (a.pauli.z(j) ? 2u : 0u);
        const unsigned pb = (b.pauli.x(j) ? 1u : 0u) + (b.pauli.z(j) ? 2u : 0u);
        k += kMulPhase[pa * 4 + pb];
        out.set_x(j, a.pauli.x(j) ^ b.pauli.x(j));
        out.set_z(j, a.pauli.z(j) ^ b.pauli.z(j));
    }
    return PhasedPauli(std::move(out), static_cast<Phase>(k & 3u));
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("commutes: qubit counts differ");
    }
    word_t acc = 0;
    const auto& ax = a.x_words();
    const auto& az = a.z_words();
    const auto& bx = b.x_words();
    const auto& bz = b.z_words();
    for (std::size_t w = 0; w < ax.size(); ++w) {
        acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

void conjugate_by_gate_in_place(PauliString& p, const Gate& g) {
    const std::uint32_t n = p.num_qubits();
    if (g.q0 >= n || (is_two_qubit(g.kind) && g.q1 >= n)) {
        throw std::out_of_range("conjugate_by_gate: gate qubit out of range");
    }
    switch (g.kind) {
        case GateKind::H: {
            const bool x = p.x(g.q0), z = p.z(g.q0);
            p.set_x(g.q0, z);
            p.set_z(g.q0, x);
            if (x && z) p.set_negative(!p.negative());
            break;
        }
        case GateKind::S: {
            const bool x = p.x(g.q0), z = p.z(g.q0);
            if (x && z) p.set_negative(!p.negative());
            p.set_z(g.q0, z ^ x);
            break;
        }
        case GateKind::CNOT: {
            if (g.q0 == g.q1) {
                throw std::invalid_argument("conjugate_by_gate: CNOT qubits must differ");
            }
            const bool xc = p.x(g.q0), zc = p.z(g.q0);
            const bool xt = p.x(g.q1), zt = p.z(g.q1);
            if (xc && zt && !(xt ^ zc)) p.set_negative(!p.negative());
            p.set_x(g.q1, xt ^ xc);
            p.set_z(g.q0, zc ^ zt);
            break;
        }
        default:
            throw std::invalid_argument("conjugate_by_gate: gate must be elementary (H, S, CNOT)");
    }
}

PauliString conjugate_by_gate(const PauliString& p, const Gate& g) {
    PauliString out = p;
    conjugate_by_gate_in_place(out, g);
    return out;
}

}  // namespace cliffeq
