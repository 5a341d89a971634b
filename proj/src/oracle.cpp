#include "cliffeq/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffeq {

namespace {

constexpr double kPivotFloor = 1e-6;

void check_width(std::uint32_t n) {
    if (n < 1) {
        throw std::invalid_argument("oracle: circuit must have at least one qubit");
    }
    if (n > kMaxOracleQubits) {
        throw std::invalid_argument("oracle: width exceeds the dense cap of " +
                                    std::to_string(kMaxOracleQubits) + " qubits");
    }
}

struct Mat2 {
    cdouble a, b, c, d;
};

Mat2 gate_matrix_1q(GateKind k) {
    const double r = 1.0 / std::sqrt(2.0);
    const cdouble i{0.0, 1.0};
    switch (k) {
        case GateKind::H: return {r, r, r, -r};
        case GateKind::S: return {1, 0, 0, i};
        case GateKind::SDG: return {1, 0, 0, -i};
        case GateKind::X: return {0, 1, 1, 0};
        case GateKind::Y: return {0, -i, i, 0};
        case GateKind::Z: return {1, 0, 0, -1};
        default: throw std::invalid_argument("not a single-qubit gate");
    }
}

// Applies a single-qubit gate at bit position `bit` to every column of U,
// i.e. replaces U by (G tensored into place) * U.
void apply_1q(DenseUnitary& u, const Mat2& g, std::uint32_t bit) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t r0 = 0; r0 < u.dim; ++r0) {
        if (r0 & stride) continue;
        const std::size_t r1 = r0 | stride;
        for (std::size_t c = 0; c < u.dim; ++c) {
            const cdouble v0 = u.at(r0, c);
            const cdouble v1 = u.at(r1, c);
            u.at(r0, c) = g.a * v0 + g.b * v1;
            u.at(r1, c) = g.c * v0 + g.d * v1;
        }
    }
}

void apply_cnot(DenseUnitary& u, std::uint32_t cbit, std::uint32_t tbit) {
    const std::size_t cmask = std::size_t{1} << cbit;
    const std::size_t tmask = std::size_t{1} << tbit;
    for (std::size_t r = 0; r < u.dim; ++r) {
        // swap row pairs (r, r^tmask) where the control bit is set
        if ((r & cmask) && !(r & tmask)) {
            const std::size_t r2 = r | tmask;
            for (std::size_t c = 0; c < u.dim; ++c) {
                std::swap(u.at(r, c), u.at(r2, c));
            }
        }
    }
}

void apply_cz(DenseUnitary& u, std::uint32_t abit, std::uint32_t bbit) {
    const std::size_t amask = std::size_t{1} << abit;
    const std::size_t bmask = std::size_t{1} << bbit;
    for (std::size_t r = 0; r < u.dim; ++r) {
        if ((r & amask) && (r & bmask)) {
            for (std::size_t c = 0; c < u.dim; ++c) {
                u.at(r, c) = -u.at(r, c);
            }
        }
    }
}

void apply_swap(DenseUnitary& u, std::uint32_t abit, std::uint32_t bbit) {
    const std::size_t amask = std::size_t{1} << abit;
    const std::size_t bmask = std::size_t{1} << bbit;
    for (std::size_t r = 0; r < u.dim; ++r) {
        const bool a = r & amask, b = r & bmask;
        if (a && !b) {
            const std::size_t r2 = (r & ~amask) | bmask;
            for (std::size_t c = 0; c < u.dim; ++c) {
                std::swap(u.at(r, c), u.at(r2, c));
            }
        }
    }
}

}  // namespace

DenseUnitary dense_unitary(const Circuit& c) {
    check_width(c.n);
    validate(c);
    DenseUnitary u;
    u.n = c.n;
    u.dim = std::size_t{1} << c.n;
    u.m.assign(u.dim * u.dim, cdouble{0.0, 0.0});
    for (std::size_t k = 0; k < u.dim; ++k) {
        u.at(k, k) = 1.0;
    }
    // qubit j sits at bit position n-1-j of the basis index
    const auto bit_of = [&](std::uint32_t q) { return c.n - 1 - q; };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::CNOT: apply_cnot(u, bit_of(g.q0), bit_of(g.q1)); break;
            case GateKind::CZ: apply_cz(u, bit_of(g.q0), bit_of(g.q1)); break;
            case GateKind::SWAP: apply_swap(u, bit_of(g.q0), bit_of(g.q1)); break;
            default: apply_1q(u, gate_matrix_1q(g.kind), bit_of(g.q0)); break;
        }
    }
    return u;
}

DenseUnitary dense_pauli(const PauliString& p) {
    check_width(p.num_qubits());
    const std::uint32_t n = p.num_qubits();
    DenseUnitary out;
    out.n = n;
    out.dim = std::size_t{1} << n;
    out.m.assign(out.dim * out.dim, cdouble{0.0, 0.0});

    // Column k maps to row k^xmask with entry sign * i^(#Y) * (-1)^(z.k).
    std::size_t xmask = 0, zmask = 0;
    std::uint32_t y_count = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << (n - 1 - j);
        if (p.x(j)) xmask |= bit;
        if (p.z(j)) zmask |= bit;
        if (p.x(j) && p.z(j)) ++y_count;
    }
    const cdouble i{0.0, 1.0};
    cdouble lead = p.negative() ? cdouble{-1.0, 0.0} : cdouble{1.0, 0.0};
    for (std::uint32_t k = 0; k < (y_count & 3u); ++k) {
        lead *= i;
    }
    for (std::size_t k = 0; k < out.dim; ++k) {
        const bool flip = std::popcount(k & zmask) & 1;
        out.at(k ^ xmask, k) = flip ? -lead : lead;
    }
    return out;
}

double max_norm_distance(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("max_norm_distance: shapes differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.m.size(); ++k) {
        worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
    }
    return worst;
}

bool oracle_equivalent(const Circuit& u, const Circuit& v) {
    cdouble c;
    return oracle_equivalent(u, v, c);
}

bool oracle_equivalent(const Circuit& u, const Circuit& v, cdouble& c_out) {
    if (u.n != v.n) {
        throw std::invalid_argument("oracle_equivalent: circuit widths differ");
    }
    const DenseUnitary mu = dense_unitary(u);
    const DenseUnitary mv = dense_unitary(v);

    std::size_t pivot = mv.m.size();
    for (std::size_t k = 0; k < mv.m.size(); ++k) {
        if (std::abs(mv.m[k]) > kPivotFloor) {
            pivot = k;
            break;
        }
    }
    if (pivot == mv.m.size()) {
        // a unitary always has an entry of modulus >= 2^(-n/2) per column
        throw std::logic_error("oracle_equivalent: no pivot entry in a unitary matrix");
    }
    const cdouble c = mu.m[pivot] / mv.m[pivot];
    double worst = 0.0;
    for (std::size_t k = 0; k < mu.m.size(); ++k) {
        worst = std::max(worst, std::abs(mu.m[k] - c * mv.m[k]));
    }
    if (worst > kOracleTolerance) {
        return false;
    }
    if (std::abs(std::abs(c) - 1.0) > kOracleTolerance) {
        throw std::logic_error("oracle_equivalent: recovered factor is not a pure phase");
    }
    c_out = c;
    return true;
}

PhasedPauli oracle_conjugate(const Circuit& c, const PauliString& p) {
    check_width(c.n);
    if (p.num_qubits() != c.n) {
        throw std::invalid_argument("oracle_conjugate: Pauli width differs from circuit width");
    }
    const DenseUnitary u = dense_unitary(c);
    const DenseUnitary pm = dense_pauli(p);
    const std::size_t d = u.dim;

    // m = U * P * U^dagger
    DenseUnitary tmp;
    tmp.n = u.n;
    tmp.dim = d;
    tmp.m.assign(d * d, cdouble{0.0, 0.0});
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const cdouble f = u.at(r, k);
            if (f == cdouble{0.0, 0.0}) continue;
            for (std::size_t col = 0; col < d; ++col) {
                tmp.at(r, col) += f * pm.at(k, col);
            }
        }
    }
    DenseUnitary out;
    out.n = u.n;
    out.dim = d;
    out.m.assign(d * d, cdouble{0.0, 0.0});
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const cdouble f = tmp.at(r, k);
            if (f == cdouble{0.0, 0.0}) continue;
            for (std::size_t col = 0; col < d; ++col) {
                out.at(r, col) += f * std::conj(u.at(col, k));
            }
        }
    }

    // Decode: column 0 fixes the x-bits and the leading phase, columns
    // e_j fix the z-bits.
    std::size_t best = 0;
    for (std::size_t r = 1; r < d; ++r) {
        if (std::abs(out.at(r, 0)) > std::abs(out.at(best, 0))) best = r;
    }
    const cdouble alpha0 = out.at(best, 0);
    if (std::abs(std::abs(alpha0) - 1.0) > kOracleTolerance) {
        throw std::logic_error("oracle_conjugate: result is not a Pauli string");
    }
    PauliString q(c.n);
    const std::size_t xmask = best;
    for (std::uint32_t j = 0; j < c.n; ++j) {
        const std::size_t bit = std::size_t{1} << (c.n - 1 - j);
        if (xmask & bit) q.set_x(j, true);
        const cdouble ratio = out.at(xmask ^ bit, bit) / alpha0;
        q.set_z(j, ratio.real() < 0.0);
    }
    std::uint32_t y_count = 0;
    for (std::uint32_t j = 0; j < c.n; ++j) {
        if (q.x(j) && q.z(j)) ++y_count;
    }
    // alpha0 = phase * i^(#Y); peel off the Y contribution
    const cdouble i{0.0, 1.0};
    cdouble phase = alpha0;
    for (std::uint32_t k = 0; k < (y_count & 3u); ++k) {
        phase /= i;
    }
    Phase ph;
    if (std::abs(phase - cdouble{1.0, 0.0}) < 1e-6) {
        ph = Phase::plus_one;
    } else if (std::abs(phase - cdouble{-1.0, 0.0}) < 1e-6) {
        ph = Phase::minus_one;
    } else if (std::abs(phase - i) < 1e-6) {
        ph = Phase::plus_i;
    } else if (std::abs(phase + i) < 1e-6) {
        ph = Phase::minus_i;
    } else {
        throw std::logic_error("oracle_conjugate: result is not a Pauli string");
    }

    const PhasedPauli result(q, ph);
    // cross-check the decode against the full matrix
    PauliString signed_q = q;
    DenseUnitary expect = dense_pauli(signed_q);
    cdouble lead = (ph == Phase::plus_one)    ? cdouble{1.0, 0.0}
                   : (ph == Phase::minus_one) ? cdouble{-1.0, 0.0}
                   : (ph == Phase::plus_i)    ? i
                                              : -i;
    for (auto& e : expect.m) {
        e *= lead;
    }
    if (max_norm_distance(out, expect) > kOracleTolerance) {
        throw std::logic_error("oracle_conjugate: result is not a Pauli string");
    }
    return result;
}

std::vector<cdouble> apply_to_basis_state(const DenseUnitary& u, std::size_t index) {
    if (index >= u.dim) {
        throw std::out_of_range("apply_to_basis_state: index out of range");
    }
    std::vector<cdouble> out(u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
        out[r] = u.at(r, index);
    }
    return out;
}

std::vector<cdouble> apply_to_plus_state(const DenseUnitary& u) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(u.dim));
    std::vector<cdouble> out(u.dim, cdouble{0.0, 0.0});
    for (std::size_t r = 0; r < u.dim; ++r) {
        for (std::size_t c = 0; c < u.dim; ++c) {
            out[r] += u.at(r, c) * amp;
        }
    }
    return out;
}

}  // namespace cliffeq
