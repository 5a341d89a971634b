#include <doctest.h>

#include <complex>
#include <vector>

#include "cliffeq/circuit.hpp"
#include "cliffeq/oracle.hpp"
#include "cliffeq/randgen.hpp"

using namespace cliffeq;

namespace {

const Circuit kCircuitA(2, {Gate::h(0), Gate::h(1), Gate::cnot(0, 1), Gate::h(0), Gate::h(1)});
const Circuit kCircuitB(2, {Gate::cnot(1, 0)});

double unitarity_defect(const DenseUnitary& u) {
    double worst = 0.0;
    for (std::size_t r = 0; r < u.dim; ++r) {
        for (std::size_t c = 0; c < u.dim; ++c) {
            cdouble acc{0.0, 0.0};
            for (std::size_t k = 0; k < u.dim; ++k) {
                acc += std::conj(u.at(k, r)) * u.at(k, c);
            }
            const cdouble expect = r == c ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
            worst = std::max(worst, std::abs(acc - expect));
        }
    }
    return worst;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("hadamard matrix") {
    const auto u = dense_unitary(Circuit(1, {Gate::h(0)}));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(u.at(0, 0) - r) < 1e-12);
    CHECK(std::abs(u.at(0, 1) - r) < 1e-12);
    CHECK(std::abs(u.at(1, 0) - r) < 1e-12);
    CHECK(std::abs(u.at(1, 1) + r) < 1e-12);
}

TEST_CASE("circuit A multiplies out to the inverted-CNOT matrix") {
    const auto u = dense_unitary(kCircuitA);
    // rows of NOTC: |00>->|00>, |01>->|11>, |10>->|10>, |11>->|01>
    const double notc[4][4] = {
        {1, 0, 0, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
        {0, 1, 0, 0},
    };
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(std::abs(u.at(r, c) - notc[r][c]) < 1e-12);
        }
    }
    CHECK(max_norm_distance(u, dense_unitary(kCircuitB)) < 1e-12);
}

TEST_CASE("empty circuit is the identity") {
    const auto u = dense_unitary(Circuit(2));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(std::abs(u.at(r, c) - (r == c ? 1.0 : 0.0)) < 1e-15);
        }
    }
}

TEST_CASE("width cap is enforced") {
    CHECK_THROWS_AS(dense_unitary(Circuit(9)), std::invalid_argument);
    CHECK_THROWS_AS(oracle_equivalent(Circuit(9), Circuit(9)), std::invalid_argument);
}

TEST_CASE("random circuits stay unitary") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GenConfig cfg;
        cfg.n = 1 + static_cast<std::uint32_t>(seed % 4);
        cfg.depth = 12;
        cfg.seed = seed;
        const auto u = dense_unitary(gen_filled(cfg));
        CHECK(unitarity_defect(u) < 1e-9);
    }
}

TEST_CASE("composition order") {
    GenConfig cfg;
    cfg.n = 3;
    cfg.depth = 6;
    cfg.seed = 5;
    const Circuit a = gen_filled(cfg);
    cfg.seed = 6;
    const Circuit b = gen_filled(cfg);
    const auto ua = dense_unitary(a);
    const auto ub = dense_unitary(b);
    const auto uab = dense_unitary(concat(a, b));
    // gates of b act after a, so the combined matrix is U_b * U_a
    DenseUnitary prod;
    prod.n = ua.n;
    prod.dim = ua.dim;
    prod.m.assign(ua.dim * ua.dim, cdouble{0.0, 0.0});
    for (std::size_t r = 0; r < ua.dim; ++r) {
        for (std::size_t k = 0; k < ua.dim; ++k) {
            for (std::size_t c = 0; c < ua.dim; ++c) {
                prod.at(r, c) += ub.at(r, k) * ua.at(k, c);
            }
        }
    }
    CHECK(max_norm_distance(uab, prod) < 1e-9);
}

TEST_CASE("oracle_equivalent golden cases") {
    CHECK(oracle_equivalent(kCircuitA, kCircuitB));

    const Circuit hs3(1, {Gate::h(0), Gate::s(0), Gate::h(0), Gate::s(0), Gate::h(0), Gate::s(0)});
    cdouble c;
    CHECK(oracle_equivalent(hs3, Circuit(1), c));
    const cdouble eighth = std::exp(cdouble{0.0, std::numbers::pi / 4.0});
    CHECK(std::abs(c - eighth) < 1e-9);

    const Circuit x_gate(1, {Gate::h(0), Gate::s(0), Gate::s(0), Gate::h(0)});
    CHECK_FALSE(oracle_equivalent(x_gate, Circuit(1)));

    CHECK_THROWS_AS(oracle_equivalent(Circuit(1), Circuit(2)), std::invalid_argument);
}

TEST_CASE("oracle_equivalent is an equivalence relation on samples") {
    std::vector<Circuit> circuits;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GenConfig cfg;
        cfg.n = 2;
        cfg.depth = 4;
        cfg.seed = seed;
        circuits.push_back(gen_filled(cfg));
    }
    circuits.push_back(kCircuitA);
    circuits.push_back(kCircuitB);
    const std::size_t count = circuits.size();
    std::vector<std::vector<bool>> eq(count, std::vector<bool>(count));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            eq[i][j] = oracle_equivalent(circuits[i], circuits[j]);
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        CHECK(eq[i][i]);
        for (std::size_t j = 0; j < count; ++j) {
            CHECK(eq[i][j] == eq[j][i]);
            for (std::size_t k = 0; k < count; ++k) {
                if (eq[i][j] && eq[j][k]) {
                    CHECK(eq[i][k]);
                }
            }
        }
    }
}

TEST_CASE("oracle_conjugate golden cases") {
    const auto zz = oracle_conjugate(kCircuitA, PauliString::from_text("+ZI"));
    CHECK(zz.to_pauli_string().str() == "+ZZ");

    const auto same = oracle_conjugate(Circuit(3), PauliString::from_text("-XYZ"));
    CHECK(same.to_pauli_string().str() == "-XYZ");

    const auto yy = oracle_conjugate(Circuit(2, {Gate::cnot(0, 1)}), PauliString::from_text("+YY"));
    CHECK(yy.to_pauli_string().str() == "-XZ");
}

TEST_CASE("basis state outputs of circuit A") {
    const auto u = dense_unitary(kCircuitA);
    const auto out00 = apply_to_basis_state(u, 0);
    CHECK(std::abs(out00[0] - 1.0) < 1e-9);
    // |01> maps to |11> under the inverted CNOT
    const auto out01 = apply_to_basis_state(u, 1);
    CHECK(std::abs(out01[3] - 1.0) < 1e-9);
    const auto plus = apply_to_plus_state(u);
    for (const auto& amp : plus) {
        CHECK(std::abs(amp - 0.5) < 1e-9);
    }
}

}  // TEST_SUITE
