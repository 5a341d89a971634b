#include <doctest.h>

#include "cliffeq/circuit.hpp"
#include "cliffeq/equivalence.hpp"
#include "cliffeq/oracle.hpp"
#include "cliffeq/randgen.hpp"

using namespace cliffeq;

namespace {

constexpr const char* kTextA = "qubits 2\nH 0\nH 1\nCNOT 0 1\nH 0\nH 1\n";

std::size_t parse_error_line(const char* text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("parse circuit A") {
    const Circuit a = parse(kTextA);
    CHECK(a.n == 2);
    REQUIRE(a.gates.size() == 5);
    CHECK(a.gates[0] == Gate::h(0));
    CHECK(a.gates[1] == Gate::h(1));
    CHECK(a.gates[2] == Gate::cnot(0, 1));
    CHECK(a.gates[3] == Gate::h(0));
    CHECK(a.gates[4] == Gate::h(1));
}

TEST_CASE("parse inverted CNOT and comments") {
    const Circuit b = parse("# inverted\n\nqubits 2\nCNOT 1 0  # control on qubit 1\n");
    CHECK(b.n == 2);
    REQUIRE(b.gates.size() == 1);
    CHECK(b.gates[0] == Gate::cnot(1, 0));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("qubits 1\nCNOT 0 0\n") == 2);        // duplicate indices
    CHECK(parse_error_line("qubits 2\nFOO 0\n") == 2);           // unknown gate
    CHECK(parse_error_line("qubits 2\nH 0 1\n") == 2);           // bad arity
    CHECK(parse_error_line("qubits 2\nCNOT 0\n") == 2);          // bad arity
    CHECK(parse_error_line("qubits 2\n\n\nH 5\n") == 4);         // index out of range
    CHECK(parse_error_line("H 0\n") == 1);                       // missing header
    CHECK(parse_error_line("qubits zero\n") == 1);               // invalid header
    CHECK(parse_error_line("qubits 0\n") == 1);                  // zero qubits
    CHECK(parse_error_line("") > 0);                             // empty file
    CHECK(parse_error_line("qubits 2\nH x\n") == 2);             // non-numeric index
}

TEST_CASE("serialize round-trips") {
    for (const char* text : {kTextA, "qubits 2\nCNOT 1 0\n", "qubits 3\n"}) {
        const Circuit c = parse(text);
        CHECK(parse(serialize(c)) == c);
    }
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        GenConfig cfg;
        cfg.n = 1 + static_cast<std::uint32_t>(rng.below(8));
        cfg.depth = 1 + static_cast<std::uint32_t>(rng.below(12));
        cfg.seed = rng.next();
        const Circuit c = gen_filled(cfg);
        CHECK(parse(serialize(c)) == c);
    }
}

TEST_CASE("extended gates lower at parse time") {
    const Circuit c = parse("qubits 2\nSDG 0\nX 1\nZ 0\nY 1\nCZ 0 1\nSWAP 0 1\n");
    CHECK(c.is_lowered());
    // SDG:3, X:4, Z:2, Y:6, CZ:3, SWAP:3
    CHECK(c.gates.size() == 21);
}

TEST_CASE("every lowering preserves the unitary up to phase") {
    struct Case {
        GateKind kind;
        std::uint32_t q0, q1;
    };
    const Case cases[] = {
        {GateKind::SDG, 0, 0}, {GateKind::X, 1, 0},    {GateKind::Y, 0, 0},
        {GateKind::Z, 1, 0},   {GateKind::CZ, 0, 1},   {GateKind::SWAP, 1, 0},
        {GateKind::CZ, 2, 0},  {GateKind::SWAP, 0, 2},
    };
    for (const auto& kase : cases) {
        Circuit original(3);
        if (is_two_qubit(kase.kind)) {
            original.gates.push_back(Gate::two(kase.kind, kase.q0, kase.q1));
        } else {
            original.gates.push_back(Gate::single(kase.kind, kase.q0));
        }
        const Circuit lowered = lower(original);
        CHECK(lowered.is_lowered());
        CAPTURE(gate_name(kase.kind));
        CHECK(oracle_equivalent(lowered, original));
    }
}

TEST_CASE("gate_count counts lowered gates") {
    CHECK(gate_count(parse(kTextA)) == 5);
    CHECK(gate_count(Circuit(2)) == 0);
    CHECK(gate_count(parse("qubits 1\nX 0\n")) == 4);
    CHECK(gate_count(Circuit(1, {Gate::single(GateKind::X, 0)})) == 4);
}

TEST_CASE("inverse golden cases") {
    const Circuit h(1, {Gate::h(0)});
    CHECK(inverse(h) == h);

    const Circuit s(1, {Gate::s(0)});
    const Circuit s3(1, {Gate::s(0), Gate::s(0), Gate::s(0)});
    CHECK(inverse(s) == s3);

    const Circuit a = parse(kTextA);
    Circuit reversed(2, {Gate::h(1), Gate::h(0), Gate::cnot(0, 1), Gate::h(1), Gate::h(0)});
    CHECK(inverse(a) == reversed);
    CHECK(oracle_equivalent(inverse(a), a));  // A is self-inverse

    CHECK_THROWS_AS(inverse(Circuit(1, {Gate::single(GateKind::X, 0)})), std::invalid_argument);
}

TEST_CASE("circuit followed by its inverse is the identity") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        GenConfig cfg;
        cfg.n = 1 + static_cast<std::uint32_t>(rng.below(6));
        cfg.depth = 1 + static_cast<std::uint32_t>(rng.below(10));
        cfg.seed = rng.next();
        const Circuit c = gen_filled(cfg);
        CHECK(check_equivalence(concat(c, inverse(c)), Circuit(cfg.n)).equivalent());
        CHECK(check_identity(concat(c, inverse(c))).equivalent());
    }
}

TEST_CASE("validate rejects malformed circuits") {
    CHECK_THROWS_AS(validate(Circuit(0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(Circuit(1, {Gate::h(1)})), std::invalid_argument);
    CHECK_THROWS_AS(validate(Circuit(2, {Gate::cnot(1, 1)})), std::invalid_argument);
    CHECK_NOTHROW(validate(parse(kTextA)));
}

}  // TEST_SUITE
