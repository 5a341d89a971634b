#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliffeq {

enum class GateKind : std::uint8_t {
    H,
    S,
    SDG,
    X,
    Y,
    Z,
    CNOT,
    CZ,
    SWAP,
};

bool is_two_qubit(GateKind k);
bool is_elementary(GateKind k);  // H, S or CNOT
std::string_view gate_name(GateKind k);

struct Gate {
    GateKind kind;
    std::uint32_t q0;
    std::uint32_t q1;  // second operand of two-qubit gates, else unused

    static Gate h(std::uint32_t q) { return {GateKind::H, q, 0}; }
    static Gate s(std::uint32_t q) { return {GateKind::S, q, 0}; }
    static Gate single(GateKind k, std::uint32_t q) { return {k, q, 0}; }
    // q0 is the control, q1 the target.
    static Gate cnot(std::uint32_t c, std::uint32_t t) { return {GateKind::CNOT, c, t}; }
    static Gate two(GateKind k, std::uint32_t a, std::uint32_t b) { return {k, a, b}; }

    bool operator==(const Gate& other) const = default;
};

// Ordered gate list over n qubits.  List order is application order; the
// circuit's unitary is the reversed matrix product g_m * ... * g_1.
struct Circuit {
    std::uint32_t n = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::uint32_t num_qubits) : n(num_qubits) {}
    Circuit(std::uint32_t num_qubits, std::vector<Gate> gs) : n(num_qubits), gates(std::move(gs)) {}

    std::size_t size() const { return gates.size(); }
    bool is_lowered() const;

    bool operator==(const Circuit& other) const = default;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Parses the .cqc text format and lowers extended gates to {H, S, CNOT}.
// Throws ParseError with a 1-based line number on malformed input.
Circuit parse(std::string_view text);

// Canonical .cqc text.  parse(serialize(c)) == c for lowered circuits.
std::string serialize(const Circuit& c);

// Rewrites extended gates in place as H/S/CNOT sequences, equivalent up to
// global phase:
//   SDG -> S S S          X -> H S S H        Z -> S S
//   Y   -> S S H S S H    CZ -> H(t) CNOT H(t) SWAP -> 3 CNOTs
Circuit lower(const Circuit& c);

// Reversed gate list with each gate replaced by its inverse (H and CNOT are
// involutions, S inverts as S S S).  Requires a lowered circuit.
Circuit inverse(const Circuit& c);

Circuit concat(const Circuit& a, const Circuit& b);

// Number of elementary gates after lowering.
std::size_t gate_count(const Circuit& c);

void validate(const Circuit& c);  // throws std::invalid_argument on bad indices

}  // namespace cliffeq
