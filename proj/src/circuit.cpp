#include "cliffeq/circuit.hpp"

#include <charconv>
#include <sstream>

namespace cliffeq {

bool is_two_qubit(GateKind k) {
    return k == GateKind::CNOT || k == GateKind::CZ || k == GateKind::SWAP;
}

bool is_elementary(GateKind k) {
    return k == GateKind::H || k == GateKind::S || k == GateKind::CNOT;
}

std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::SDG: return "SDG";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

bool Circuit::is_lowered() const {
    for (const Gate& g : gates) {
        if (!is_elementary(g.kind)) return false;
    }
    return true;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::uint32_t parse_index(std::string_view field, std::size_t line_no, const char* what) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line_no, std::string("invalid ") + what + ": '" + std::string(field) + "'");
    }
    return value;
}

bool lookup_gate(std::string_view name, GateKind& kind) {
    static constexpr std::pair<std::string_view, GateKind> table[] = {
        {"H", GateKind::H},   {"S", GateKind::S},     {"SDG", GateKind::SDG},
        {"X", GateKind::X},   {"Y", GateKind::Y},     {"Z", GateKind::Z},
        {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ}, {"SWAP", GateKind::SWAP},
    };
    for (const auto& [n, k] : table) {
        if (n == name) {
            kind = k;
            return true;
        }
    }
    return false;
}

void lower_into(const Gate& g, std::vector<Gate>& out) {
    switch (g.kind) {
        case GateKind::H:
        case GateKind::S:
        case GateKind::CNOT:
            out.push_back(g);
            break;
        case GateKind::SDG:
            out.push_back(Gate::s(g.q0));
            out.push_back(Gate::s(g.q0));
            out.push_back(Gate::s(g.q0));
            break;
        case GateKind::Z:
            out.push_back(Gate::s(g.q0));
            out.push_back(Gate::s(g.q0));
            break;
        case GateKind::X:
            out.push_back(Gate::h(g.q0));
            out.push_back(Gate::s(g.q0));
            out.push_back(Gate::s(g.q0));
            out.push_back(Gate::h(g.q0));
            break;
        case GateKind::Y:
            // Z then X; the leftover global phase is dropped.
            lower_into(Gate::single(GateKind::Z, g.q0), out);
            lower_into(Gate::single(GateKind::X, g.q0), out);
            break;
        case GateKind::CZ:
            out.push_back(Gate::h(g.q1));
            out.push_back(Gate::cnot(g.q0, g.q1));
            out.push_back(Gate::h(g.q1));
            break;
        case GateKind::SWAP:
            out.push_back(Gate::cnot(g.q0, g.q1));
            out.push_back(Gate::cnot(g.q1, g.q0));
            out.push_back(Gate::cnot(g.q0, g.q1));
            break;
    }
}

}  // namespace

Circuit parse(std::string_view text) {
    Circuit c;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (!have_header) {
            if (fields[0] != "qubits") {
                throw ParseError(line_no, "expected 'qubits <N>' header, got '" + std::string(fields[0]) + "'");
            }
            if (fields.size() != 2) {
                throw ParseError(line_no, "header takes exactly one argument");
            }
            c.n = parse_index(fields[1], line_no, "qubit count");
            if (c.n < 1) {
                throw ParseError(line_no, "qubit count must be at least 1");
            }
            have_header = true;
            continue;
        }

        GateKind kind;
        if (!lookup_gate(fields[0], kind)) {
            throw ParseError(line_no, "unknown gate name: '" + std::string(fields[0]) + "'");
        }
        const std::size_t arity = is_two_qubit(kind) ? 2 : 1;
        if (fields.size() != 1 + arity) {
            throw ParseError(line_no, std::string(gate_name(kind)) + " takes " + std::to_string(arity) +
                                          " qubit argument" + (arity == 2 ? "s" : ""));
        }
        Gate g{kind, parse_index(fields[1], line_no, "qubit index"), 0};
        if (arity == 2) {
            g.q1 = parse_index(fields[2], line_no, "qubit index");
            if (g.q0 == g.q1) {
                throw ParseError(line_no, "duplicate qubit indices");
            }
        }
        if (g.q0 >= c.n || (arity == 2 && g.q1 >= c.n)) {
            throw ParseError(line_no, "qubit index out of range (circuit has " + std::to_string(c.n) + " qubits)");
        }
        lower_into(g, c.gates);
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'qubits <N>' header");
    }
    return c;
}

std::string serialize(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n << "\n";
    for (const Gate& g : c.gates) {
        out << gate_name(g.kind) << " " << g.q0;
        if (is_two_qubit(g.kind)) {
            out << " " << g.q1;
        }
        out << "\n";
    }
    return out.str();
}

Circuit lower(const Circuit& c) {
    Circuit out(c.n);
    out.gates.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        lower_into(g, out.gates);
    }
    return out;
}

Circuit inverse(const Circuit& c) {
    if (!c.is_lowered()) {
        throw std::invalid_argument("inverse: circuit must be lowered first");
    }
    Circuit out(c.n);
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        switch (it->kind) {
            case GateKind::H:
            case GateKind::CNOT:
                out.gates.push_back(*it);
                break;
            case GateKind::S:
                out.gates.push_back(*it);
                out.gates.push_back(*it);
                out.gates.push_back(*it);
                break;
            default:
                break;  // unreachable, circuit is lowered
        }
    }
    return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (a.n != b.n) {
        throw std::invalid_argument("concat: qubit counts differ");
    }
    Circuit out = a;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    return out;
}

std::size_t gate_count(const Circuit& c) {
    if (c.is_lowered()) {
        return c.gates.size();
    }
    return lower(c).gates.size();
}

void validate(const Circuit& c) {
    if (c.n < 1) {
        throw std::invalid_argument("circuit must have at least one qubit");
    }
    for (const Gate& g : c.gates) {
        if (g.q0 >= c.n || (is_two_qubit(g.kind) && g.q1 >= c.n)) {
            throw std::invalid_argument("gate qubit index out of range");
        }
        if (is_two_qubit(g.kind) && g.q0 == g.q1) {
            throw std::invalid_argument("two-qubit gate with duplicate indices");
        }
    }
}

}  // namespace cliffeq
