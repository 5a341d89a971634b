#include "cliffeq/randgen.hpp"

#include <bit>
#include <stdexcept>

#include "cliffeq/equivalence.hpp"

namespace cliffeq {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr int kNonequivalentRetryBudget = 64;

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) {
        s = splitmix64(x);
    }
}

std::uint64_t Rng::next() {
    // xoshiro256** by Blackman and Vigna
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v > limit);
    return v % bound;
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ull);
    return splitmix64(x);
}

std::string_view pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::equivalent: return "equivalent";
        case PairKind::nonequivalent: return "nonequivalent";
        case PairKind::single: return "single";
    }
    return "?";
}

namespace {

void check_config(const GenConfig& cfg) {
    if (cfg.n < 1 || cfg.depth < 1) {
        throw std::invalid_argument("GenConfig: n and depth must be at least 1");
    }
}

void shuffle(std::vector<std::uint32_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.below(i)]);
    }
}

Circuit filled_circuit(const GenConfig& cfg, Rng& rng) {
    Circuit c(cfg.n);
    c.gates.reserve(static_cast<std::size_t>(cfg.n) * cfg.depth);
    std::vector<std::uint32_t> order(cfg.n);
    for (std::uint32_t d = 0; d < cfg.depth; ++d) {
        for (std::uint32_t q = 0; q < cfg.n; ++q) order[q] = q;
        shuffle(order, rng);
        std::size_t pos = 0;
        while (pos < order.size()) {
            const std::uint32_t q = order[pos];
            const bool has_partner = pos + 1 < order.size();
            switch (rng.below(has_partner ? 3 : 2)) {
                case 0: c.gates.push_back(Gate::h(q)); break;
                case 1: c.gates.push_back(Gate::s(q)); break;
                case 2:
                    c.gates.push_back(Gate::cnot(q, order[pos + 1]));
                    ++pos;  // partner consumed too
                    break;
            }
            ++pos;
        }
    }
    return c;
}

bool disjoint_support(const Gate& a, const Gate& b) {
    const bool a2 = is_two_qubit(a.kind), b2 = is_two_qubit(b.kind);
    if (a.q0 == b.q0) return false;
    if (b2 && a.q0 == b.q1) return false;
    if (a2 && (a.q1 == b.q0 || (b2 && a.q1 == b.q1))) return false;
    return true;
}

void insert_gates(Circuit& c, std::size_t pos, std::initializer_list<Gate> gs) {
    c.gates.insert(c.gates.begin() + static_cast<std::ptrdiff_t>(pos), gs);
}

// One equivalence-preserving edit.  Edit kinds needing two qubits or a
// swappable pair fall back to a self-inverse insertion when impossible.
void apply_equivalence_edit(Circuit& c, Rng& rng) {
    const std::uint32_t n = c.n;
    std::uint64_t kind = rng.below(n >= 2 ? 5 : 4);
    if (kind == 4) {
        // adjacent swap: find a disjoint-support neighbor pair
        if (c.gates.size() >= 2) {
            const std::size_t len = c.gates.size() - 1;
            const std::size_t start = rng.below(len);
            for (std::size_t k = 0; k < len; ++k) {
                const std::size_t i = (start + k) % len;
                if (disjoint_support(c.gates[i], c.gates[i + 1])) {
                    std::swap(c.gates[i], c.gates[i + 1]);
                    return;
                }
            }
        }
        kind = 0;  // no such pair exists; insert H;H instead
    }
    const std::size_t pos = rng.below(c.gates.size() + 1);
    const auto q = static_cast<std::uint32_t>(rng.below(n));
    switch (kind) {
        case 0:
            insert_gates(c, pos, {Gate::h(q), Gate::h(q)});
            break;
        case 1:
            insert_gates(c, pos, {Gate::s(q), Gate::s(q), Gate::s(q), Gate::s(q)});
            break;
        case 2:
            insert_gates(c, pos,
                         {Gate::h(q), Gate::s(q), Gate::h(q), Gate::s(q), Gate::h(q), Gate::s(q)});
            break;
        case 3: {
            if (n >= 2) {
                std::uint32_t t = static_cast<std::uint32_t>(rng.below(n - 1));
                if (t >= q) ++t;
                insert_gates(c, pos, {Gate::cnot(q, t), Gate::cnot(q, t)});
            } else {
                insert_gates(c, pos, {Gate::h(q), Gate::h(q)});
            }
            break;
        }
        default: break;
    }
}

void mutate_gate(Gate& g) {
    switch (g.kind) {
        case GateKind::H: g = Gate::s(g.q0); break;
        case GateKind::S: g = Gate::h(g.q0); break;
        case GateKind::CNOT: g = Gate::cnot(g.q1, g.q0); break;
        default: break;  // generated circuits only contain the three kinds
    }
}

}  // namespace

Circuit gen_filled(const GenConfig& cfg) {
    check_config(cfg);
    Rng rng(Rng::mix(cfg.seed, 0x66696c6c));  // "fill" stream
    return filled_circuit(cfg, rng);
}

std::pair<Circuit, Circuit> gen_equivalent_pair(const GenConfig& cfg) {
    check_config(cfg);
    Circuit base = gen_filled(cfg);
    Circuit edited = base;
    Rng rng(Rng::mix(cfg.seed, 0x65646974));  // "edit" stream
    for (std::uint32_t k = 0; k < cfg.insertion_count; ++k) {
        apply_equivalence_edit(edited, rng);
    }
    return {std::move(base), std::move(edited)};
}

std::pair<Circuit, Circuit> gen_nonequivalent_pair(const GenConfig& cfg) {
    check_config(cfg);
    Circuit base = gen_filled(cfg);
    if (base.gates.empty()) {
        throw std::logic_error("gen_nonequivalent_pair: filled circuit has no gates");
    }
    Rng rng(Rng::mix(cfg.seed, 0x6d757461));  // "muta" stream
    const std::uint32_t mutations =
        std::min<std::uint32_t>(std::max<std::uint32_t>(cfg.mutation_count, 1),
                                static_cast<std::uint32_t>(base.gates.size()));
    for (int attempt = 0; attempt < kNonequivalentRetryBudget; ++attempt) {
        Circuit mutated = base;
        for (std::uint32_t k = 0; k < mutations; ++k) {
            mutate_gate(mutated.gates[rng.below(mutated.gates.size())]);
        }
        if (mutated != base &&
            !check_equivalence(base, mutated).equivalent()) {
            return {std::move(base), std::move(mutated)};
        }
    }
    throw std::runtime_error("gen_nonequivalent_pair: retry budget exhausted; generator bug?");
}

std::pair<Circuit, Circuit> gen_pair(const GenConfig& cfg) {
    switch (cfg.pair_kind) {
        case PairKind::equivalent: return gen_equivalent_pair(cfg);
        case PairKind::nonequivalent: return gen_nonequivalent_pair(cfg);
        case PairKind::single: {
            Circuit c = gen_filled(cfg);
            return {c, c};
        }
    }
    throw std::logic_error("gen_pair: bad pair kind");
}

}  // namespace cliffeq
