#include "cliffeq/equivalence.hpp"

#include <chrono>
#include <exception>

#include <json.hpp>

#include "cliffeq/reference.hpp"

namespace cliffeq {

namespace {

using steady = std::chrono::steady_clock;

// Forking a parallel region costs tens of microseconds; below this many
// estimated column-word operations the serial path is faster and quieter.
constexpr std::size_t kParallelWorkFloor = std::size_t{1} << 16;

bool worth_parallelizing(const CheckOptions& opts, std::size_t total_gates, std::uint32_t n) {
    return opts.parallel && total_gates * words_for(n) >= kParallelWorkFloor;
}

double elapsed_ms(steady::time_point start) {
    return std::chrono::duration<double, std::milli>(steady::now() - start).count();
}

StabilizerTableau simulate(const Circuit& c, BasisKind kind, bool use_reference) {
    if (use_reference) {
        return StabilizerTableau::from_rows(reference_rows(c, kind), kind);
    }
    StabilizerTableau t(c.n, kind);
    t.apply_circuit(c);
    return t;
}

struct SimJob {
    const Circuit* circuit;
    BasisKind kind;
};

// Runs the jobs, each into its own tableau.  Exceptions are collected and
// rethrown after the region so they cannot escape an OpenMP worker.
std::vector<StabilizerTableau> run_jobs(const std::vector<SimJob>& jobs, bool parallel,
                                        bool use_reference) {
    std::vector<std::optional<StabilizerTableau>> slots(jobs.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(jobs.size()); ++k) {
        try {
            slots[k].emplace(simulate(*jobs[k].circuit, jobs[k].kind, use_reference));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<StabilizerTableau> out;
    out.reserve(jobs.size());
    for (auto& slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

std::optional<Witness> pick_witness(const std::optional<TableauMismatch>& z_mismatch,
                                    const std::optional<TableauMismatch>& x_mismatch) {
    if (z_mismatch) {
        return Witness{BasisKind::Z, z_mismatch->generator, z_mismatch->lhs, z_mismatch->rhs};
    }
    if (x_mismatch) {
        return Witness{BasisKind::X, x_mismatch->generator, x_mismatch->lhs, x_mismatch->rhs};
    }
    return std::nullopt;
}

EquivalenceResult finish(std::uint32_t n, std::size_t m_u, std::size_t m_v,
                         std::optional<Witness> witness, steady::time_point start) {
    EquivalenceResult r;
    r.n = n;
    r.m_u = m_u;
    r.m_v = m_v;
    r.witness = std::move(witness);
    r.verdict = r.witness ? Verdict::not_equivalent : Verdict::equivalent;
    r.time_ms = elapsed_ms(start);
    return r;
}

}  // namespace

EquivalenceResult check_equivalence(const Circuit& u, const Circuit& v, const CheckOptions& options) {
    if (u.n != v.n) {
        throw std::invalid_argument("check_equivalence: circuit widths differ (" +
                                    std::to_string(u.n) + " vs " + std::to_string(v.n) + ")");
    }
    if (u.n < 1) {
        throw std::invalid_argument("check_equivalence: circuits must have at least one qubit");
    }
    if (!u.is_lowered() || !v.is_lowered()) {
        throw std::invalid_argument("check_equivalence: circuits must be lowered to H/S/CNOT");
    }

    const auto start = steady::now();
    const std::vector<SimJob> jobs = {
        {&u, BasisKind::Z}, {&v, BasisKind::Z}, {&u, BasisKind::X}, {&v, BasisKind::X}};
    std::vector<StabilizerTableau> tabs = run_jobs(
        jobs, worth_parallelizing(options, u.gates.size() + v.gates.size(), u.n),
        options.use_reference_engine);

    const auto z_mismatch = tableau_equal(tabs[0], tabs[1]);
    const auto x_mismatch = tableau_equal(tabs[2], tabs[3]);
    return finish(u.n, u.gates.size(), v.gates.size(), pick_witness(z_mismatch, x_mismatch), start);
}

EquivalenceResult check_identity(const Circuit& u, const CheckOptions& options) {
    if (u.n < 1) {
        throw std::invalid_argument("check_identity: circuit must have at least one qubit");
    }
    if (!u.is_lowered()) {
        throw std::invalid_argument("check_identity: circuit must be lowered to H/S/CNOT");
    }

    const auto start = steady::now();
    const std::vector<SimJob> jobs = {{&u, BasisKind::Z}, {&u, BasisKind::X}};
    std::vector<StabilizerTableau> tabs = run_jobs(
        jobs, worth_parallelizing(options, u.gates.size(), u.n), options.use_reference_engine);

    const StabilizerTableau id_z(u.n, BasisKind::Z);
    const StabilizerTableau id_x(u.n, BasisKind::X);
    const auto z_mismatch = tableau_equal(tabs[0], id_z);
    const auto x_mismatch = tableau_equal(tabs[1], id_x);
    return finish(u.n, u.gates.size(), 0, pick_witness(z_mismatch, x_mismatch), start);
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::equivalent ? "equivalent" : "not_equivalent";
}

std::string_view basis_name(BasisKind k) {
    return k == BasisKind::Z ? "Z" : "X";
}

std::string to_json(const EquivalenceResult& r) {
    nlohmann::json j;
    j["verdict"] = verdict_name(r.verdict);
    if (r.witness) {
        j["witness"] = {
            {"basis", basis_name(r.witness->basis)},
            {"generator", r.witness->generator},
            {"u_pauli", r.witness->u_pauli.str()},
            {"v_pauli", r.witness->v_pauli.str()},
        };
    } else {
        j["witness"] = nullptr;
    }
    j["n"] = r.n;
    j["m_u"] = r.m_u;
    j["m_v"] = r.m_v;
    j["time_ms"] = r.time_ms;
    return j.dump();
}

}  // namespace cliffeq
