// cliffeq: equivalence checking of Clifford circuits from the command line.
//
// Exit codes: 0 = equivalent / success, 1 = not equivalent, 2 = usage,
// parse or width error.  Diagnostics go to stderr; machine output (JSON,
// CSV) goes to stdout or the requested file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffeq/bench.hpp"
#include "cliffeq/circuit.hpp"
#include "cliffeq/equivalence.hpp"
#include "cliffeq/oracle.hpp"
#include "cliffeq/randgen.hpp"

namespace {

constexpr int kExitEquivalent = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cliffeq::Circuit parse_file(const std::string& path) {
    try {
        return cliffeq::parse(read_file(path));
    } catch (const cliffeq::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(path + ": cannot open file for writing");
    }
    out << content;
}

void print_result(const cliffeq::EquivalenceResult& result, bool json) {
    if (json) {
        std::cout << cliffeq::to_json(result) << "\n";
        return;
    }
    if (result.equivalent()) {
        std::cout << "Equivalent\n";
    } else {
        const auto& w = *result.witness;
        std::cout << "NotEquivalent\n"
                  << "witness: basis " << cliffeq::basis_name(w.basis) << ", generator "
                  << w.generator << ": " << w.u_pauli.str() << " vs " << w.v_pauli.str() << "\n";
    }
}

int run_check(const std::string& file_a, const std::string& file_b, bool json) {
    const auto a = parse_file(file_a);
    const auto b = parse_file(file_b);
    const auto result = cliffeq::check_equivalence(a, b);
    print_result(result, json);
    return result.equivalent() ? kExitEquivalent : kExitNotEquivalent;
}

int run_identity(const std::string& file, bool json) {
    const auto c = parse_file(file);
    const auto result = cliffeq::check_identity(c);
    print_result(result, json);
    return result.equivalent() ? kExitEquivalent : kExitNotEquivalent;
}

int run_gen(const cliffeq::GenConfig& cfg, const std::string& stem) {
    using cliffeq::PairKind;
    if (cfg.pair_kind == PairKind::single) {
        write_file(stem + ".cqc", cliffeq::serialize(cliffeq::gen_filled(cfg)));
        return kExitEquivalent;
    }
    const auto [a, b] = cliffeq::gen_pair(cfg);
    write_file(stem + "_a.cqc", cliffeq::serialize(a));
    write_file(stem + "_b.cqc", cliffeq::serialize(b));
    write_file(stem + ".label",
               std::string(cliffeq::pair_kind_name(cfg.pair_kind)) + "\n");
    return kExitEquivalent;
}

int run_oracle(const std::string& file_a, const std::string& file_b) {
    const auto a = parse_file(file_a);
    const auto b = parse_file(file_b);
    const bool eq = cliffeq::oracle_equivalent(a, b);
    std::cout << (eq ? "Equivalent" : "NotEquivalent") << "\n";
    return eq ? kExitEquivalent : kExitNotEquivalent;
}

int run_bench(cliffeq::SweepAxis axis, const std::vector<std::uint32_t>& values,
              std::uint32_t fixed_value, std::uint32_t reps, std::uint64_t seed,
              const std::string& csv_path) {
    cliffeq::GenConfig fixed;
    fixed.seed = seed;
    if (axis == cliffeq::SweepAxis::qubits) {
        fixed.depth = fixed_value;
    } else {
        fixed.n = fixed_value;
    }

    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
        throw std::runtime_error(csv_path + ": cannot open file for writing");
    }
    csv << cliffeq::csv_header() << "\n";
    cliffeq::run_sweep(axis, values, fixed, reps, [&](const cliffeq::BenchRecord& rec) {
        csv << cliffeq::csv_row(rec) << "\n";
        csv.flush();
        std::cerr << "bench: n=" << rec.n << " depth=" << rec.depth << " "
                  << cliffeq::pair_kind_name(rec.pair_kind) << " " << rec.wall_ms << " ms\n";
    });
    return kExitEquivalent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivalence checker for Clifford circuits"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_path;
    bool json = false;

    auto* check = app.add_subcommand("check", "Decide equivalence of two circuits");
    check->add_option("file_a", file_a, ".cqc circuit file")->required();
    check->add_option("file_b", file_b, ".cqc circuit file")->required();
    check->add_flag("--json", json, "machine-readable result on stdout");

    auto* identity = app.add_subcommand("identity", "Check a circuit against the identity");
    identity->add_option("file", file_a, ".cqc circuit file")->required();
    identity->add_flag("--json", json, "machine-readable result on stdout");

    cliffeq::GenConfig cfg;
    std::string kind_str = "single";
    auto* gen = app.add_subcommand("gen", "Generate random filled circuits");
    gen->add_option("--qubits", cfg.n, "qubit count")->required();
    gen->add_option("--depth", cfg.depth, "layers; every qubit gets one gate per layer")->required();
    gen->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
    gen->add_option("--kind", kind_str, "equiv|nonequiv|single")->default_val("single");
    gen->add_option("--out", out_path, "output stem")->required();
    gen->add_option("--insertions", cfg.insertion_count, "edits for equivalent pairs")->default_val(2);
    gen->add_option("--mutations", cfg.mutation_count, "substitutions for nonequivalent pairs")->default_val(1);

    auto* oracle = app.add_subcommand("oracle", "Dense-matrix equivalence (small widths only)");
    oracle->add_option("file_a", file_a, ".cqc circuit file")->required();
    oracle->add_option("file_b", file_b, ".cqc circuit file")->required();

    std::string axis_str;
    std::vector<std::uint32_t> values;
    std::uint32_t fixed_value = 0;
    std::uint32_t reps = 5;
    std::uint64_t bench_seed = 0;
    std::string csv_path;
    auto* bench = app.add_subcommand("bench", "Scaling sweep, CSV output");
    bench->add_option("--axis", axis_str, "qubits|depth")->required()
        ->check(CLI::IsMember({"qubits", "depth"}));
    bench->add_option("--values", values, "sweep values, ascending")->required()->delimiter(',');
    bench->add_option("--fixed", fixed_value, "value of the other axis")->required();
    bench->add_option("--reps", reps, "repetitions per point (median)")->default_val(5);
    bench->add_option("--seed", bench_seed, "64-bit seed")->default_val(0);
    bench->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed()) {
            return run_check(file_a, file_b, json);
        }
        if (identity->parsed()) {
            return run_identity(file_a, json);
        }
        if (gen->parsed()) {
            if (kind_str == "equiv") {
                cfg.pair_kind = cliffeq::PairKind::equivalent;
            } else if (kind_str == "nonequiv") {
                cfg.pair_kind = cliffeq::PairKind::nonequivalent;
            } else if (kind_str == "single") {
                cfg.pair_kind = cliffeq::PairKind::single;
            } else {
                throw std::runtime_error("--kind must be equiv, nonequiv or single");
            }
            return run_gen(cfg, out_path);
        }
        if (oracle->parsed()) {
            return run_oracle(file_a, file_b);
        }
        if (bench->parsed()) {
            const auto axis = axis_str == "qubits" ? cliffeq::SweepAxis::qubits
                                                   : cliffeq::SweepAxis::depth;
            return run_bench(axis, values, fixed_value, reps, bench_seed, csv_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
