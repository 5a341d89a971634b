#include <doctest.h>

#include <sstream>

#include "cliffeq/bench.hpp"

using namespace cliffeq;

TEST_SUITE("bench") {

TEST_CASE("median") {
    CHECK(median({3.0}) == 3.0);
    CHECK(median({5.0, 1.0, 3.0}) == 3.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK_THROWS_AS(median({}), std::invalid_argument);
}

TEST_CASE("argument validation") {
    GenConfig fixed;
    CHECK_THROWS_AS(run_sweep(SweepAxis::qubits, {4, 2}, fixed, 3), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(SweepAxis::qubits, {2, 4}, fixed, 2), std::invalid_argument);
}

TEST_CASE("smoke sweep populates records and streams them in order") {
    GenConfig fixed;
    fixed.depth = 1;
    fixed.seed = 5;

    std::vector<BenchRecord> streamed;
    const auto records = run_sweep(SweepAxis::qubits, {2, 3}, fixed, 3,
                                   [&](const BenchRecord& r) { streamed.push_back(r); });
    REQUIRE(records.size() == 4);  // two values x two pair kinds
    REQUIRE(streamed.size() == 4);

    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& rec = records[k];
        CHECK(rec.depth == 1);
        CHECK(rec.reps == 3);
        CHECK(rec.m > 0);
        CHECK(rec.wall_ms >= 0.0);
        // verdict must match the label the generator promised
        if (rec.pair_kind == PairKind::equivalent) {
            CHECK(rec.verdict == Verdict::equivalent);
        } else {
            CHECK(rec.verdict == Verdict::not_equivalent);
        }
        CHECK(streamed[k].n == rec.n);
        CHECK(streamed[k].pair_kind == rec.pair_kind);
    }
    CHECK(records[0].n == 2);
    CHECK(records[2].n == 3);
}

TEST_CASE("depth axis sweeps depth") {
    GenConfig fixed;
    fixed.n = 3;
    fixed.seed = 8;
    const auto records = run_sweep(SweepAxis::depth, {1, 2}, fixed, 3);
    REQUIRE(records.size() == 4);
    CHECK(records[0].depth == 1);
    CHECK(records[0].n == 3);
    CHECK(records[2].depth == 2);
}

TEST_CASE("records are deterministic apart from timing") {
    GenConfig fixed;
    fixed.depth = 2;
    fixed.seed = 11;
    const auto first = run_sweep(SweepAxis::qubits, {2, 4}, fixed, 3);
    const auto second = run_sweep(SweepAxis::qubits, {2, 4}, fixed, 3);
    REQUIRE(first.size() == second.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
        CHECK(first[k].n == second[k].n);
        CHECK(first[k].depth == second[k].depth);
        CHECK(first[k].m == second[k].m);
        CHECK(first[k].pair_kind == second[k].pair_kind);
        CHECK(first[k].verdict == second[k].verdict);
        CHECK(first[k].seed == second[k].seed);
    }
}

TEST_CASE("csv format") {
    CHECK(csv_header() == "n,depth,m,pair_kind,verdict,wall_ms,reps,seed");
    BenchRecord rec;
    rec.n = 4;
    rec.depth = 10;
    rec.m = 62;
    rec.pair_kind = PairKind::nonequivalent;
    rec.verdict = Verdict::not_equivalent;
    rec.wall_ms = 0.25;
    rec.reps = 5;
    rec.seed = 7;
    CHECK(csv_row(rec) == "4,10,62,nonequivalent,not_equivalent,0.25,5,7");
}

}  // TEST_SUITE
