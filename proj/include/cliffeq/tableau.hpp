#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffeq/bitvec.hpp"
#include "cliffeq/circuit.hpp"
#include "cliffeq/pauli.hpp"

namespace cliffeq {

enum class BasisKind : std::uint8_t { Z, X };

struct TableauMismatch {
    std::uint32_t generator;
    PauliString lhs;
    PauliString rhs;
};

// n stabilizer generators over n qubits, stored column-major: per qubit one
// packed x-column and one packed z-column over the generators, plus a packed
// sign vector (bit i set means generator i carries -1).  Gate application is
// word-parallel over the generators and touches only the gate's columns.
//
// Columns start out unmaterialized and behave as the basis default until a
// gate first touches them: row i of a fresh Z-basis tableau is +Z_i, of a
// fresh X-basis tableau +X_i.  Construction is O(n); the n^2-bit body is
// paid for column by column as gates arrive.
class StabilizerTableau {
  public:
    StabilizerTableau(std::uint32_t n, BasisKind kind);

    // Fully materialized tableau with the given rows (row k must be an
    // n-qubit Pauli string for n rows).  Intended for tests and debugging.
    static StabilizerTableau from_rows(const std::vector<PauliString>& rows,
                                       BasisKind kind = BasisKind::Z);

    std::uint32_t num_qubits() const { return n_; }
    BasisKind basis() const { return kind_; }

    void apply_h(std::uint32_t j);
    void apply_s(std::uint32_t j);
    void apply_cnot(std::uint32_t c, std::uint32_t t);

    // Gates in list order.  Requires a lowered circuit of matching width.
    void apply_circuit(const Circuit& c);

    // Row i as a Pauli string, reading unmaterialized columns as their
    // basis default.  Does not mutate lazy state.
    PauliString row(std::uint32_t i) const;

    bool sign(std::uint32_t i) const;
    void toggle_sign(std::uint32_t i);

    bool column_materialized(std::uint32_t j) const;
    void materialize_all();

    // One row per line in the "+XZIY" format, generator 0 first.
    std::string str() const;

    // Test instrumentation: when installed, every column write and sign
    // write is counted.  Not used on any hot path beyond a null check.
    struct WriteProbe {
        std::vector<std::uint32_t> column_writes;
        std::uint64_t sign_writes = 0;
    };
    void set_write_probe(WriteProbe* probe) { probe_ = probe; }

    friend std::optional<TableauMismatch> tableau_equal(const StabilizerTableau& a,
                                                        const StabilizerTableau& b);

  private:
    struct Column {
        std::vector<word_t> x;
        std::vector<word_t> z;
    };

    void materialize(std::uint32_t j);
    void require_qubit(std::uint32_t j) const;
    word_t default_x_word(std::uint32_t j, std::size_t w) const;
    word_t default_z_word(std::uint32_t j, std::size_t w) const;
    void record_write(std::uint32_t j);

    std::uint32_t n_;
    std::size_t words_;
    BasisKind kind_;
    std::vector<Column> cols_;
    std::vector<std::uint8_t> init_;
    std::vector<word_t> signs_;
    WriteProbe* probe_ = nullptr;
};

// None iff every row of a equals the same row of b, sign included.
// Otherwise the smallest mismatching generator index with both rows.
// Unmaterialized columns are compared by their default values without
// materializing anything.  Requires equal width and basis kind.
std::optional<TableauMismatch> tableau_equal(const StabilizerTableau& a,
                                             const StabilizerTableau& b);

}  // namespace cliffeq
