#include "cliffeq/reference.hpp"

#include <stdexcept>

namespace cliffeq {

std::vector<PauliString> basis_rows(std::uint32_t n, BasisKind kind) {
    std::vector<PauliString> rows;
    rows.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        PauliString p(n);
        if (kind == BasisKind::Z) {
            p.set_z(i, true);
        } else {
            p.set_x(i, true);
        }
        rows.push_back(std::move(p));
    }
    return rows;
}

std::vector<PauliString> reference_rows(const Circuit& c, BasisKind kind) {
    if (!c.is_lowered()) {
        throw std::invalid_argument("reference_rows: circuit must be lowered to H/S/CNOT");
    }
    std::vector<PauliString> rows = basis_rows(c.n, kind);
    for (const Gate& g : c.gates) {
        for (PauliString& row : rows) {
            conjugate_by_gate_in_place(row, g);
        }
    }
    return rows;
}

}  // namespace cliffeq
