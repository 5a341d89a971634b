#include "cliffeq/tableau.hpp"

#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliffeq {

namespace {

// Below this many column words the comparison runs serially; the parallel
// path only pays off once the tableau body stops fitting in cache.
constexpr std::size_t kParallelCompareWords = 1u << 20;

}  // namespace

StabilizerTableau::StabilizerTableau(std::uint32_t n, BasisKind kind)
    : n_(n), words_(words_for(n)), kind_(kind), cols_(n), init_(n, 0), signs_(words_for(n), 0) {
    if (n == 0) {
        throw std::invalid_argument("StabilizerTableau needs at least one qubit");
    }
}

StabilizerTableau StabilizerTableau::from_rows(const std::vector<PauliString>& rows, BasisKind kind) {
    if (rows.empty()) {
        throw std::invalid_argument("from_rows: need at least one row");
    }
    const auto n = static_cast<std::uint32_t>(rows.size());
    StabilizerTableau t(n, kind);
    t.materialize_all();
    for (std::uint32_t i = 0; i < n; ++i) {
        if (rows[i].num_qubits() != n) {
            throw std::invalid_argument("from_rows: rows must form a square tableau");
        }
        for (std::uint32_t j = 0; j < n; ++j) {
            set_bit(t.cols_[j].x, i, rows[i].x(j));
            set_bit(t.cols_[j].z, i, rows[i].z(j));
        }
        set_bit(t.signs_, i, rows[i].negative());
    }
    return t;
}

word_t StabilizerTableau::default_x_word(std::uint32_t j, std::size_t w) const {
    if (kind_ == BasisKind::X && w == j / kWordBits) {
        return word_t{1} << (j % kWordBits);
    }
    return 0;
}

word_t StabilizerTableau::default_z_word(std::uint32_t j, std::size_t w) const {
    if (kind_ == BasisKind::Z && w == j / kWordBits) {
        return word_t{1} << (j % kWordBits);
    }
    return 0;
}

void StabilizerTableau::materialize(std::uint32_t j) {
    if (init_[j]) return;
    Column& col = cols_[j];
    col.x.assign(words_, 0);
    col.z.assign(words_, 0);
    if (kind_ == BasisKind::Z) {
        set_bit(col.z, j, true);
    } else {
        set_bit(col.x, j, true);
    }
    init_[j] = 1;
}

void StabilizerTableau::materialize_all() {
    for (std::uint32_t j = 0; j < n_; ++j) {
        materialize(j);
    }
}

bool StabilizerTableau::column_materialized(std::uint32_t j) const {
    require_qubit(j);
    return init_[j] != 0;
}

void StabilizerTableau::require_qubit(std::uint32_t j) const {
    if (j >= n_) {
        throw std::out_of_range("tableau: qubit index out of range");
    }
}

void StabilizerTableau::record_write(std::uint32_t j) {
    if (probe_) {
        if (probe_->column_writes.size() < n_) {
            probe_->column_writes.resize(n_, 0);
        }
        ++probe_->column_writes[j];
    }
}

void StabilizerTableau::apply_h(std::uint32_t j) {
    require_qubit(j);
    materialize(j);
    record_write(j);
    if (probe_) ++probe_->sign_writes;
    Column& col = cols_[j];
    word_t* __restrict x = col.x.data();
    word_t* __restrict z = col.z.data();
    word_t* __restrict s = signs_.data();
#pragma omp simd
    for (std::size_t w = 0; w < words_; ++w) {
        s[w] ^= x[w] & z[w];
    }
    col.x.swap(col.z);
}

void StabilizerTableau::apply_s(std::uint32_t j) {
    require_qubit(j);
    materialize(j);
    record_write(j);
    if (probe_) ++probe_->sign_writes;
    Column& col = cols_[j];
    const word_t* __restrict x = col.x.data();
    word_t* __restrict z = col.z.data();
    word_t* __restrict s = signs_.data();
#pragma omp simd
    for (std::size_t w = 0; w < words_; ++w) {
        s[w] ^= x[w] & z[w];
        z[w] ^= x[w];
    }
}

void StabilizerTableau::apply_cnot(std::uint32_t c, std::uint32_t t) {
    require_qubit(c);
    require_qubit(t);
    if (c == t) {
        throw std::invalid_argument("tableau: CNOT control and target must differ");
    }
    materialize(c);
    materialize(t);
    record_write(c);
    record_write(t);
    if (probe_) ++probe_->sign_writes;
    const word_t* __restrict xc = cols_[c].x.data();
    word_t* __restrict zc = cols_[c].z.data();
    word_t* __restrict xt = cols_[t].x.data();
    const word_t* __restrict zt = cols_[t].z.data();
    word_t* __restrict s = signs_.data();
#pragma omp simd
    for (std::size_t w = 0; w < words_; ++w) {
        s[w] ^= xc[w] & zt[w] & ~(xt[w] ^ zc[w]);
        xt[w] ^= xc[w];
        zc[w] ^= zt[w];
    }
}

void StabilizerTableau::apply_circuit(const Circuit& c) {
    if (c.n != n_) {
        throw std::invalid_argument("apply_circuit: circuit width differs from tableau width");
    }
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: apply_h(g.q0); break;
            case GateKind::S: apply_s(g.q0); break;
            case GateKind::CNOT: apply_cnot(g.q0, g.q1); break;
            default:
                throw std::invalid_argument("apply_circuit: circuit must be lowered to H/S/CNOT");
        }
    }
}

PauliString StabilizerTableau::row(std::uint32_t i) const {
    if (i >= n_) {
        throw std::out_of_range("tableau: generator index out of range");
    }
    PauliString p(n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
        bool xb, zb;
        if (init_[j]) {
            xb = get_bit(cols_[j].x, i);
            zb = get_bit(cols_[j].z, i);
        } else {
            xb = kind_ == BasisKind::X && i == j;
            zb = kind_ == BasisKind::Z && i == j;
        }
        p.set_x(j, xb);
        p.set_z(j, zb);
    }
    p.set_negative(get_bit(signs_, i));
    return p;
}

bool StabilizerTableau::sign(std::uint32_t i) const {
    if (i >= n_) {
        throw std::out_of_range("tableau: generator index out of range");
    }
    return get_bit(signs_, i);
}

void StabilizerTableau::toggle_sign(std::uint32_t i) {
    if (i >= n_) {
        throw std::out_of_range("tableau: generator index out of range");
    }
    toggle_bit(signs_, i);
}

std::string StabilizerTableau::str() const {
    std::string out;
    out.reserve((n_ + 2) * static_cast<std::size_t>(n_));
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) out.push_back('\n');
        out += row(i).str();
    }
    return out;
}

std::optional<TableauMismatch> tableau_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (a.n_ != b.n_ || a.kind_ != b.kind_) {
        throw std::invalid_argument("tableau_equal: tableaux must share width and basis kind");
    }
    const std::uint32_t n = a.n_;
    const std::size_t words = a.words_;

    std::vector<word_t> mism(words, 0);
    const bool big = static_cast<std::size_t>(n) * words >= kParallelCompareWords;

#pragma omp parallel if (big)
    {
        std::vector<word_t> local(words, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t sj = 0; sj < static_cast<std::int64_t>(n); ++sj) {
            const auto j = static_cast<std::uint32_t>(sj);
            const bool ia = a.init_[j], ib = b.init_[j];
            if (!ia && !ib) continue;  // both default, same kind: equal
            if (ia && ib) {
                const word_t* ax = a.cols_[j].x.data();
                const word_t* az = a.cols_[j].z.data();
                const word_t* bx = b.cols_[j].x.data();
                const word_t* bz = b.cols_[j].z.data();
                for (std::size_t w = 0; w < words; ++w) {
                    local[w] |= (ax[w] ^ bx[w]) | (az[w] ^ bz[w]);
                }
            } else {
                const StabilizerTableau& m = ia ? a : b;       // materialized side
                const StabilizerTableau& d = ia ? b : a;       // default side
                const word_t* mx = m.cols_[j].x.data();
                const word_t* mz = m.cols_[j].z.data();
                for (std::size_t w = 0; w < words; ++w) {
                    local[w] |= (mx[w] ^ d.default_x_word(j, w)) | (mz[w] ^ d.default_z_word(j, w));
                }
            }
        }
#pragma omp critical
        for (std::size_t w = 0; w < words; ++w) {
            mism[w] |= local[w];
        }
    }

    for (std::size_t w = 0; w < words; ++w) {
        mism[w] |= a.signs_[w] ^ b.signs_[w];
    }

    for (std::size_t w = 0; w < words; ++w) {
        if (mism[w]) {
            const auto i = static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(mism[w]));
            return TableauMismatch{i, a.row(i), b.row(i)};
        }
    }
    return std::nullopt;
}

}  // namespace cliffeq
