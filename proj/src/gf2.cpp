#include "stabsort/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace stabsort {

namespace {

inline int lowest_set_bit(const std::vector<uint64_t>& bits) {
    for (std::size_t w = 0; w < bits.size(); ++w)
        if (bits[w]) return int(w * 64 + std::countr_zero(bits[w]));
    return -1;
}

inline void xor_into(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
    for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

bool Eliminator::add_row(std::vector<uint64_t>& bits, std::vector<uint64_t>* combo_out) {
    std::size_t idx = n_added_++;
    std::vector<uint64_t> combo;
    if (track_) {
        combo.assign((n_added_ + 63) / 64, 0);
        combo[idx / 64] |= uint64_t(1) << (idx % 64);
        for (auto& c : combos_)
            if (c.size() < combo.size()) c.resize(combo.size(), 0);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if ((bits[p / 64] >> (p % 64)) & 1u) {
            xor_into(bits, rows_[r]);
            if (track_) xor_into(combo, combos_[r]);
        }
    }
    int p = lowest_set_bit(bits);
    if (p < 0) {
        if (combo_out) *combo_out = std::move(combo);
        return false;
    }
    // Keep stored rows reduced above the new pivot as well (full RREF-style).
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if ((rows_[r][p / 64] >> (p % 64)) & 1u) {
            xor_into(rows_[r], bits);
            if (track_) xor_into(combos_[r], combo);
        }
    }
    pivots_.push_back(std::size_t(p));
    rows_.push_back(std::move(bits));
    if (track_) combos_.push_back(std::move(combo));
    if (combo_out) combo_out->clear();
    return true;
}

bool Eliminator::reduces_to_zero(std::vector<uint64_t> bits, std::vector<uint64_t>* combo_out) const {
    std::vector<uint64_t> combo;
    if (track_ && combo_out) combo.assign((n_added_ + 63) / 64, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if ((bits[p / 64] >> (p % 64)) & 1u) {
            xor_into(bits, rows_[r]);
            if (track_ && combo_out) {
                for (std::size_t w = 0; w < combos_[r].size() && w < combo.size(); ++w)
                    combo[w] ^= combos_[r][w];
            }
        }
    }
    if (lowest_set_bit(bits) >= 0) return false;
    if (combo_out) *combo_out = std::move(combo);
    return true;
}

BitMatrix Eliminator::basis() const {
    BitMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        std::copy(rows_[r].begin(), rows_[r].end(), m.row(r).begin());
    return m;
}

namespace {

// In-place forward elimination. Returns the pivot columns; on return `m` is
// in row-echelon form with pivot row i in row i.
std::vector<std::size_t> echelonize(BitMatrix& m) {
    const std::size_t words = m.words_per_row();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t cw = c / 64;
        const uint64_t cmask = uint64_t(1) << (c % 64);
        std::size_t pr = r;
        while (pr < m.rows() && !(m.row(pr)[cw] & cmask)) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        auto prow = m.row(r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            auto irow = m.row(i);
            if (irow[cw] & cmask)
                for (std::size_t w = cw; w < words; ++w) irow[w] ^= prow[w];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return echelonize(copy).size();
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const std::size_t n = m.cols();
    BitMatrix e = m;
    std::vector<std::size_t> pivots = echelonize(e);
    // Back-eliminate above each pivot so pivot columns are unit vectors.
    const std::size_t words = e.words_per_row();
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t c = pivots[i];
        const std::size_t cw = c / 64;
        const uint64_t cmask = uint64_t(1) << (c % 64);
        auto prow = e.row(i);
        for (std::size_t j = 0; j < i; ++j) {
            auto jrow = e.row(j);
            if (jrow[cw] & cmask)
                for (std::size_t w = cw; w < words; ++w) jrow[w] ^= prow[w];
        }
    }
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);

    BitMatrix k(n - pivots.size(), n);
    std::size_t out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        k.set(out, c, true);
        // v_c = 1; each pivot variable picks up the entry of column c in its row.
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (e.get(i, c)) k.set(out, pivots[i], true);
        ++out;
    }
    return k;
}

BitMatrix left_kernel(const BitMatrix& m) {
    Eliminator e(m.cols(), /*track_combinations=*/true);
    BitMatrix out(0, m.rows());
    std::vector<uint64_t> scratch, combo;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        scratch.assign(row.begin(), row.end());
        if (!e.add_row(scratch, &combo)) {
            combo.resize((m.rows() + 63) / 64, 0);
            out.append_row({combo.data(), (m.rows() + 63) / 64});
        }
    }
    return out;
}

bool in_rowspace(std::span<const uint64_t> v, const BitMatrix& a, std::vector<uint64_t>* witness) {
    if (v.size() != a.words_per_row() && !(a.cols() == 0 && v.empty()))
        throw std::invalid_argument("in_rowspace: length mismatch");
    Eliminator e(a.cols(), witness != nullptr);
    std::vector<uint64_t> scratch;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        scratch.assign(row.begin(), row.end());
        e.add_row(scratch);
    }
    scratch.assign(v.begin(), v.end());
    if (!e.reduces_to_zero(scratch, witness)) return false;
    if (witness) witness->resize((a.rows() + 63) / 64, 0);
    return true;
}

bool in_rowspace_bits(const std::vector<bool>& v, const BitMatrix& a, std::vector<uint64_t>* witness) {
    if (v.size() != a.cols()) throw std::invalid_argument("in_rowspace: length mismatch");
    std::vector<uint64_t> packed((v.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) packed[i / 64] |= uint64_t(1) << (i % 64);
    packed.resize(a.words_per_row(), 0);
    return in_rowspace({packed.data(), a.words_per_row()}, a, witness);
}

bool subspace_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("subspace_equal: column count mismatch");
    std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(stack(a, b)) == ra;
}

bool subspace_contained(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("subspace_contained: column count mismatch");
    return rank(stack(a, b)) == rank(b);
}

BitMatrix stack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("stack: column count mismatch");
    BitMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        std::copy(a.row(r).begin(), a.row(r).end(), m.row(r).begin());
    for (std::size_t r = 0; r < b.rows(); ++r)
        std::copy(b.row(r).begin(), b.row(r).end(), m.row(a.rows() + r).begin());
    return m;
}

BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& cols) {
    BitMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto src = m.row(r);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t c = cols[j];
            if ((src[c / 64] >> (c % 64)) & 1u) out.set(r, j, true);
        }
    }
    return out;
}

uint64_t parity_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    uint64_t acc = 0;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t w = 0; w < n; ++w) acc ^= a[w] & b[w];
    return std::popcount(acc) & 1u;
}

BitMatrix mul_transposed(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_transposed: column count mismatch");
    BitMatrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j)
            if (parity_and(ra, b.row(j))) c.set(i, j, true);
    }
    return c;
}

std::string to_string(const BitMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (m.get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

}  // namespace stabsort
