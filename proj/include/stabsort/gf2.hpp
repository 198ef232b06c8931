#pragma once

// Dense bit-packed linear algebra over GF(2). Rows are packed into 64-bit
// words, little-endian within a word; padding bits past `cols` stay zero.

#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabsort {

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t& w = data_[r * words_ + c / 64];
        uint64_t mask = uint64_t(1) << (c % 64);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= uint64_t(1) << (c % 64); }

    std::span<uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
    std::span<const uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

    void xor_row_into(std::size_t src, std::size_t dst) {
        uint64_t* d = data_.data() + dst * words_;
        const uint64_t* s = data_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        uint64_t* pa = data_.data() + a * words_;
        uint64_t* pb = data_.data() + b * words_;
        for (std::size_t w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
    }
    bool row_is_zero(std::size_t r) const {
        const uint64_t* p = data_.data() + r * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (p[w]) return false;
        return true;
    }

    void append_row(std::span<const uint64_t> bits) {
        if (bits.size() != words_ && !(words_ == 0 && bits.empty()))
            throw std::invalid_argument("append_row: word count mismatch");
        data_.insert(data_.end(), bits.begin(), bits.end());
        ++rows_;
    }
    void append_zero_row() {
        data_.insert(data_.end(), words_, 0);
        ++rows_;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

// Row-echelon elimination state. Rows can be folded in one at a time; each
// reduces against the pivots seen so far. Optionally tracks the combination
// of input rows that produced each stored pivot row, which yields membership
// witnesses and left-kernel vectors.
class Eliminator {
  public:
    explicit Eliminator(std::size_t cols, bool track_combinations = false)
        : cols_(cols), words_((cols + 63) / 64), track_(track_combinations) {}

    // Reduces `bits` (destroyed) against current pivots; absorbs it as a new
    // pivot row if nonzero. Returns true if the rank grew.
    bool add_row(std::vector<uint64_t>& bits, std::vector<uint64_t>* combo_out = nullptr);

    // Reduce a row without absorbing it; returns true if it lies in the span.
    bool reduces_to_zero(std::vector<uint64_t> bits, std::vector<uint64_t>* combo_out = nullptr) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }
    std::size_t rows_added() const { return n_added_; }

    // Pivot rows as a matrix (row-echelon basis of the row space).
    BitMatrix basis() const;

  private:
    std::size_t cols_, words_;
    bool track_;
    std::size_t n_added_ = 0;
    std::vector<std::size_t> pivots_;              // pivot column per stored row
    std::vector<std::vector<uint64_t>> rows_;      // echelon rows
    std::vector<std::vector<uint64_t>> combos_;    // input-row combinations (if tracked)
};

std::size_t rank(const BitMatrix& m);

// Basis of the right null space: rows v with M v^T = 0.
// Row count is cols(M) - rank(M).
BitMatrix kernel_basis(const BitMatrix& m);

// Basis of the left null space: rows c with c M = 0 (combinations of rows of
// M that cancel).
BitMatrix left_kernel(const BitMatrix& m);

// True iff v is a GF(2) combination of rows of A. On success `witness`, when
// given, holds the combination (one bit per row of A).
bool in_rowspace(std::span<const uint64_t> v, const BitMatrix& a, std::vector<uint64_t>* witness = nullptr);
bool in_rowspace_bits(const std::vector<bool>& v, const BitMatrix& a, std::vector<uint64_t>* witness = nullptr);

// rowspace(A) == rowspace(B); requires equal column counts.
bool subspace_equal(const BitMatrix& a, const BitMatrix& b);

// rowspace(A) <= rowspace(B).
bool subspace_contained(const BitMatrix& a, const BitMatrix& b);

BitMatrix stack(const BitMatrix& a, const BitMatrix& b);

// Keep only the listed columns, in order.
BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& cols);

// C = A * B^T over GF(2): C_ij = parity(row_i(A) & row_j(B)).
BitMatrix mul_transposed(const BitMatrix& a, const BitMatrix& b);

uint64_t parity_and(std::span<const uint64_t> a, std::span<const uint64_t> b);

std::string to_string(const BitMatrix& m);

}  // namespace stabsort
