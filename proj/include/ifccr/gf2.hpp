#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifccr::gf2 {

/// Dense bit vector over GF(2). Component 0 is the most significant level
/// at a receiver; component len-1 the least significant.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i, bool v) {
        check_index(i);
        uint64_t mask = uint64_t{1} << (i % 64);
        if (v) words_[i / 64] |= mask; else words_[i / 64] &= ~mask;
    }

    BitVector operator^(const BitVector& o) const;
    bool operator==(const BitVector& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool is_zero() const;

    std::string to_string() const;

  private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector index " + std::to_string(i));
    }
    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense bit matrix over GF(2), stored row-major with bit-packed rows.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        check(r, c);
        uint64_t mask = uint64_t{1} << (c % 64);
        if (v) data_[r * wpr_ + c / 64] |= mask; else data_[r * wpr_ + c / 64] &= ~mask;
    }

    BitMatrix operator^(const BitMatrix& o) const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    BitMatrix transposed() const;
    std::vector<std::string> to_rows() const;

  private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("BitMatrix index (" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
    friend std::size_t rank(const BitMatrix&);
    friend BitMatrix rref(const BitMatrix&);
    friend class Solver;

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

/// S^(m-n): the m x m down-shift that keeps the top n input levels,
/// relocated to the bottom n output levels. Requires 0 <= n <= m.
BitMatrix shift_matrix(std::size_t m, std::size_t n);

BitVector apply(const BitMatrix& mat, const BitVector& v);
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

std::size_t rank(const BitMatrix& mat);

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);

/// Reduced row echelon form (zero rows dropped).
BitMatrix rref(const BitMatrix& mat);

/// Canonical representative of {M*T : T invertible}: reduced column echelon
/// form with pivots in fixed (top-down) order, zero columns dropped.
/// Idempotent; preserves the column space.
BitMatrix stack_canonical_form(const BitMatrix& mat);

/// One solution x of mat*x = y, if any.
/// The solution is unique in components whose columns are pivot columns with
/// trivial kernel overlap; callers relying on uniqueness must establish the
/// rank condition themselves.
bool solve(const BitMatrix& mat, const BitVector& y, BitVector& x_out);

}  // namespace ifccr::gf2
