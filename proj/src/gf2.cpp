#include "ifccr/gf2.hpp"

#include <algorithm>

namespace ifccr::gf2 {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("bit string must be 0/1: " + bits);
    }
    return v;
}

BitVector BitVector::operator^(const BitVector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVector xor: length mismatch");
    BitVector r(len_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] ^ o.words_[w];
    return r;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged row lengths");
        for (std::size_t c = 0; c < nc; ++c) {
            if (rows[r][c] == '1') m.set(r, c, true);
            else if (rows[r][c] != '0') throw std::invalid_argument("bit string must be 0/1");
        }
    }
    return m;
}

BitMatrix BitMatrix::operator^(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("BitMatrix xor: shape mismatch");
    BitMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] ^ o.data_[i];
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::vector<std::string> BitMatrix::to_rows() const {
    std::vector<std::string> out(rows_, std::string(cols_, '0'));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out[r][c] = '1';
    return out;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < wpr_; ++w) data_[dst * wpr_ + w] ^= data_[src * wpr_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
}

BitMatrix shift_matrix(std::size_t m, std::size_t n) {
    if (n > m) throw std::invalid_argument("shift_matrix: n > m");
    BitMatrix s(m, m);
    // output level i carries input level i-(m-n)
    for (std::size_t i = m - n; i < m; ++i) s.set(i, i - (m - n), true);
    return s;
}

BitVector apply(const BitMatrix& mat, const BitVector& v) {
    if (mat.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    BitVector out(mat.rows());
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < mat.cols(); ++c)
            acc ^= (mat.get(r, c) && v.get(c));
        out.set(r, acc);
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(r, k))
                for (std::size_t c = 0; c < b.cols(); ++c)
                    if (b.get(k, c)) out.set(r, c, out.get(r, c) ^ 1);
    return out;
}

std::size_t rank(const BitMatrix& mat) {
    BitMatrix w = mat;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < w.cols_ && rk < w.rows_; ++c) {
        std::size_t piv = rk;
        while (piv < w.rows_ && !w.get(piv, c)) ++piv;
        if (piv == w.rows_) continue;
        w.swap_rows(rk, piv);
        for (std::size_t r = 0; r < w.rows_; ++r)
            if (r != rk && w.get(r, c)) w.xor_row(r, rk);
        ++rk;
    }
    return rk;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.get(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.get(r, c));
    }
    return out;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    BitMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.get(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.get(r, c));
    return out;
}

BitMatrix rref(const BitMatrix& mat) {
    BitMatrix w = mat;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < w.cols_ && rk < w.rows_; ++c) {
        std::size_t piv = rk;
        while (piv < w.rows_ && !w.get(piv, c)) ++piv;
        if (piv == w.rows_) continue;
        w.swap_rows(rk, piv);
        for (std::size_t r = 0; r < w.rows_; ++r)
            if (r != rk && w.get(r, c)) w.xor_row(r, rk);
        ++rk;
    }
    BitMatrix out(rk, w.cols_);
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < w.cols_; ++c) out.set(r, c, w.get(r, c));
    return out;
}

BitMatrix stack_canonical_form(const BitMatrix& mat) {
    return rref(mat.transposed()).transposed();
}

bool solve(const BitMatrix& mat, const BitVector& y, BitVector& x_out) {
    if (mat.rows() != y.size()) throw std::invalid_argument("solve: dimension mismatch");
    BitMatrix aug(mat.rows(), mat.cols() + 1);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        for (std::size_t c = 0; c < mat.cols(); ++c) aug.set(r, c, mat.get(r, c));
        aug.set(r, mat.cols(), y.get(r));
    }
    BitMatrix red = rref(aug);
    BitVector x(mat.cols());
    for (std::size_t r = 0; r < red.rows(); ++r) {
        std::size_t piv = 0;
        while (piv < red.cols() && !red.get(r, piv)) ++piv;
        if (piv == mat.cols()) return false;  // 0 = 1, inconsistent
        if (piv < mat.cols()) x.set(piv, red.get(r, mat.cols()));
    }
    x_out = x;
    return true;
}

}  // namespace ifccr::gf2
