#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hopfpi/exact/integers.hpp"

namespace hopfpi::exact {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<BigInt>> data) {
        rows_ = data.size();
        cols_ = rows_ ? data.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : data) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& e : row) entries_.push_back(e);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix diagonal(const std::vector<BigInt>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }
    static IntMatrix column(const std::vector<BigInt>& v) {
        IntMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const BigInt& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }
    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }
    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }
    IntMatrix operator-() const {
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
        return r;
    }
    IntMatrix scaled(const BigInt& c) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = c * entries_[i];
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    IntMatrix hstack(const IntMatrix& o) const {
        if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
        IntMatrix r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }
    IntMatrix vstack(const IntMatrix& o) const {
        if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
        IntMatrix r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
        return r;
    }

    IntMatrix submatrix_rows(const std::vector<std::size_t>& keep) const {
        IntMatrix r(keep.size(), cols_);
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(keep[i], j);
        return r;
    }
    IntMatrix submatrix_cols(const std::vector<std::size_t>& keep) const {
        IntMatrix r(rows_, keep.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) r.at(i, j) = at(i, keep[j]);
        return r;
    }

    std::vector<BigInt> col(std::size_t j) const {
        std::vector<BigInt> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    std::vector<BigInt> apply(const std::vector<BigInt>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
        std::vector<BigInt> y(rows_, BigInt(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) y[i] += at(i, j) * x[j];
        return y;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const BigInt& c) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const BigInt& c) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }
    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<BigInt> entries_;
};

}  // namespace hopfpi::exact
