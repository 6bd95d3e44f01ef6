#pragma once

#include "adet/poly.hpp"
#include "adet/rational.hpp"

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace adet {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    assert(data_.size() == rows_ * cols_);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<T>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<PolyQ>;

/// Entrywise evaluation alpha -> a.
RatMatrix evaluate(const PolyMatrix& m, const Rational& a);
/// Constant polynomial matrix.
PolyMatrix to_poly(const RatMatrix& m);
/// Matrix times scalar polynomial, entrywise.
PolyMatrix scale(const RatMatrix& m, const PolyQ& p);
PolyQ trace(const PolyMatrix& m);

/// Rank over Q by Gaussian elimination.
std::size_t rank(RatMatrix m);

/// Rank over the fraction field Q(alpha), by fraction-free (Bareiss)
/// elimination with exact polynomial pivots.
std::size_t generic_rank(PolyMatrix m);

/// Rank over Q after specializing alpha = a.
std::size_t rank_at(const PolyMatrix& m, const Rational& a);

/// A^{-1} B for square invertible A; throws SingularMatrix otherwise.
RatMatrix solve_exact(RatMatrix a, RatMatrix b);

/// Columns spanning the right null space {x : m x = 0}.
RatMatrix nullspace(RatMatrix m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

} // namespace adet
