#pragma once

/// Dense exact linear algebra over Q(v): Gaussian elimination with pivot
/// selection by minimal term count, nullspace, determinant, inverse.

#include "qwreath/ratfunc.hpp"

#include <vector>

namespace qwreath {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
  }

  static Matrix scalar(int n, const RatFunc& c) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RatFunc& at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
  const RatFunc& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const RatFunc& c = x.at(i, k);
        if (c.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const RatFunc& d = y.at(k, j);
          if (!d.is_zero()) r.at(i, j) += c * d;
        }
      }
    return r;
  }

  friend Matrix operator*(const RatFunc& c, const Matrix& x) {
    Matrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = c * x.a_[k];
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// Entrywise bar involution v -> v^{-1}.
  Matrix bar() const {
    Matrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).bar();
    return r;
  }

  std::vector<RatFunc> apply(const std::vector<RatFunc>& x) const {
    std::vector<RatFunc> y(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !x[static_cast<size_t>(j)].is_zero())
          y[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
    return y;
  }

  /// Row echelon reduction in place; returns pivot columns.  Pivot rows are
  /// chosen by minimal term count to limit expression growth.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int best = -1;
      size_t best_terms = 0;
      for (int i = row; i < rows_; ++i) {
        if (at(i, col).is_zero()) continue;
        size_t t = at(i, col).term_count();
        if (best < 0 || t < best_terms) { best = i; best_terms = t; }
      }
      if (best < 0) continue;
      swap_rows(row, best);
      RatFunc inv = at(row, col).inverse();
      for (int j = col; j < cols_; ++j) at(row, j) = inv * at(row, j);
      for (int i = 0; i < rows_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        RatFunc f = at(i, col);
        for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix m(*this);
    return static_cast<int>(m.rref().size());
  }

  /// Basis of the right nullspace {x : Ax = 0}.
  std::vector<std::vector<RatFunc>> nullspace() const {
    Matrix m(*this);
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<RatFunc>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[static_cast<size_t>(free)]) continue;
      std::vector<RatFunc> x(static_cast<size_t>(cols_));
      x[static_cast<size_t>(free)] = RatFunc(1);
      for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
      basis.push_back(std::move(x));
    }
    return basis;
  }

  RatFunc det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m(*this);
    RatFunc d(1);
    for (int col = 0; col < cols_; ++col) {
      int best = -1;
      size_t best_terms = 0;
      for (int i = col; i < rows_; ++i) {
        if (m.at(i, col).is_zero()) continue;
        size_t t = m.at(i, col).term_count();
        if (best < 0 || t < best_terms) { best = i; best_terms = t; }
      }
      if (best < 0) return RatFunc(0);
      if (best != col) { m.swap_rows(col, best); d = -d; }
      d *= m.at(col, col);
      RatFunc inv = m.at(col, col).inverse();
      for (int i = col + 1; i < rows_; ++i) {
        if (m.at(i, col).is_zero()) continue;
        RatFunc f = inv * m.at(i, col);
        for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
      }
    }
    return d;
  }

  bool is_invertible() const { return rows_ == cols_ && !det().is_zero(); }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = RatFunc(1);
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
      throw std::invalid_argument("matrix is singular");
    Matrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  /// Kronecker product, row-major block convention.
  friend Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j) {
        if (x.at(i, j).is_zero()) continue;
        for (int p = 0; p < y.rows_; ++p)
          for (int q = 0; q < y.cols_; ++q)
            if (!y.at(p, q).is_zero())
              r.at(i * y.rows_ + p, j * y.cols_ + q) = x.at(i, j) * y.at(p, q);
      }
    return r;
  }

 private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }

  int rows_, cols_;
  std::vector<RatFunc> a_;
};

}  // namespace qwreath
