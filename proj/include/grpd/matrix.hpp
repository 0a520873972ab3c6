// Dense exact matrices and Gaussian elimination over an exact field.
//
// The scalar type T must provide + - * / ==, is_zero(), and the free functions
// zero_like(T) / one_like(T). Rational and CycNum both qualify.

#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpd/cyclotomic.hpp"
#include "grpd/error.hpp"

namespace grpd {

template <class T>
concept ExactField = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
};

template <ExactField T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero) : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::vector<T>& data() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  [[nodiscard]] T trace() const {
    require(rows_ == cols_, "trace of a non-square matrix");
    require(rows_ > 0, "trace of an empty matrix needs a scalar prototype");
    T t = zero_like(data_[0]);
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    Matrix r;
    r.rows_ = a.rows_;
    r.cols_ = b.cols_;
    if (a.data_.empty() || b.data_.empty()) {
      // degenerate shapes still need a scalar to fill with
      if (!a.data_.empty()) r.data_.assign(r.rows_ * r.cols_, zero_like(a.data_[0]));
      else if (!b.data_.empty()) r.data_.assign(r.rows_ * r.cols_, zero_like(b.data_[0]));
      return r;
    }
    r.data_.assign(r.rows_ * r.cols_, zero_like(a.data_[0]));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          r(i, j) = r(i, j) + aik * bkj;
        }
      }
    }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: dimension mismatch");
    Matrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: dimension mismatch");
    Matrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a);
    for (auto& x : r.data_) {
      if (!x.is_zero()) x = s * x;
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Kronecker product; the left factor indexes the slower-varying coordinate.
template <ExactField T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  require(!a.data().empty() && !b.data().empty(), "kron of an empty matrix");
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), zero_like(a.data()[0]));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (b(p, q).is_zero()) continue;
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return r;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <ExactField T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    }
    const T inv = one_like(m(r, c)) / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!m(r, k).is_zero()) m(r, k) = m(r, k) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(r, k).is_zero()) m(i, k) = m(i, k) - f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <ExactField T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right null space {v : m v = 0}, one vector per free column.
template <ExactField T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
  const auto pivots = rref(m);
  std::vector<std::vector<T>> basis;
  if (m.cols() == 0) return basis;
  const T zero = zero_like(m.data()[0]);
  const T one = one_like(zero);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = rhs; std::nullopt when the system is inconsistent.
template <ExactField T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& rhs) {
  require(rhs.size() == m.rows(), "solve: right-hand side has wrong length");
  if (m.cols() == 0) {
    for (const auto& x : rhs) {
      if (!x.is_zero()) return std::nullopt;
    }
    return std::vector<T>{};
  }
  const T zero = zero_like(m.data()[0]);
  Matrix<T> aug(m.rows(), m.cols() + 1, zero);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), zero);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

using ExactMatrix = Matrix<CycNum>;
using RationalMatrix = Matrix<Rational>;

}  // namespace grpd
