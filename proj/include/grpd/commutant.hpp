// Commutants and generated algebras of finite sets of exact matrices.

#pragma once

#include <cstddef>
#include <vector>

#include "grpd/matrix.hpp"
#include "grpd/sparse.hpp"

namespace grpd {

/// Linear equations X M - M X = 0 for every generator M, in the unknowns
/// X_{ab} at index a*n + b.
template <ExactField T>
EchelonBasis<T> commutant_equations(const std::vector<Matrix<T>>& gens, std::size_t n) {
  EchelonBasis<T> eqs;
  for (const auto& m : gens) {
    require(m.rows() == n && m.cols() == n, "commutant: generator of the wrong size");
    // sparse columns and rows of m
    std::vector<std::vector<std::pair<std::size_t, T>>> col(n);
    std::vector<std::vector<std::pair<std::size_t, T>>> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(i, j).is_zero()) {
          row[i].emplace_back(j, m(i, j));
          col[j].emplace_back(i, m(i, j));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec<T> e;
        // (XM)_{ij} = sum_k X_{ik} M_{kj}
        for (const auto& [k, v] : col[j]) axpy(e, v, SparseVec<T>{{i * n + k, one_like(v)}});
        // (MX)_{ij} = sum_k M_{ik} X_{kj}
        for (const auto& [k, v] : row[i]) axpy(e, zero_like(v) - v, SparseVec<T>{{k * n + j, one_like(v)}});
        if (!e.empty()) eqs.add(std::move(e));
      }
    }
  }
  return eqs;
}

template <ExactField T>
std::size_t commutant_dim(const std::vector<Matrix<T>>& gens, std::size_t n) {
  return n * n - commutant_equations(gens, n).rank();
}

/// A basis of the commutant, each element as an n x n matrix.
template <ExactField T>
std::vector<Matrix<T>> commutant_basis(const std::vector<Matrix<T>>& gens, std::size_t n, const T& one) {
  const auto eqs = commutant_equations(gens, n);
  std::vector<Matrix<T>> out;
  for (const auto& v : eqs.null_space(n * n, one)) {
    Matrix<T> x(n, n, zero_like(one));
    for (const auto& [idx, c] : v) x(idx / n, idx % n) = c;
    out.push_back(std::move(x));
  }
  return out;
}

/// Basis of the unital algebra generated by gens, by span growth: the
/// identity is multiplied on the left by generators until nothing new appears.
template <ExactField T>
std::vector<Matrix<T>> generated_algebra(const std::vector<Matrix<T>>& gens, std::size_t n, const T& one,
                                         std::size_t limit = static_cast<std::size_t>(-1)) {
  EchelonBasis<T> span;
  std::vector<Matrix<T>> basis;
  std::vector<Matrix<T>> frontier{Matrix<T>::identity(n, one)};
  span.add(flatten(frontier[0]));
  basis.push_back(frontier[0]);
  while (!frontier.empty() && basis.size() < limit) {
    std::vector<Matrix<T>> next;
    for (const auto& b : frontier) {
      for (const auto& g : gens) {
        Matrix<T> p = g * b;
        if (span.add(flatten(p))) {
          basis.push_back(p);
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

/// Dimension of the span of a set of matrices.
template <ExactField T>
std::size_t span_dim(const std::vector<Matrix<T>>& ms) {
  EchelonBasis<T> span;
  for (const auto& m : ms) span.add(flatten(m));
  return span.rank();
}

/// True if every matrix of a lies in the span of b.
template <ExactField T>
bool span_contains(const std::vector<Matrix<T>>& b, const std::vector<Matrix<T>>& a) {
  EchelonBasis<T> span;
  for (const auto& m : b) span.add(flatten(m));
  for (const auto& m : a) {
    if (!span.contains(flatten(m))) return false;
  }
  return true;
}

template <ExactField T>
bool commute(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b == b * a;
}

/// Rational matrix viewed over Q(xi_l).
inline ExactMatrix to_exact(const RationalMatrix& m, int l) {
  ExactMatrix r(m.rows(), m.cols(), CycNum(l));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) r(i, j) = CycNum(l, m(i, j));
    }
  }
  return r;
}

}  // namespace grpd
