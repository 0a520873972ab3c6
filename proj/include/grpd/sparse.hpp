// Sparse vectors and an incremental echelon basis.
//
// EchelonBasis keeps its rows in semi-echelon form: every row has a distinct
// pivot (its smallest column), normalized to 1. Optionally each row also
// remembers how it was obtained from the inserted vectors, which gives
// coordinates for solve() and linear relations among the inputs.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grpd/matrix.hpp"

namespace grpd {

template <ExactField T>
using SparseVec = std::map<std::size_t, T>;

/// v += s * w, dropping entries that cancel.
template <ExactField T>
void axpy(SparseVec<T>& v, const T& s, const SparseVec<T>& w) {
  if (s.is_zero()) return;
  for (const auto& [c, x] : w) {
    auto it = v.find(c);
    if (it == v.end()) {
      v.emplace(c, s * x);
    } else {
      it->second = it->second + s * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

template <ExactField T>
void scale(SparseVec<T>& v, const T& s) {
  for (auto& [c, x] : v) x = s * x;
}

template <ExactField T>
class EchelonBasis {
 public:
  explicit EchelonBasis(bool track = false) : track_(track) {}
  /// one is needed only to record a relation for an inserted zero vector.
  EchelonBasis(bool track, T one) : track_(track), one_(std::move(one)) {}

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t inserted() const { return inserted_; }
  [[nodiscard]] bool tracking() const { return track_; }

  /// Inserts v; returns true if it was independent of the current span.
  /// With tracking on, a dependent v is recorded as a relation among inputs.
  bool add(SparseVec<T> v) {
    SparseVec<T> comb;
    const std::size_t id = inserted_++;
    if (track_ && !v.empty()) comb.emplace(id, one_like(v.begin()->second));
    else if (track_ && one_) comb.emplace(id, *one_);
    reduce(v, track_ ? &comb : nullptr, -1);
    if (v.empty()) {
      if (track_ && !comb.empty()) relations_.push_back(std::move(comb));
      return false;
    }
    const T inv = one_like(v.begin()->second) / v.begin()->second;
    scale(v, inv);
    if (track_) scale(comb, inv);
    const std::size_t pivot = v.begin()->first;
    rows_.emplace(pivot, Row{std::move(v), std::move(comb)});
    return true;
  }

  [[nodiscard]] bool contains(SparseVec<T> v) const {
    reduce(v, nullptr, -1);
    return v.empty();
  }

  /// Residual of v after reduction against the basis (empty iff v is in the span).
  [[nodiscard]] SparseVec<T> residual(SparseVec<T> v) const {
    reduce(v, nullptr, -1);
    return v;
  }

  /// Coefficients c with v = sum_i c_i * (i-th inserted vector); needs tracking.
  [[nodiscard]] std::optional<SparseVec<T>> coordinates(SparseVec<T> v) const {
    require(track_, "EchelonBasis::coordinates needs tracking");
    SparseVec<T> comb;
    reduce(v, &comb, 1);
    if (!v.empty()) return std::nullopt;
    return comb;
  }

  /// Linear relations among the inserted vectors, one per dependent insertion.
  [[nodiscard]] const std::vector<SparseVec<T>>& relations() const { return relations_; }

  /// Rows in pivot order.
  [[nodiscard]] std::vector<SparseVec<T>> rows() const {
    std::vector<SparseVec<T>> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r.vec);
    return out;
  }

  [[nodiscard]] std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
  }

  /// Basis of {x in T^ncols : <row, x> = 0 for every row}, i.e. the null
  /// space when the rows are read as equations.
  [[nodiscard]] std::vector<SparseVec<T>> null_space(std::size_t ncols, const T& one) const {
    // back-substitute to reduced form, last pivot first
    std::map<std::size_t, SparseVec<T>> red;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseVec<T> r = it->second.vec;
      for (auto jt = std::next(r.begin()); jt != r.end();) {
        auto found = red.find(jt->first);
        if (found == red.end()) {
          ++jt;
          continue;
        }
        const std::size_t col = jt->first;
        const T f = jt->second;
        axpy(r, zero_like(one) - f, found->second);
        jt = r.upper_bound(col);
      }
      red.emplace(it->first, std::move(r));
    }
    std::vector<SparseVec<T>> basis;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [p, r] : red) {
      require(p < ncols, "null_space: pivot beyond column count");
      is_pivot[p] = true;
    }
    // column -> (pivot row, coefficient) for the free columns
    std::map<std::size_t, std::vector<std::pair<std::size_t, T>>> by_free;
    for (const auto& [p, r] : red) {
      for (const auto& [c, x] : r) {
        if (c != p) by_free[c].emplace_back(p, x);
      }
    }
    for (std::size_t free = 0; free < ncols; ++free) {
      if (is_pivot[free]) continue;
      SparseVec<T> v;
      v.emplace(free, one);
      if (auto it = by_free.find(free); it != by_free.end()) {
        for (const auto& [p, x] : it->second) v.emplace(p, zero_like(one) - x);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  struct Row {
    SparseVec<T> vec;
    SparseVec<T> comb;
  };

  // Subtracts pivot rows in increasing column order. comb accumulates
  // sign * coefficient * row.comb for each row used.
  void reduce(SparseVec<T>& v, SparseVec<T>* comb, int sign) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const T coef = it->second;
      const T neg = zero_like(coef) - coef;
      axpy(v, neg, row->second.vec);
      if (comb != nullptr) axpy(*comb, sign < 0 ? neg : coef, row->second.comb);
      it = v.upper_bound(col);
    }
  }

  bool track_;
  std::optional<T> one_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;
  std::vector<SparseVec<T>> relations_;
};

/// Row-major flattening of a dense matrix into a sparse vector.
template <ExactField T>
SparseVec<T> flatten(const Matrix<T>& m) {
  SparseVec<T> v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) v.emplace(i * m.cols() + j, m(i, j));
    }
  }
  return v;
}

}  // namespace grpd
