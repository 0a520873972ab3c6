// Specht modules in the polytabloid basis.
//
// The basis vector e_T belongs to a standard tableau T, and a permutation acts
// on entries: pi . e_T = e_{pi T}. Non-standard polytabloids are rewritten in
// the standard basis by column sorting and Garnir relations.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "grpd/combinat.hpp"
#include "grpd/matrix.hpp"
#include "grpd/perm.hpp"
#include "grpd/rational.hpp"
#include "grpd/sparse.hpp"

namespace grpd {

class SpechtModule {
 public:
  using Rows = std::vector<std::vector<int>>;  // 0-based entries

  explicit SpechtModule(Partition mu) : shape_(std::move(mu)), n_(shape_.size()) {
    for (const auto& t : standard_tableaux(shape_)) {
      Rows r = t.rows;
      for (auto& row : r) {
        for (auto& x : row) --x;
      }
      index_.emplace(r, tableaux_.size());
      tableaux_.push_back(std::move(r));
    }
    for (int i = 0; i + 1 < n_; ++i) gens_.push_back(build_matrix(adjacent_transposition(n_, i)));
  }

  [[nodiscard]] const Partition& shape() const { return shape_; }
  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return tableaux_.size(); }
  [[nodiscard]] const std::vector<Rows>& tableaux() const { return tableaux_; }

  /// Matrix of s_{i+1} = (i, i+1) (0-based i), computed by straightening.
  [[nodiscard]] const RationalMatrix& generator(int i) const { return gens_.at(i); }
  [[nodiscard]] const std::vector<RationalMatrix>& generators() const { return gens_; }

  /// Matrix of an arbitrary permutation, as a product of generator matrices
  /// along a reduced word.
  [[nodiscard]] RationalMatrix matrix(const Perm& p) const {
    require(static_cast<int>(p.size()) == n_, "Specht matrix: permutation degree mismatch");
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = matrix_cache_.find(p); it != matrix_cache_.end()) return it->second;
    RationalMatrix m = RationalMatrix::identity(dim(), Rational(1));
    for (int i : reduced_word(p)) m = m * gens_[i];
    matrix_cache_.emplace(p, m);
    return m;
  }

  /// Character value, cached by cycle type.
  [[nodiscard]] Rational character(const Perm& p) const {
    auto ct = cycle_type(p);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = char_cache_.find(ct); it != char_cache_.end()) return it->second;
    }
    Rational t = dim() == 0 ? Rational(0) : matrix(p).trace();
    std::lock_guard<std::mutex> lock(mu_);
    char_cache_.emplace(std::move(ct), t);
    return t;
  }

  /// Coordinates of the polytabloid e_T of an arbitrary filling T in the
  /// standard basis.
  [[nodiscard]] SparseVec<Rational> straighten(const Rows& t) const {
    std::lock_guard<std::mutex> lock(mu_);
    return straighten_locked(t);
  }

 private:
  RationalMatrix build_matrix(const Perm& p) {
    RationalMatrix m(dim(), dim(), Rational(0));
    for (std::size_t c = 0; c < dim(); ++c) {
      Rows t = tableaux_[c];
      for (auto& row : t) {
        for (auto& x : row) x = p[x];
      }
      for (const auto& [r, v] : straighten_locked(t)) m(r, c) = v;
    }
    return m;
  }

  SparseVec<Rational> straighten_locked(Rows t) const {
    int sgn = sort_columns(t);
    if (auto it = straight_cache_.find(t); it != straight_cache_.end()) {
      return sgn > 0 ? it->second : negate(it->second);
    }
    SparseVec<Rational> result;
    if (auto it = index_.find(t); it != index_.end()) {
      result.emplace(it->second, Rational(1));
    } else {
      result = garnir(t);
    }
    straight_cache_.emplace(t, result);
    return sgn > 0 ? result : negate(result);
  }

  static SparseVec<Rational> negate(SparseVec<Rational> v) {
    for (auto& [c, x] : v) x = -x;
    return v;
  }

  // Sorts every column increasingly; returns the sign of the column permutation.
  static int sort_columns(Rows& t) {
    int sgn = 1;
    const std::size_t width = t.empty() ? 0 : t[0].size();
    for (std::size_t j = 0; j < width; ++j) {
      std::vector<int> col;
      for (std::size_t i = 0; i < t.size() && j < t[i].size(); ++i) col.push_back(t[i][j]);
      for (std::size_t a = 0; a < col.size(); ++a) {
        for (std::size_t b = a + 1; b < col.size(); ++b) {
          if (col[a] > col[b]) sgn = -sgn;
        }
      }
      std::sort(col.begin(), col.end());
      for (std::size_t i = 0; i < col.size(); ++i) t[i][j] = col[i];
    }
    return sgn;
  }

  // t has sorted columns and is not standard, so some row has a descent.
  SparseVec<Rational> garnir(const Rows& t) const {
    std::size_t ri = 0;
    std::size_t cj = 0;
    bool found = false;
    for (std::size_t i = 0; i < t.size() && !found; ++i) {
      for (std::size_t j = 0; j + 1 < t[i].size(); ++j) {
        if (t[i][j] > t[i][j + 1]) {
          ri = i;
          cj = j;
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::logic_error("garnir called on a row-standard tableau");
    // A: column cj from row ri down; B: column cj+1 from the top to row ri
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = ri; i < t.size() && cj < t[i].size(); ++i) pos.emplace_back(i, cj);
    const std::size_t a_size = pos.size();
    for (std::size_t i = 0; i <= ri; ++i) pos.emplace_back(i, cj + 1);
    std::vector<int> vals;
    for (auto [i, j] : pos) vals.push_back(t[i][j]);
    const std::size_t m = vals.size();

    SparseVec<Rational> result;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(a_size), true);
    // enumerate all |A|-subsets of positions in vals; the first one is A itself
    std::vector<bool> start = pick;
    do {
      if (pick == start) continue;
      std::vector<int> in;
      std::vector<int> out;
      for (std::size_t x = 0; x < m; ++x) (pick[x] ? in : out).push_back(vals[x]);
      std::sort(in.begin(), in.end());
      std::sort(out.begin(), out.end());
      std::vector<int> newvals = in;
      newvals.insert(newvals.end(), out.begin(), out.end());
      // sign of the permutation vals -> newvals
      Perm q(m);
      for (std::size_t x = 0; x < m; ++x) {
        q[x] = static_cast<int>(std::find(vals.begin(), vals.end(), newvals[x]) - vals.begin());
      }
      Rows u = t;
      for (std::size_t x = 0; x < m; ++x) u[pos[x].first][pos[x].second] = newvals[x];
      // e_T = - sum_{S != A} sgn(pi_S) e_{pi_S T}
      const Rational coef(-sign(q));
      axpy(result, coef, straighten_locked(u));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return result;
  }

  Partition shape_;
  int n_;
  std::vector<Rows> tableaux_;
  std::map<Rows, std::size_t> index_;
  std::vector<RationalMatrix> gens_;
  mutable std::mutex mu_;
  mutable std::map<Rows, SparseVec<Rational>> straight_cache_;
  mutable std::map<Perm, RationalMatrix> matrix_cache_;
  mutable std::map<std::vector<int>, Rational> char_cache_;
};

/// Shared, lazily built Specht module for mu.
inline std::shared_ptr<const SpechtModule> specht_module(const Partition& mu) {
  static std::mutex mu_lock;
  static std::map<Partition, std::shared_ptr<const SpechtModule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu_lock);
    if (auto it = cache.find(mu); it != cache.end()) return it->second;
  }
  auto mod = std::make_shared<const SpechtModule>(mu);
  std::lock_guard<std::mutex> lock(mu_lock);
  return cache.emplace(mu, std::move(mod)).first->second;
}

/// The outer tensor product S_{p_1} (x) ... (x) S_{p_l} as a module for the
/// Young subgroup S_lambda acting on consecutive blocks of positions. The
/// first component is the most significant Kronecker factor.
class MultiSpecht {
 public:
  explicit MultiSpecht(MultiPartition p) : label_(std::move(p)) {
    int off = 0;
    for (const auto& c : label_.comps) {
      comps_.push_back(specht_module(c));
      offsets_.push_back(off);
      off += c.size();
    }
    degree_ = off;
  }

  [[nodiscard]] const MultiPartition& label() const { return label_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t dim() const {
    std::size_t r = 1;
    for (const auto& c : comps_) r *= c->dim();
    return r;
  }
  [[nodiscard]] const std::vector<std::shared_ptr<const SpechtModule>>& components() const { return comps_; }
  [[nodiscard]] const std::vector<int>& offsets() const { return offsets_; }

  /// Restriction of a block-preserving permutation to block c, shifted to 0.
  [[nodiscard]] Perm block_perm(const Perm& p, std::size_t c) const {
    const int off = offsets_[c];
    const int len = label_.comps[c].size();
    Perm q(len);
    for (int i = 0; i < len; ++i) {
      const int img = p[off + i] - off;
      require(img >= 0 && img < len, "permutation does not preserve the Young subgroup blocks");
      q[i] = img;
    }
    return q;
  }

  [[nodiscard]] RationalMatrix matrix(const Perm& p) const {
    require(static_cast<int>(p.size()) == degree_, "MultiSpecht: permutation degree mismatch");
    RationalMatrix m = RationalMatrix::identity(1, Rational(1));
    for (std::size_t c = 0; c < comps_.size(); ++c) m = kron(m, comps_[c]->matrix(block_perm(p, c)));
    return m;
  }

  /// Matrix of the adjacent transposition (i, i+1) inside block c.
  [[nodiscard]] RationalMatrix block_generator(std::size_t c, int i) const {
    Perm p = identity_perm(degree_);
    std::swap(p[offsets_[c] + i], p[offsets_[c] + i + 1]);
    return matrix(p);
  }

  [[nodiscard]] Rational character(const Perm& p) const {
    Rational t(1);
    for (std::size_t c = 0; c < comps_.size(); ++c) t *= comps_[c]->character(block_perm(p, c));
    return t;
  }

 private:
  MultiPartition label_;
  std::vector<std::shared_ptr<const SpechtModule>> comps_;
  std::vector<int> offsets_;
  int degree_ = 0;
};

}  // namespace grpd
