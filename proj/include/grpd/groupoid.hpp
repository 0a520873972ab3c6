// The colored-permutation groupoid: objects are colorings f of {1..d} by
// {1..l}; a morphism f -> g is a permutation sigma with g o sigma = f.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grpd/combinat.hpp"
#include "grpd/error.hpp"
#include "grpd/perm.hpp"

namespace grpd {

/// A coloring f: {1..d} -> {1..l}; values[i] is f(i+1), stored 1-based.
struct ColorFn {
  int ell = 1;
  std::vector<int> values;

  ColorFn() = default;
  ColorFn(int l, std::vector<int> v) : ell(l), values(std::move(v)) {
    require(ell >= 1, "ColorFn: l must be positive");
    for (int c : values) require(c >= 1 && c <= ell, "ColorFn: color out of range 1..l");
  }

  [[nodiscard]] int d() const { return static_cast<int>(values.size()); }
  int operator[](int i) const { return values[i]; }

  auto operator<=>(const ColorFn&) const = default;

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values[i]);
    }
    return s + ")";
  }
};

inline std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Rank of f in the lexicographic enumeration of all l^d colorings.
inline std::int64_t object_index(const ColorFn& f) {
  std::int64_t r = 0;
  for (int c : f.values) r = r * f.ell + (c - 1);
  return r;
}

inline ColorFn object_from_index(int l, int d, std::int64_t idx) {
  std::vector<int> v(d);
  for (int i = d - 1; i >= 0; --i) {
    v[i] = static_cast<int>(idx % l) + 1;
    idx /= l;
  }
  return {l, std::move(v)};
}

/// All l^d objects in lexicographic order.
inline std::vector<ColorFn> objects(int l, int d, long long cap = kDefaultCap) {
  require(l >= 1 && d >= 0, "objects: need l >= 1 and d >= 0");
  const std::int64_t count = int_pow(l, d);
  require_cap(count, cap, "objects(" + std::to_string(l) + "," + std::to_string(d) + ")");
  std::vector<ColorFn> out;
  out.reserve(count);
  for (std::int64_t i = 0; i < count; ++i) out.push_back(object_from_index(l, d, i));
  return out;
}

/// lambda_i = |f^{-1}(i)|.
inline Composition type_of(const ColorFn& f) {
  Composition t(f.ell, 0);
  for (int c : f.values) ++t[c - 1];
  return t;
}

/// f_lambda: lambda_1 ones, then lambda_2 twos, and so on.
inline ColorFn canonical_object(const Composition& lambda) {
  std::vector<int> v;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    require(lambda[i] >= 0, "canonical_object: negative part");
    v.insert(v.end(), lambda[i], static_cast<int>(i) + 1);
  }
  return {static_cast<int>(lambda.size()), std::move(v)};
}

/// All objects of type lambda, lexicographically.
inline std::vector<ColorFn> objects_of_type(const Composition& lambda) {
  ColorFn f = canonical_object(lambda);
  std::vector<ColorFn> out;
  do {
    out.push_back(f);
  } while (std::next_permutation(f.values.begin(), f.values.end()));
  return out;
}

struct GMorphism {
  ColorFn source;
  ColorFn target;
  Perm perm;  // 0-based one-line notation

  /// Lexicographic in (source, target, perm), which is the basis order of the
  /// groupoid algebra.
  auto operator<=>(const GMorphism&) const = default;

  [[nodiscard]] bool is_valid() const {
    if (source.ell != target.ell || source.d() != target.d() || static_cast<int>(perm.size()) != source.d()) {
      return false;
    }
    if (!is_permutation(perm)) return false;
    for (int i = 0; i < source.d(); ++i) {
      if (target[perm[i]] != source[i]) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_endo() const { return source == target; }

  [[nodiscard]] std::string str() const { return perm_str(perm) + ":" + source.str() + "->" + target.str(); }
};

inline GMorphism make_morphism(ColorFn source, ColorFn target, Perm perm) {
  GMorphism m{std::move(source), std::move(target), std::move(perm)};
  require(m.is_valid(), "not a morphism: " + m.str());
  return m;
}

inline GMorphism identity_morphism(const ColorFn& f) { return {f, f, identity_perm(f.d())}; }

inline GMorphism inverse(const GMorphism& m) { return {m.target, m.source, inverse(m.perm)}; }

/// second o first; throws if first.target != second.source.
inline GMorphism compose(const GMorphism& second, const GMorphism& first) {
  if (first.target != second.source) {
    throw InvalidArgument("compose: morphisms are not composable: " + second.str() + " after " + first.str());
  }
  return {first.source, second.target, compose(second.perm, first.perm)};
}

/// The order preserving morphism sigma_(f,g).
inline GMorphism canonical_morphism(const ColorFn& f, const ColorFn& g) {
  require(f.ell == g.ell && f.d() == g.d(), "canonical_morphism: objects of different (l,d)");
  if (type_of(f) != type_of(g)) {
    throw InvalidArgument("canonical_morphism: types differ for " + f.str() + " and " + g.str());
  }
  std::vector<std::vector<int>> slots(f.ell);
  for (int j = 0; j < g.d(); ++j) slots[g[j] - 1].push_back(j);
  std::vector<std::size_t> used(f.ell, 0);
  Perm p(f.d());
  for (int i = 0; i < f.d(); ++i) p[i] = slots[f[i] - 1][used[f[i] - 1]++];
  return {f, g, std::move(p)};
}

/// hom(f,g): all color preserving bijections, sorted by one-line notation.
inline std::vector<GMorphism> hom(const ColorFn& f, const ColorFn& g) {
  require(f.ell == g.ell && f.d() == g.d(), "hom: objects of different (l,d)");
  std::vector<GMorphism> out;
  if (type_of(f) != type_of(g)) return out;
  const int d = f.d();
  std::vector<std::vector<int>> src(f.ell);
  std::vector<std::vector<int>> dst(f.ell);
  for (int i = 0; i < d; ++i) src[f[i] - 1].push_back(i);
  for (int j = 0; j < d; ++j) dst[g[j] - 1].push_back(j);
  Perm p(d, -1);
  std::function<void(int)> rec = [&](int c) {
    if (c == f.ell) {
      out.push_back({f, g, p});
      return;
    }
    std::vector<int> t = dst[c];
    do {
      for (std::size_t k = 0; k < src[c].size(); ++k) p[src[c][k]] = t[k];
      rec(c + 1);
    } while (std::next_permutation(t.begin(), t.end()));
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const GMorphism& a, const GMorphism& b) { return a.perm < b.perm; });
  return out;
}

/// Every morphism of the groupoid in basis order.
inline std::vector<GMorphism> all_morphisms(int l, int d, long long cap = kDefaultCap) {
  require_cap(int_pow(l, d) * factorial(d), cap, "groupoid algebra basis");
  const auto objs = objects(l, d, cap);
  std::vector<GMorphism> out;
  for (const auto& f : objs) {
    for (const auto& g : objs) {
      for (auto& m : hom(f, g)) out.push_back(std::move(m));
    }
  }
  return out;
}

/// Basis index of every morphism of a groupoid.
class MorphismIndex {
 public:
  MorphismIndex() = default;
  explicit MorphismIndex(std::vector<GMorphism> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }
  [[nodiscard]] std::size_t size() const { return basis_.size(); }
  [[nodiscard]] const GMorphism& at(std::size_t i) const { return basis_.at(i); }
  [[nodiscard]] const std::vector<GMorphism>& basis() const { return basis_; }
  [[nodiscard]] std::size_t index(const GMorphism& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InvalidArgument("morphism not in basis: " + m.str());
    return it->second;
  }

 private:
  std::vector<GMorphism> basis_;
  std::map<GMorphism, std::size_t> index_;
};

}  // namespace grpd
