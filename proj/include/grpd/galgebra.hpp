// The groupoid algebra A_(l,d) over Q(xi_l) and the isomorphism
// Phi: C[S(l,d)] -> A_(l,d).

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "grpd/cyclotomic.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"
#include "grpd/sparse.hpp"
#include "grpd/wreath.hpp"

namespace grpd {

class AlgElem {
 public:
  using Terms = std::map<GMorphism, CycNum>;

  AlgElem() = default;
  AlgElem(int l, int d) : ell_(l), d_(d) {}

  static AlgElem basis(const GMorphism& m, const CycNum& c) {
    AlgElem a(m.source.ell, m.source.d());
    a.add_term(m, c);
    return a;
  }
  static AlgElem basis(const GMorphism& m) { return basis(m, CycNum(m.source.ell, Rational(1))); }

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  void add_term(const GMorphism& m, const CycNum& c) {
    require(m.source.ell == ell_ && m.source.d() == d_, "AlgElem: morphism from a different groupoid");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] CycNum coeff(const GMorphism& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycNum(ell_) : it->second;
  }

  friend AlgElem operator+(AlgElem a, const AlgElem& b) {
    check_same(a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) {
    check_same(a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend AlgElem operator*(const CycNum& s, AlgElem a) {
    if (s.is_zero()) return AlgElem(a.ell_, a.d_);
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }

  /// Bilinear extension of composition; non-composable pairs give zero.
  /// The product a*b applies b first.
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    check_same(a, b);
    std::map<ColorFn, std::vector<const Terms::value_type*>> by_source;
    for (const auto& t : a.terms_) by_source[t.first.source].push_back(&t);
    AlgElem r(a.ell_, a.d_);
    for (const auto& [tm, tc] : b.terms_) {
      auto it = by_source.find(tm.target);
      if (it == by_source.end()) continue;
      for (const auto* s : it->second) r.add_term(compose(s->first, tm), s->second * tc);
    }
    return r;
  }

  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.ell_ == b.ell_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// Coordinates in a morphism basis.
  [[nodiscard]] SparseVec<CycNum> coordinates(const MorphismIndex& idx) const {
    SparseVec<CycNum> v;
    for (const auto& [m, c] : terms_) v.emplace(idx.index(m), c);
    return v;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")" + m.str();
    }
    return s;
  }

 private:
  static void check_same(const AlgElem& a, const AlgElem& b) {
    require(a.ell_ == b.ell_ && a.d_ == b.d_, "AlgElem: operands from different groupoid algebras");
  }

  int ell_ = 1;
  int d_ = 0;
  Terms terms_;
};

/// The unit sum_f e_f.
inline AlgElem alg_unit(int l, int d, long long cap = kDefaultCap) {
  AlgElem a(l, d);
  for (const auto& f : objects(l, d, cap)) a.add_term(identity_morphism(f), CycNum(l, Rational(1)));
  return a;
}

inline AlgElem alg_power(const AlgElem& a, int e) {
  AlgElem r = alg_unit(a.ell(), a.d());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

/// xi_l^{f(j)} with colors taken literally in 1..l (j is 0-based).
inline CycNum color_root(const ColorFn& f, int j) { return root_of_unity(f.ell, f[j]); }

/// Phi(sigma) = sum of sigma over every object pair it connects.
inline AlgElem phi_perm(int l, const Perm& sigma) {
  const int d = static_cast<int>(sigma.size());
  const Perm inv = inverse(sigma);
  AlgElem a(l, d);
  const CycNum one(l, Rational(1));
  for (const auto& f : objects(l, d)) {
    std::vector<int> g(d);
    for (int j = 0; j < d; ++j) g[j] = f[inv[j]];
    a.add_term(GMorphism{f, ColorFn(l, std::move(g)), sigma}, one);
  }
  return a;
}

/// Phi(s_0^{(j)}) = sum_f xi^{f(j)} e_f, with j 1-based.
inline AlgElem phi_s0_j_closed(int l, int d, int j) {
  require(j >= 1 && j <= d, "phi_s0_j: position out of range");
  AlgElem a(l, d);
  for (const auto& f : objects(l, d)) a.add_term(identity_morphism(f), color_root(f, j - 1));
  return a;
}

/// Image of the i-th generator of generators(l,d).
inline AlgElem phi_generator(int l, int d, int i) {
  if (i == 0) return phi_s0_j_closed(l, d, 1);
  return phi_perm(l, adjacent_transposition(d, i - 1));
}

/// Phi(D(c) sigma) = sum_f xi^{sum_j c_j g(j)} sigma: f -> g, g = f o sigma^{-1}.
inline AlgElem phi_closed_form(const WreathElem& x) {
  const int l = x.ell;
  const int d = x.d();
  const Perm inv = inverse(x.perm);
  AlgElem a(l, d);
  for (const auto& f : objects(l, d)) {
    std::vector<int> g(d);
    long long e = 0;
    for (int j = 0; j < d; ++j) {
      g[j] = f[inv[j]];
      e += static_cast<long long>(x.colors[j]) * g[j];
    }
    a.add_term(GMorphism{f, ColorFn(l, std::move(g)), x.perm}, root_of_unity(l, e));
  }
  return a;
}

/// Phi evaluated as a product of generator images: the s_0^{(j)} come from
/// the word s_{j-1} ... s_0 ... s_{j-1} and sigma from a reduced word.
class PhiMap {
 public:
  PhiMap(int l, int d) : ell_(l), d_(d), unit_(alg_unit(l, d)) {
    if (d == 0) return;
    for (int i = 0; i < d; ++i) gens_.push_back(phi_generator(l, d, i));
    for (int j = 1; j <= d; ++j) {
      AlgElem w = unit_;
      for (int g : s0_j_word(j)) w = w * gens_[g];
      s0j_.push_back(std::move(w));
    }
  }

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const AlgElem& unit() const { return unit_; }
  [[nodiscard]] const AlgElem& generator(int i) const { return gens_.at(i); }
  [[nodiscard]] const AlgElem& s0_j(int j) const { return s0j_.at(j - 1); }

  [[nodiscard]] AlgElem operator()(const WreathElem& x) const {
    require(x.ell == ell_ && x.d() == d_, "PhiMap: element from a different group");
    AlgElem r = unit_;
    for (int j = 0; j < d_; ++j) {
      for (int t = 0; t < x.colors[j]; ++t) r = r * s0j_[j];
    }
    for (int i : reduced_word(x.perm)) r = r * gens_[i + 1];
    return r;
  }

 private:
  int ell_;
  int d_;
  AlgElem unit_;
  std::vector<AlgElem> gens_;
  std::vector<AlgElem> s0j_;
};

inline AlgElem phi(const WreathElem& x) { return PhiMap(x.ell, x.d())(x); }

/// Formal combination of group elements.
using GroupAlgElem = std::map<WreathElem, CycNum>;

/// Solves a = sum_x c_x Phi(x) exactly.
class PhiInverse {
 public:
  PhiInverse(int l, int d, long long cap = kDefaultCap)
      : ell_(l), d_(d), index_(all_morphisms(l, d, cap)), basis_(true, CycNum(l, Rational(1))) {
    group_ = enum_group(l, d, cap);
    for (const auto& x : group_) basis_.add(phi_closed_form(x).coordinates(index_));
  }

  [[nodiscard]] std::size_t rank() const { return basis_.rank(); }
  [[nodiscard]] const MorphismIndex& index() const { return index_; }

  /// Empty optional when a lies outside the span (impossible if Phi is onto).
  [[nodiscard]] std::optional<GroupAlgElem> operator()(const AlgElem& a) const {
    auto c = basis_.coordinates(a.coordinates(index_));
    if (!c) return std::nullopt;
    GroupAlgElem out;
    for (const auto& [i, v] : *c) out.emplace(group_[i], v);
    return out;
  }

 private:
  int ell_;
  int d_;
  MorphismIndex index_;
  std::vector<WreathElem> group_;
  EchelonBasis<CycNum> basis_;
};

inline GroupAlgElem phi_inverse(const AlgElem& a) {
  auto r = PhiInverse(a.ell(), a.d())(a);
  if (!r) throw InvalidArgument("phi_inverse: element is not in the image of Phi");
  return *r;
}

struct IsoOptions {
  long long cap = kDefaultCap;
  long long exhaustive_pairs = 10'000'000;
  long long random_pairs = 100'000;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// The Coxeter-type presentation relations evaluated on the images Phi(s_i) inside A_(l,d).
inline Check phi_relations_check(int l, int d) {
  Json failures = Json::array();
  int count = 0;
  if (d >= 1) {
    PhiMap phi_map(l, d);
    const AlgElem& e = phi_map.unit();
    auto g = [&](int i) -> const AlgElem& { return phi_map.generator(i); };
    auto rel = [&](const std::string& name, const AlgElem& lhs, const AlgElem& rhs) {
      ++count;
      if (!(lhs == rhs)) failures.push_back(name);
    };
    rel("s0^l = e", alg_power(g(0), l), e);
    for (int i = 1; i < d; ++i) rel("s" + std::to_string(i) + "^2 = e", g(i) * g(i), e);
    if (d >= 2) rel("s0 s1 s0 s1 = s1 s0 s1 s0", g(0) * g(1) * g(0) * g(1), g(1) * g(0) * g(1) * g(0));
    for (int i = 1; i + 1 < d; ++i) {
      rel("braid s" + std::to_string(i), g(i) * g(i + 1) * g(i), g(i + 1) * g(i) * g(i + 1));
    }
    for (int i = 0; i < d; ++i) {
      for (int j = i + 2; j < d; ++j) rel("s" + std::to_string(i) + " s" + std::to_string(j), g(i) * g(j), g(j) * g(i));
    }
  }
  return make_check("phi_relations", failures.empty(), Json{{"relations", count}, {"failures", failures}});
}

/// Phi is multiplicative and bijective; Phi^{-1} o Phi = id.
inline std::vector<Check> verify_iso(int l, int d, const IsoOptions& opt = {}) {
  std::vector<Check> out;
  const auto group = enum_group(l, d, opt.cap);
  const auto n = static_cast<long long>(group.size());
  const PhiMap phi_map(l, d);

  // Phi by generator products, cross-checked with the closed form.
  std::vector<AlgElem> images(group.size());
  long long closed_mismatch = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    images[i] = d == 0 ? phi_map.unit() : phi_map(group[i]);
    if (!(images[i] == phi_closed_form(group[i]))) ++closed_mismatch;
  }
  out.push_back(make_check("phi_closed_form", closed_mismatch == 0,
                           Json{{"elements", n}, {"mismatches", closed_mismatch}}));
  out.push_back(phi_relations_check(l, d));

  // multiplicativity
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  const bool exhaustive = n * n <= opt.exhaustive_pairs;
  if (exhaustive) {
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
    }
  } else {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const auto gi = i == 0 ? gen_s0(l, d) : gen_s(l, d, i);
        const auto gj = j == 0 ? gen_s0(l, d) : gen_s(l, d, j);
        pairs.emplace_back(wreath_index(gi), wreath_index(gj));
      }
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (long long r = 0; r < opt.random_pairs; ++r) pairs.emplace_back(pick(rng), pick(rng));
  }
  std::vector<std::string> first_failure(std::max(1, opt.jobs));
  std::vector<long long> failures(std::max(1, opt.jobs), 0);
  auto worker = [&](int w, int jobs) {
    for (std::size_t p = w; p < pairs.size(); p += jobs) {
      const auto [a, b] = pairs[p];
      const auto prod = wreath_mul(group[a], group[b]);
      if (!(images[a] * images[b] == images[wreath_index(prod)])) {
        if (failures[w]++ == 0) first_failure[w] = group[a].str() + " * " + group[b].str();
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w, jobs);
    for (auto& t : threads) t.join();
  }
  long long fail_total = 0;
  Json counterexample = nullptr;
  for (int w = 0; w < jobs; ++w) {
    fail_total += failures[w];
    if (failures[w] && counterexample.is_null()) counterexample = first_failure[w];
  }
  out.push_back(make_check("phi_multiplicative", fail_total == 0,
                           Json{{"pairs", pairs.size()},
                                {"exhaustive", exhaustive},
                                {"failures", fail_total},
                                {"counterexample", counterexample}}));

  // bijectivity by exact rank, then the round trip
  PhiInverse inv(l, d, opt.cap);
  const auto dim = static_cast<long long>(inv.index().size());
  out.push_back(make_check("phi_bijective", static_cast<long long>(inv.rank()) == n && dim == n,
                           Json{{"rank", inv.rank()}, {"dim_A", dim}, {"group_order", n}}));
  long long bad_round_trip = 0;
  const CycNum one(l, Rational(1));
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto r = inv(images[i]);
    if (!r || r->size() != 1 || r->begin()->first != group[i] || !(r->begin()->second == one)) ++bad_round_trip;
  }
  out.push_back(make_check("phi_round_trip", bad_round_trip == 0, Json{{"elements", n}, {"failures", bad_round_trip}}));
  return out;
}

}  // namespace grpd
