// The rook monoid IS_d of partial bijections of {1..d}, its monoid algebra,
// and the epimorphism C[S(2,d)] -> C[IS_d] with s_0 -> 2 eps_1 - e.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "grpd/perm.hpp"
#include "grpd/rational.hpp"
#include "grpd/report.hpp"
#include "grpd/schurweyl.hpp"
#include "grpd/sparse.hpp"

namespace grpd {

/// Partial injective map on {0..d-1}; -1 marks undefined points.
struct RookElem {
  std::vector<int> map;

  [[nodiscard]] int d() const { return static_cast<int>(map.size()); }
  [[nodiscard]] bool is_valid() const {
    std::vector<bool> hit(map.size(), false);
    for (int v : map) {
      if (v < -1 || v >= d()) return false;
      if (v >= 0) {
        if (hit[v]) return false;
        hit[v] = true;
      }
    }
    return true;
  }
  [[nodiscard]] std::string str() const {
    std::string s = "[";
    for (int i = 0; i < d(); ++i) s += (i ? " " : "") + (map[i] < 0 ? std::string("-") : std::to_string(map[i] + 1));
    return s + "]";
  }
  auto operator<=>(const RookElem&) const = default;
};

/// (a b)(i) = a(b(i)).
inline RookElem rook_compose(const RookElem& a, const RookElem& b) {
  RookElem r{std::vector<int>(b.map.size(), -1)};
  for (std::size_t i = 0; i < b.map.size(); ++i) {
    if (b.map[i] >= 0) r.map[i] = a.map[b.map[i]];
  }
  return r;
}

inline RookElem rook_identity(int d) { return {identity_perm(d)}; }

/// Identity on {2..d}, undefined at 1.
inline RookElem rook_eps1(int d) {
  RookElem e = rook_identity(d);
  if (d >= 1) e.map[0] = -1;
  return e;
}

/// All partial bijections, ordered by the map vector.
inline std::vector<RookElem> all_rook_elems(int d) {
  std::vector<RookElem> out;
  std::vector<int> cur(d, -1);
  std::vector<bool> used(d, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d) {
      out.push_back(RookElem{cur});
      return;
    }
    cur[i] = -1;
    self(self, i + 1);
    for (int v = 0; v < d; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur[i] = v;
      self(self, i + 1);
      used[v] = false;
    }
    cur[i] = -1;
  };
  rec(rec, 0);
  return out;
}

/// sum_j C(d,j)^2 j!
inline long long rook_order(int d) {
  long long s = 0;
  for (int j = 0; j <= d; ++j) {
    long long c = 1;
    for (int i = 0; i < j; ++i) c = c * (d - i) / (i + 1);
    s += c * c * factorial(j);
  }
  return s;
}

class RookAlg {
 public:
  explicit RookAlg(int d) : d_(d) {}
  static RookAlg basis(const RookElem& r, const Rational& c = Rational(1)) {
    RookAlg a(r.d());
    a.add(r, c);
    return a;
  }
  void add(const RookElem& r, const Rational& c) {
    auto [it, fresh] = terms_.emplace(r, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  [[nodiscard]] const std::map<RookElem, Rational>& terms() const { return terms_; }
  [[nodiscard]] int d() const { return d_; }

  friend RookAlg operator+(RookAlg a, const RookAlg& b) {
    for (const auto& [r, c] : b.terms_) a.add(r, c);
    return a;
  }
  friend RookAlg operator-(RookAlg a, const RookAlg& b) {
    for (const auto& [r, c] : b.terms_) a.add(r, Rational(0) - c);
    return a;
  }
  friend RookAlg operator*(const Rational& s, const RookAlg& a) {
    RookAlg r(a.d_);
    for (const auto& [x, c] : a.terms_) r.add(x, s * c);
    return r;
  }
  friend RookAlg operator*(const RookAlg& a, const RookAlg& b) {
    RookAlg r(a.d_);
    for (const auto& [x, c] : a.terms_) {
      for (const auto& [y, e] : b.terms_) r.add(rook_compose(x, y), c * e);
    }
    return r;
  }
  friend bool operator==(const RookAlg& a, const RookAlg& b) { return a.terms_ == b.terms_; }

 private:
  int d_;
  std::map<RookElem, Rational> terms_;
};

/// Images of s_0, s_1, ..., s_{d-1}.
inline std::vector<RookAlg> rook_generator_images(int d) {
  std::vector<RookAlg> g;
  const RookAlg e = RookAlg::basis(rook_identity(d));
  g.push_back(Rational(2) * RookAlg::basis(rook_eps1(d)) - e);
  for (int i = 1; i < d; ++i) g.push_back(RookAlg::basis(RookElem{adjacent_transposition(d, i - 1)}));
  return g;
}

/// Relations of S(2,d) on the images, the two identities used for them, and
/// surjectivity by span growth in C[IS_d].
inline std::vector<Check> rook_epimorphism_check(int d) {
  require(d >= 1 && d <= 5, "rook check needs 1 <= d <= 5");
  std::vector<Check> out;
  const auto g = rook_generator_images(d);
  const RookAlg e = RookAlg::basis(rook_identity(d));
  auto w = [&](std::initializer_list<int> word) {
    RookAlg r = e;
    for (int i : word) r = r * g[i];
    return r;
  };
  Json rels = Json::array();
  bool ok = true;
  auto rel = [&](const std::string& name, bool holds) {
    rels.push_back(Json{{"relation", name}, {"holds", holds}});
    ok = ok && holds;
  };
  rel("s0^2 = e", w({0, 0}) == e);
  for (int i = 1; i < d; ++i) rel("s" + std::to_string(i) + "^2 = e", w({i, i}) == e);
  if (d >= 2) rel("s0 s1 s0 s1 = s1 s0 s1 s0", w({0, 1, 0, 1}) == w({1, 0, 1, 0}));
  for (int i = 1; i + 1 < d; ++i) {
    rel("braid s" + std::to_string(i) + " s" + std::to_string(i + 1), w({i, i + 1, i}) == w({i + 1, i, i + 1}));
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 2; j < d; ++j) {
      rel("s" + std::to_string(i) + " s" + std::to_string(j) + " commute", w({i, j}) == w({j, i}));
    }
  }
  out.push_back(make_check("rook_relations", ok, Json{{"d", d}, {"relations", rels}}));

  const RookElem eps = rook_eps1(d);
  bool idem = rook_compose(eps, eps) == eps;
  if (d >= 2) {
    const RookElem s1{adjacent_transposition(d, 0)};
    const RookElem lhs = rook_compose(eps, rook_compose(s1, rook_compose(eps, s1)));
    const RookElem rhs = rook_compose(s1, rook_compose(eps, rook_compose(s1, eps)));
    RookElem expect = rook_identity(d);
    expect.map[0] = expect.map[1] = -1;
    idem = idem && lhs == rhs && lhs == expect;
  }
  out.push_back(make_check("rook_eps_identities", idem, Json::object()));

  // span growth from e under left multiplication by the images
  const auto elems = all_rook_elems(d);
  std::map<RookElem, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos.emplace(elems[i], i);
  auto vec = [&](const RookAlg& a) {
    SparseVec<Rational> v;
    for (const auto& [r, c] : a.terms()) v.emplace(pos.at(r), c);
    return v;
  };
  EchelonBasis<Rational> span;
  span.add(vec(e));
  std::vector<RookAlg> frontier{e};
  while (!frontier.empty()) {
    std::vector<RookAlg> next;
    for (const auto& b : frontier) {
      for (const auto& gen : g) {
        RookAlg p = gen * b;
        if (span.add(vec(p))) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  const auto order = static_cast<std::size_t>(rook_order(d));
  out.push_back(make_check("rook_surjective", span.rank() == order && elems.size() == order,
                           Json{{"span_dim", span.rank()}, {"order", order}, {"enumerated", elems.size()}}));
  return out;
}

/// Image dimension of A_(2,d) on V^{(x)d} with blocks (n-1, 1), next to |IS_d|.
/// Only n > d is asserted; n = d is recorded.
inline Check rook_tensor_image(int d, int n, long long cap = kTensorCap) {
  require(n >= 2, "rook_tensor_image: n must be at least 2");
  const TensorSpace t({n - 1, 1}, d, cap);
  EchelonBasis<Rational> span;
  for (const auto& m : all_morphisms(2, d)) span.add(flatten(t.action(m)));
  const auto dim = static_cast<long long>(span.rank());
  const long long order = rook_order(d);
  const bool pass = d < n ? dim == order : dim <= order;
  return make_check("rook_tensor_image_n" + std::to_string(n), pass,
                    Json{{"d", d}, {"n", n}, {"image_dim", dim}, {"rook_order", order},
                         {"measured_kernel", wreath_order(2, d) - dim}, {"asserted", d < n}});
}

}  // namespace grpd
