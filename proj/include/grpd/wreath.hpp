// The generalized symmetric group S(l,d) = C_l wr S_d as colored permutations.
//
// x = (perm, colors) stands for the monomial matrix D(c) P_sigma, where
// P_sigma e_i = e_{sigma(i)} and D(c) = diag(xi^{c_1}, ..., xi^{c_d}). Row j of
// the matrix holds xi^{c_j} in column sigma^{-1}(j).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grpd/cyclotomic.hpp"
#include "grpd/error.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/matrix.hpp"
#include "grpd/perm.hpp"

namespace grpd {

inline int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

struct WreathElem {
  int ell = 1;
  Perm perm;
  std::vector<int> colors;  // exponents mod l

  WreathElem() = default;
  WreathElem(int l, Perm p, std::vector<int> c) : ell(l), perm(std::move(p)), colors(std::move(c)) {
    require(ell >= 1, "WreathElem: l must be positive");
    require(perm.size() == colors.size(), "WreathElem: perm and colors differ in length");
    require(is_permutation(perm), "WreathElem: perm is not a permutation");
    for (auto& x : colors) x = mod(x, ell);
  }

  [[nodiscard]] int d() const { return static_cast<int>(perm.size()); }

  auto operator<=>(const WreathElem&) const = default;

  [[nodiscard]] std::string str() const {
    std::string s = perm_str(perm) + "^(";
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(colors[i]);
    }
    return s + ")";
  }
};

inline WreathElem wreath_identity(int l, int d) { return {l, identity_perm(d), std::vector<int>(d, 0)}; }

/// (a, sigma)(b, tau) = (a_j + b_{sigma^{-1}(j)}, sigma o tau).
inline WreathElem wreath_mul(const WreathElem& x, const WreathElem& y) {
  require(x.ell == y.ell && x.d() == y.d(), "wreath_mul: parameter mismatch");
  const Perm sinv = inverse(x.perm);
  std::vector<int> c(x.d());
  for (int j = 0; j < x.d(); ++j) c[j] = x.colors[j] + y.colors[sinv[j]];
  return {x.ell, compose(x.perm, y.perm), std::move(c)};
}

inline WreathElem wreath_inverse(const WreathElem& x) {
  std::vector<int> c(x.d());
  for (int j = 0; j < x.d(); ++j) c[j] = -x.colors[x.perm[j]];
  return {x.ell, inverse(x.perm), std::move(c)};
}

inline WreathElem wreath_pow(const WreathElem& x, int e) {
  WreathElem r = wreath_identity(x.ell, x.d());
  for (int i = 0; i < e; ++i) r = wreath_mul(r, x);
  return r;
}

/// The monomial matrix over Q(xi_l).
inline ExactMatrix monomial_matrix(const WreathElem& x) {
  ExactMatrix m(x.d(), x.d(), CycNum(x.ell));
  for (int i = 0; i < x.d(); ++i) {
    const int j = x.perm[i];
    m(j, i) = root_of_unity(x.ell, x.colors[j]);
  }
  return m;
}

/// s_0 (diagonal, xi at position 1).
inline WreathElem gen_s0(int l, int d) {
  require(d >= 1, "s_0 needs d >= 1");
  std::vector<int> c(d, 0);
  c[0] = 1;
  return {l, identity_perm(d), std::move(c)};
}

/// s_i for 1 <= i <= d-1: the transposition (i, i+1).
inline WreathElem gen_s(int l, int d, int i) {
  require(i >= 1 && i < d, "s_i needs 1 <= i <= d-1");
  return {l, adjacent_transposition(d, i - 1), std::vector<int>(d, 0)};
}

/// s_0, s_1, ..., s_{d-1}.
inline std::vector<WreathElem> generators(int l, int d) {
  require(d >= 1, "generators: d must be positive");
  std::vector<WreathElem> g{gen_s0(l, d)};
  for (int i = 1; i < d; ++i) g.push_back(gen_s(l, d, i));
  return g;
}

/// s_0^{(j)} as the diagonal element with xi at position j (1-based).
inline WreathElem s0_j(int l, int d, int j) {
  require(j >= 1 && j <= d, "s0_j: position out of range");
  std::vector<int> c(d, 0);
  c[j - 1] = 1;
  return {l, identity_perm(d), std::move(c)};
}

/// Generator word s_{j-1} ... s_1 s_0 s_1 ... s_{j-1}, as indices into generators().
inline std::vector<int> s0_j_word(int j) {
  std::vector<int> w;
  for (int i = j - 1; i >= 1; --i) w.push_back(i);
  w.push_back(0);
  for (int i = 1; i <= j - 1; ++i) w.push_back(i);
  return w;
}

inline WreathElem evaluate_word(int l, int d, const std::vector<int>& word) {
  const auto gens = generators(l, d);
  WreathElem r = wreath_identity(l, d);
  for (int g : word) r = wreath_mul(r, gens.at(g));
  return r;
}

inline WreathElem s0_j_by_word(int l, int d, int j) { return evaluate_word(l, d, s0_j_word(j)); }

/// Index perm_rank * l^d + color rank; a bijection onto 0..l^d d! - 1.
inline std::int64_t wreath_index(const WreathElem& x) {
  std::int64_t c = 0;
  for (int v : x.colors) c = c * x.ell + v;
  return perm_rank(x.perm) * int_pow(x.ell, x.d()) + c;
}

inline WreathElem wreath_from_index(int l, int d, std::int64_t idx) {
  const std::int64_t lp = int_pow(l, d);
  std::vector<int> c(d);
  std::int64_t ci = idx % lp;
  for (int i = d - 1; i >= 0; --i) {
    c[i] = static_cast<int>(ci % l);
    ci /= l;
  }
  return {l, perm_unrank(d, idx / lp), std::move(c)};
}

inline std::int64_t wreath_order(int l, int d) { return int_pow(l, d) * factorial(d); }

/// Every element of S(l,d) in index order.
inline std::vector<WreathElem> enum_group(int l, int d, long long cap = kDefaultCap) {
  const std::int64_t n = wreath_order(l, d);
  require_cap(n, cap, "S(" + std::to_string(l) + "," + std::to_string(d) + ")");
  std::vector<WreathElem> out;
  out.reserve(n);
  for (std::int64_t i = 0; i < n; ++i) out.push_back(wreath_from_index(l, d, i));
  return out;
}

/// The determinant sign(perm) * xi^{sum colors} as an exact cyclotomic.
inline CycNum determinant(const WreathElem& x) {
  long long s = 0;
  for (int c : x.colors) s += c;
  return root_of_unity(x.ell, s) * Rational(sign(x.perm));
}

/// Membership in G(l,k,d): the product of the nonzero entries lies in
/// C_{l/k}, i.e. k divides the color sum.
inline bool gkd_member(const WreathElem& x, int k) {
  require(k >= 1 && x.ell % k == 0, "gkd_member: k must divide l");
  long long s = 0;
  for (int c : x.colors) s += c;
  return s % k == 0;
}

/// Standard generators of G(l,k,d): s_0^k, s_0^{-1} s_1 s_0, s_1, ..., s_{d-1}.
inline std::vector<WreathElem> gkd_generators(int l, int k, int d) {
  require(k >= 1 && l % k == 0, "gkd_generators: k must divide l");
  require(d >= 1, "gkd_generators: d must be positive");
  const WreathElem s0 = gen_s0(l, d);
  std::vector<WreathElem> g{wreath_pow(s0, k)};
  if (d >= 2) g.push_back(wreath_mul(wreath_mul(wreath_inverse(s0), gen_s(l, d, 1)), s0));
  for (int i = 1; i < d; ++i) g.push_back(gen_s(l, d, i));
  return g;
}

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

/// Evaluates every defining relation of S(l,d) on the concrete generators.
inline std::vector<RelationCheck> check_presentation(int l, int d) {
  std::vector<RelationCheck> out;
  if (d == 0) return out;
  const auto g = generators(l, d);
  const WreathElem e = wreath_identity(l, d);
  auto w = [&](std::initializer_list<int> word) {
    WreathElem r = e;
    for (int i : word) r = wreath_mul(r, g[i]);
    return r;
  };
  out.push_back({"s0^l = e", wreath_pow(g[0], l) == e});
  for (int i = 1; i < d; ++i) out.push_back({"s" + std::to_string(i) + "^2 = e", w({i, i}) == e});
  if (d >= 2) out.push_back({"s0 s1 s0 s1 = s1 s0 s1 s0", w({0, 1, 0, 1}) == w({1, 0, 1, 0})});
  for (int i = 1; i + 1 < d; ++i) {
    out.push_back({"braid s" + std::to_string(i) + " s" + std::to_string(i + 1),
                   w({i, i + 1, i}) == w({i + 1, i, i + 1})});
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 2; j < d; ++j) {
      out.push_back({"s" + std::to_string(i) + " s" + std::to_string(j) + " commute", w({i, j}) == w({j, i})});
    }
  }
  return out;
}

}  // namespace grpd
