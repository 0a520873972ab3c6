// Tensor space V^{(x)d} with V = V_1 + ... + V_l, dim V_i = k_i, as a module over
// the groupoid algebra and over the block group GL_k.

#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "grpd/classes.hpp"
#include "grpd/commutant.hpp"
#include "grpd/gkd.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"
#include "grpd/simples.hpp"

namespace grpd {

inline constexpr long long kTensorCap = 4096;

class TensorSpace {
 public:
  TensorSpace(std::vector<int> kvec, int d, long long cap = kTensorCap) : kvec_(std::move(kvec)), d_(d) {
    require(!kvec_.empty(), "TensorSpace: empty k vector");
    for (int k : kvec_) require(k > 0, "TensorSpace: block sizes must be positive");
    require(d >= 0, "TensorSpace: d must be nonnegative");
    n_ = std::accumulate(kvec_.begin(), kvec_.end(), 0);
    require_cap(int_pow(n_, d), cap, "tensor space dimension");
    dim_ = static_cast<std::size_t>(int_pow(n_, d));
    for (int c = 0; c < ell(); ++c) {
      for (int j = 0; j < kvec_[c]; ++j) color_.push_back(c + 1);
    }
  }

  [[nodiscard]] int ell() const { return static_cast<int>(kvec_.size()); }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<int>& kvec() const { return kvec_; }
  /// Block (1-based color) of basis vector v_j, j 0-based.
  [[nodiscard]] int color(int j) const { return color_[j]; }

  /// Basis sequences in lexicographic order, b_1 most significant.
  [[nodiscard]] std::vector<int> sequence(std::size_t idx) const {
    std::vector<int> b(d_);
    for (int i = d_ - 1; i >= 0; --i) {
      b[i] = static_cast<int>(idx % n_);
      idx /= n_;
    }
    return b;
  }
  [[nodiscard]] std::size_t index(const std::vector<int>& b) const {
    std::size_t idx = 0;
    for (int x : b) idx = idx * n_ + x;
    return idx;
  }

  /// The object f with b in G(f).
  [[nodiscard]] ColorFn coloring(const std::vector<int>& b) const {
    std::vector<int> f(d_);
    for (int i = 0; i < d_; ++i) f[i] = color_[b[i]];
    return {ell(), std::move(f)};
  }

  [[nodiscard]] std::vector<std::size_t> block(const ColorFn& f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (coloring(sequence(i)) == f) out.push_back(i);
    }
    return out;
  }

  /// G(sigma): w_1 (x) ... (x) w_d -> w_{sigma^-1(1)} (x) ... on G(source), zero elsewhere.
  [[nodiscard]] RationalMatrix action(const GMorphism& sigma) const {
    require(sigma.source.ell == ell() && sigma.source.d() == d_, "tensor action: morphism of the wrong groupoid");
    RationalMatrix m(dim_, dim_, Rational(0));
    std::vector<int> img(d_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto b = sequence(i);
      if (coloring(b) != sigma.source) continue;
      for (int j = 0; j < d_; ++j) img[sigma.perm[j]] = b[j];
      m(index(img), i) = Rational(1);
    }
    return m;
  }

  [[nodiscard]] ExactMatrix action(const AlgElem& a) const {
    ExactMatrix m(dim_, dim_, CycNum(ell()));
    std::vector<int> img(d_);
    for (const auto& [sigma, c] : a.terms()) {
      for (std::size_t i = 0; i < dim_; ++i) {
        const auto b = sequence(i);
        if (coloring(b) != sigma.source) continue;
        for (int j = 0; j < d_; ++j) img[sigma.perm[j]] = b[j];
        m(index(img), i) += c;
      }
    }
    return m;
  }

  /// Delta(E_ab) = sum_i 1 (x) ... (x) E_ab (x) ... (x) 1.
  [[nodiscard]] RationalMatrix leibniz(int a, int b) const {
    RationalMatrix m(dim_, dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      auto s = sequence(i);
      for (int p = 0; p < d_; ++p) {
        if (s[p] != b) continue;
        s[p] = a;
        m(index(s), i) += Rational(1);
        s[p] = b;
      }
    }
    return m;
  }

  /// Delta(E_ab) for a, b in the same block.
  [[nodiscard]] std::vector<RationalMatrix> gl_generators() const {
    std::vector<RationalMatrix> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (color_[a] == color_[b]) out.push_back(leibniz(a, b));
      }
    }
    return out;
  }

  /// g^{(x)d} for an n x n matrix g.
  [[nodiscard]] RationalMatrix tensor_power(const RationalMatrix& g) const {
    RationalMatrix out = RationalMatrix::identity(1, Rational(1));
    for (int i = 0; i < d_; ++i) out = kron(out, g);
    return out;
  }

  /// Z: v_i -> v_{i + shift} (indices mod n).
  [[nodiscard]] RationalMatrix cyclic_shift(int shift) const {
    RationalMatrix z(n_, n_, Rational(0));
    for (int i = 0; i < n_; ++i) z(mod(i + shift, n_), i) = Rational(1);
    return z;
  }

 private:
  std::vector<int> kvec_;
  int d_;
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<int> color_;
};

inline std::string kvec_str(const std::vector<int>& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return "(" + s + ")";
}

/// Blocks are GL-invariant, the groupoid action is a functor, and
/// it commutes with every GL generator.
inline std::vector<Check> verify_commuting(const TensorSpace& t) {
  std::vector<Check> out;
  const auto gens = t.gl_generators();
  long long leak = 0;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (std::size_t j = 0; j < t.dim(); ++j) {
        if (!g(i, j).is_zero() && t.coloring(t.sequence(i)) != t.coloring(t.sequence(j))) ++leak;
      }
    }
  }
  out.push_back(make_check("lemma11_blocks_invariant", leak == 0, Json{{"leaks", leak}}));
  const auto ms = all_morphisms(t.ell(), t.d());
  std::map<GMorphism, RationalMatrix> act;
  for (const auto& m : ms) act.emplace(m, t.action(m));
  long long functor_bad = 0;
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      if (b.source != a.target) continue;
      if (!(act.at(compose(b, a)) == act.at(b) * act.at(a))) ++functor_bad;
    }
  }
  RationalMatrix unit(t.dim(), t.dim(), Rational(0));
  for (const auto& f : objects(t.ell(), t.d())) unit = unit + act.at(identity_morphism(f));
  if (!(unit == RationalMatrix::identity(t.dim(), Rational(1)))) ++functor_bad;
  out.push_back(make_check("tensor_action_functorial", functor_bad == 0, Json{{"failures", functor_bad}}));
  long long comm_bad = 0;
  for (const auto& [m, a] : act) {
    for (const auto& g : gens) comm_bad += !commute(a, g);
  }
  out.push_back(make_check("lemma11_commuting", comm_bad == 0,
                           Json{{"morphisms", ms.size()}, {"gl_generators", gens.size()}, {"failures", comm_bad}}));
  return out;
}

/// Random block-diagonal matrix with small integer entries, invertible.
inline RationalMatrix random_block_matrix(const TensorSpace& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    RationalMatrix g(t.n(), t.n(), Rational(0));
    for (int a = 0; a < t.n(); ++a) {
      for (int b = 0; b < t.n(); ++b) {
        if (t.color(a) == t.color(b)) g(a, b) = Rational(dist(rng));
      }
    }
    if (rank(g) == static_cast<std::size_t>(t.n())) return g;
  }
}

struct DoubleCentralizerOptions {
  int samples = 3;
  unsigned long long seed = 1;
};

/// The groupoid image equals the commutant of the GL algebra and
/// conversely.
inline std::vector<Check> verify_double_centralizer(const TensorSpace& t, const DoubleCentralizerOptions& opt = {}) {
  std::vector<Check> out;
  const auto gens = t.gl_generators();
  const auto gl = generated_algebra(gens, t.dim(), Rational(1));
  std::vector<RationalMatrix> image;
  for (const auto& m : all_morphisms(t.ell(), t.d())) image.push_back(t.action(m));
  const std::size_t image_dim = span_dim(image);
  const auto comm_gl = commutant_basis(gens, t.dim(), Rational(1));
  const bool first = comm_gl.size() == image_dim && span_contains(comm_gl, image);
  out.push_back(make_check("theorem12_image_is_commutant", first,
                           Json{{"kvec", kvec_str(t.kvec())}, {"d", t.d()}, {"image_dim", image_dim},
                                {"commutant_dim", comm_gl.size()}}));
  const auto comm_image = commutant_basis(image, t.dim(), Rational(1));
  const bool second = comm_image.size() == gl.size() && span_contains(comm_image, gl);
  out.push_back(make_check("theorem12_commutant_is_gl", second,
                           Json{{"gl_algebra_dim", gl.size()}, {"commutant_dim", comm_image.size()}}));
  std::mt19937_64 rng(opt.seed);
  std::vector<RationalMatrix> powers;
  for (int s = 0; s < opt.samples; ++s) powers.push_back(t.tensor_power(random_block_matrix(t, rng)));
  out.push_back(make_check("gl_group_in_leibniz_algebra", span_contains(gl, powers), Json{{"samples", opt.samples}}));
  return out;
}

/// Labels killed on V^{(x)d}: some p_i has more than k_i rows.
inline bool killed_by_tensor_space(const MultiPartition& p, const std::vector<int>& kvec) {
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    if (static_cast<int>(p.comps[i].parts.size()) > kvec[i]) return true;
  }
  return false;
}

/// Character of V^{(x)d} at x: sum over fixed objects f of xi^{c.f} times the
/// number of sequences in G(f) fixed by the permutation.
inline CycNum tensor_character(const TensorSpace& t, const WreathElem& x) {
  RootAccumulator acc(t.ell());
  const int d = t.d();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const auto b = t.sequence(i);
    bool fixed = true;
    for (int j = 0; j < d && fixed; ++j) fixed = b[x.perm[j]] == b[j];
    if (!fixed) continue;
    long long e = 0;
    for (int j = 0; j < d; ++j) e += static_cast<long long>(x.colors[j]) * t.color(b[j]);
    acc.add(e, Rational(1));
  }
  return acc.value();
}

/// The kernel is the ideal of the killed simples.
inline std::vector<Check> kernel_check(const TensorSpace& t) {
  std::vector<Check> out;
  std::vector<RationalMatrix> image;
  for (const auto& m : all_morphisms(t.ell(), t.d())) image.push_back(t.action(m));
  const long long algebra_dim = wreath_order(t.ell(), t.d());
  const long long kernel = algebra_dim - static_cast<long long>(span_dim(image));
  long long predicted = 0;
  Json killed = Json::array();
  const ClassTable table(t.ell(), t.d());
  const ClassFunction chi = make_class_function(table, [&](const WreathElem& x) { return tensor_character(t, x); });
  long long mismatch = 0;
  for (const auto& p : enum_all_multipartitions(t.ell(), t.d())) {
    const SimpleModule m(t.ell(), p);
    const bool k = killed_by_tensor_space(p, t.kvec());
    const long long mult = as_multiplicity(inner_product(chi, character_of(m, table)));
    if (k) {
      const auto n = static_cast<long long>(m.total_dim());
      predicted += n * n;
      killed.push_back(p.str());
    }
    if (mult < 0 || (mult == 0) != k) ++mismatch;
  }
  out.push_back(make_check("lemma17_kernel_dim", kernel == predicted,
                           Json{{"kvec", kvec_str(t.kvec())}, {"d", t.d()}, {"kernel_dim", kernel},
                                {"predicted", predicted}, {"killed", killed}}));
  out.push_back(make_check("lemma17_killed_labels", mismatch == 0, Json{{"mismatches", mismatch}}));
  const bool all_large = std::all_of(t.kvec().begin(), t.kvec().end(), [&](int k) { return k >= t.d(); });
  if (all_large) out.push_back(make_check("faithful_when_blocks_large", kernel == 0, Json{{"kernel_dim", kernel}}));
  return out;
}

struct Theorem95Params {
  int ell = 2;
  int k = 2;
  int m = 1;
  int d = 1;
};

/// Duality for G(l,k,d) with n = l m, blocks (m, ..., m) and Z: v_i -> v_{i + (l/k) m}.
inline std::vector<Check> theorem95_check(const Theorem95Params& p, long long cap = kTensorCap) {
  require_k_divides(p.ell, p.k);
  require(p.m >= 1, "theorem95: m must be positive");
  std::vector<Check> out;
  const TensorSpace t(std::vector<int>(p.ell, p.m), p.d, cap);
  const RationalMatrix z = t.tensor_power(t.cyclic_shift((p.ell / p.k) * p.m));
  const QuotientGroupoid q(p.ell, p.k, p.d);
  std::vector<RationalMatrix> image;
  for (const auto& qm : q.morphisms()) {
    RationalMatrix s(t.dim(), t.dim(), Rational(0));
    for (const auto& member : q.members(qm)) s = s + t.action(member);
    image.push_back(std::move(s));
  }
  auto gens = t.gl_generators();
  long long comm_bad = 0;
  for (const auto& a : image) {
    comm_bad += !commute(a, z);
    for (const auto& g : gens) comm_bad += !commute(a, g);
  }
  const std::size_t image_dim = span_dim(image);
  const long long alg_dim = wreath_order(p.ell, p.d) / (p.d >= 1 ? p.k : 1);
  Json params{{"ell", p.ell}, {"k", p.k}, {"m", p.m}, {"d", p.d}, {"n", t.n()}};
  out.push_back(make_check("theorem95_commuting", comm_bad == 0, Json{{"params", params}, {"failures", comm_bad}}));
  gens.push_back(z);
  const auto comm = commutant_basis(gens, t.dim(), Rational(1));
  const bool eq = comm.size() == image_dim && span_contains(comm, image);
  out.push_back(make_check("theorem95_image_is_commutant", eq,
                           Json{{"image_dim", image_dim}, {"commutant_dim", comm.size()}, {"algebra_dim", alg_dim},
                                {"faithful", static_cast<long long>(image_dim) == alg_dim}}));
  const auto outer = generated_algebra(gens, t.dim(), Rational(1));
  const auto comm_image = commutant_basis(image, t.dim(), Rational(1));
  const bool back = comm_image.size() == outer.size() && span_contains(comm_image, outer);
  out.push_back(make_check("theorem95_commutant_is_gl_z", back,
                           Json{{"gl_z_algebra_dim", outer.size()}, {"commutant_dim", comm_image.size()}}));
  return out;
}

}  // namespace grpd
