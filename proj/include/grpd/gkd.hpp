// G(l,k,d) through the quotient of the groupoid by the color rotation group
// H_k = <theta_k>, theta_k = theta^{l/k}, theta(i) = i+1 mod l.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grpd/classes.hpp"
#include "grpd/commutant.hpp"
#include "grpd/galgebra.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"
#include "grpd/simples.hpp"

namespace grpd {

inline void require_k_divides(int l, int k) { require(k >= 1 && l % k == 0, "k must divide l"); }

/// Shifts every color by `shift` cyclically.
inline ColorFn rotate_colors(const ColorFn& f, int shift) {
  std::vector<int> v(f.values);
  for (auto& c : v) c = mod(c - 1 + shift, f.ell) + 1;
  return {f.ell, std::move(v)};
}

/// theta_k^t on objects.
inline ColorFn theta_k(const ColorFn& f, int k, int t = 1) {
  require_k_divides(f.ell, k);
  return rotate_colors(f, (f.ell / k) * t);
}

/// theta_k^t on morphisms: endpoints move, the permutation does not.
inline GMorphism theta_k(const GMorphism& m, int k, int t = 1) {
  return {theta_k(m.source, k, t), theta_k(m.target, k, t), m.perm};
}

/// theta_k^t on types: the count of color i moves to color i + t l/k.
inline Composition theta_k(const Composition& lambda, int k, int t = 1) {
  const int l = static_cast<int>(lambda.size());
  require_k_divides(l, k);
  Composition r(l, 0);
  for (int i = 0; i < l; ++i) r[mod(i + (l / k) * t, l)] = lambda[i];
  return r;
}

/// theta_k^t on multi-partitions, component-wise as on types.
inline MultiPartition theta_k(const MultiPartition& p, int k, int t = 1) {
  const int l = static_cast<int>(p.comps.size());
  require_k_divides(l, k);
  std::vector<Partition> c(l);
  for (int i = 0; i < l; ++i) c[mod(i + (l / k) * t, l)] = p.comps[i];
  return MultiPartition(std::move(c));
}

/// Smallest s >= 1 with theta_k^s(lambda) = lambda; h = theta_k^s generates H_k^lambda.
inline int stabilizer_step(const Composition& lambda, int k) {
  for (int s = 1; s <= k; ++s) {
    if (theta_k(lambda, k, s) == lambda) return s;
  }
  return k;
}

/// |H_k^lambda|, counted directly.
inline int stabilizer_order(const Composition& lambda, int k) {
  int n = 0;
  for (int t = 0; t < k; ++t) n += theta_k(lambda, k, t) == lambda;
  return n;
}

/// Lexicographically smallest element of the H_k-orbit of lambda.
inline Composition orbit_min(const Composition& lambda, int k) {
  Composition best = lambda;
  for (int t = 1; t < k; ++t) best = std::min(best, theta_k(lambda, k, t));
  return best;
}

/// The cross-section Gamma: orbit minima, in enum_compositions order.
inline std::vector<Composition> gamma_cross_section(int l, int k, int d) {
  std::vector<Composition> out;
  for (auto& c : enum_compositions(l, d)) {
    if (orbit_min(c, k) == c) out.push_back(std::move(c));
  }
  return out;
}

struct ColorOrbit {
  ColorFn representative;      // lexicographically smallest
  std::vector<ColorFn> orbit;  // theta_k^t(representative) for t = 0..size-1
};

/// A quotient morphism, stored as the unique member whose source is the
/// representative of the source orbit.
struct QMorphism {
  GMorphism rep;
  auto operator<=>(const QMorphism&) const = default;
};

class QuotientGroupoid {
 public:
  QuotientGroupoid(int l, int k, int d, long long cap = kDefaultCap) : ell_(l), k_(k), d_(d) {
    require_k_divides(l, k);
    require_cap(int_pow(l, d) * factorial(d), cap, "quotient groupoid");
    for (const auto& f : grpd::objects(l, d, cap)) {
      if (orbit_index_.count(f)) continue;
      ColorOrbit o{f, {}};
      for (int t = 0; t < k; ++t) {
        ColorFn g = theta_k(f, k, t);
        if (t > 0 && g == f) break;
        orbit_index_.emplace(g, orbits_.size());
        o.orbit.push_back(std::move(g));
      }
      orbits_.push_back(std::move(o));
    }
    for (std::size_t a = 0; a < orbits_.size(); ++a) {
      const ColorFn& r = orbits_[a].representative;
      const Composition lam = type_of(r);
      for (std::size_t b = 0; b < orbits_.size(); ++b) {
        for (const auto& g : orbits_[b].orbit) {
          if (type_of(g) != lam) continue;
          for (auto& m : grpd::hom(r, g)) morphisms_.push_back(QMorphism{std::move(m)});
        }
      }
    }
  }

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const std::vector<ColorOrbit>& objects() const { return orbits_; }
  [[nodiscard]] const std::vector<QMorphism>& morphisms() const { return morphisms_; }
  [[nodiscard]] std::size_t object_of(const ColorFn& f) const { return orbit_index_.at(f); }
  [[nodiscard]] const ColorFn& representative(const ColorFn& f) const { return orbits_[object_of(f)].representative; }

  /// t with theta_k^t(from) = to, or nothing if they lie in different orbits.
  [[nodiscard]] std::optional<int> shift_between(const ColorFn& from, const ColorFn& to) const {
    for (int t = 0; t < k_; ++t) {
      if (theta_k(from, k_, t) == to) return t;
    }
    return std::nullopt;
  }

  [[nodiscard]] QMorphism normalize(const GMorphism& raw) const {
    const ColorFn& r = representative(raw.source);
    return QMorphism{theta_k(raw, k_, *shift_between(raw.source, r))};
  }

  /// The member of q whose source is f (f must lie in the source orbit).
  [[nodiscard]] GMorphism member_from(const QMorphism& q, const ColorFn& f) const {
    auto t = shift_between(q.rep.source, f);
    require(t.has_value(), "member_from: object outside the source orbit");
    return theta_k(q.rep, k_, *t);
  }

  /// All distinct members of the orbit q.
  [[nodiscard]] std::vector<GMorphism> members(const QMorphism& q) const {
    std::vector<GMorphism> out;
    for (const auto& f : orbits_[object_of(q.rep.source)].orbit) out.push_back(member_from(q, f));
    return out;
  }

  [[nodiscard]] std::size_t source(const QMorphism& q) const { return object_of(q.rep.source); }
  [[nodiscard]] std::size_t target(const QMorphism& q) const { return object_of(q.rep.target); }

  /// second o first; throws if the orbits do not match.
  [[nodiscard]] QMorphism compose(const QMorphism& second, const QMorphism& first) const {
    if (target(first) != source(second)) throw InvalidArgument("quotient compose: morphisms are not composable");
    return normalize(grpd::compose(member_from(second, first.rep.target), first.rep));
  }

  [[nodiscard]] std::vector<QMorphism> hom(std::size_t a, std::size_t b) const {
    std::vector<QMorphism> out;
    for (const auto& q : morphisms_) {
      if (source(q) == a && target(q) == b) out.push_back(q);
    }
    return out;
  }

  /// Psi(q) = sum of the members of q.
  [[nodiscard]] AlgElem psi(const QMorphism& q) const {
    AlgElem a(ell_, d_);
    for (const auto& m : members(q)) a.add_term(m, CycNum(ell_, Rational(1)));
    return a;
  }

 private:
  int ell_;
  int k_;
  int d_;
  std::vector<ColorOrbit> orbits_;
  std::map<ColorFn, std::size_t> orbit_index_;
  std::vector<QMorphism> morphisms_;
};

/// Kronecker-basis permutation moving tensor factor c to slot c + delta
/// (mod l). Every factor must have the dimension of the slot it lands in.
inline RationalMatrix factor_shift(const MultiSpecht& s, int delta) {
  const int l = static_cast<int>(s.components().size());
  std::vector<std::size_t> dims;
  for (const auto& c : s.components()) dims.push_back(c->dim());
  for (int c = 0; c < l; ++c) {
    require(dims[c] == dims[mod(c + delta, l)], "factor_shift: label is not fixed by the shift");
  }
  const std::size_t n = s.dim();
  RationalMatrix m(n, n, Rational(0));
  std::vector<std::size_t> digits(l);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (int c = l - 1; c >= 0; --c) {
      digits[c] = rest % dims[c];
      rest /= dims[c];
    }
    std::size_t out = 0;
    for (int c = 0; c < l; ++c) out = out * dims[c] + digits[mod(c - delta, l)];
    m(out, idx) = Rational(1);
  }
  return m;
}

enum class LpmVariant {
  literal,  // xi^{(l/|H|) t m} pi(v), as written
  twisted,  // additionally permutes tensor factors by the stabilizer generator
};

/// L_(p,m) on the quotient groupoid. p may have any shape lambda; the module
/// lives on the quotient objects whose orbit meets type lambda.
class LpmModule {
 public:
  LpmModule(const QuotientGroupoid& q, MultiPartition p, int m, LpmVariant variant = LpmVariant::literal)
      : q_(&q), label_(std::move(p)), m_(m), variant_(variant), specht_(label_) {
    require(q.d() >= 1, "L_(p,m) needs d >= 1");
    require(static_cast<int>(label_.comps.size()) == q.ell() && label_.size() == q.d(), "L_(p,m): label mismatch");
    lambda_ = label_.shape();
    f_lambda_ = canonical_object(lambda_);
    step_ = stabilizer_step(lambda_, q.k());
    h_order_ = q.k() / step_;
    require(m >= 1 && m <= h_order_, "L_(p,m): m out of range 1..|H^lambda|");
    for (std::size_t o = 0; o < q.objects().size(); ++o) {
      std::optional<ColorFn> best;
      for (const auto& f : q.objects()[o].orbit) {
        if (type_of(f) == lambda_ && (!best || f < *best)) best = f;
      }
      if (best) {
        block_.emplace(o, comp_objects_.size());
        comp_objects_.push_back(o);
        f_o_.push_back(*best);
      }
    }
    if (variant_ == LpmVariant::twisted) {
      const int delta = step_ * (q.ell() / q.k());
      x_ = to_exact(factor_shift(specht_, -delta), q.ell());
    }
  }

  [[nodiscard]] const MultiPartition& label() const { return label_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const Composition& lambda() const { return lambda_; }
  [[nodiscard]] int stabilizer() const { return h_order_; }
  [[nodiscard]] std::size_t block_dim() const { return specht_.dim(); }
  [[nodiscard]] std::size_t num_blocks() const { return comp_objects_.size(); }
  [[nodiscard]] std::size_t total_dim() const { return block_dim() * num_blocks(); }
  [[nodiscard]] const std::vector<std::size_t>& component_objects() const { return comp_objects_; }
  [[nodiscard]] std::optional<std::size_t> block_of(std::size_t object) const {
    auto it = block_.find(object);
    if (it == block_.end()) return std::nullopt;
    return it->second;
  }
  /// The type-lambda member of quotient object o used as its base point.
  [[nodiscard]] const ColorFn& base(std::size_t object) const { return f_o_.at(block_.at(object)); }

  struct Factor {
    int t = 0;  // power of sigma^(k)_(f,h f), normalized to 1..|H^lambda|
    int u = 0;  // the same power in 0..|H^lambda|-1
    Perm pi;    // element of S_lambda
  };

  /// The decomposition q = (sigma_(f,h f))^t pi, transported to f_lambda.
  [[nodiscard]] Factor factor(const QMorphism& qm) const {
    const std::size_t o1 = q_->source(qm);
    const std::size_t o2 = q_->target(qm);
    const GMorphism r = q_->member_from(qm, base(o1));
    const ColorFn& f2 = base(o2);
    const int w = *q_->shift_between(f2, r.target);
    const GMorphism back = theta_k(canonical_morphism(f2, f_lambda_), q_->k(), w);
    const GMorphism rp = grpd::compose(back, grpd::compose(r, canonical_morphism(f_lambda_, base(o1))));
    if (w % step_ != 0) throw std::logic_error("L_(p,m): factorization does not exist");
    const int u = (w / step_) % h_order_;
    const GMorphism pi = grpd::compose(canonical_morphism(rp.target, f_lambda_), rp);
    return Factor{u == 0 ? h_order_ : u, u, pi.perm};
  }

  [[nodiscard]] CycNum scalar(const Factor& fac) const {
    const int l = q_->ell();
    return root_of_unity(l, static_cast<long long>(l / h_order_) * fac.t * m_);
  }

  [[nodiscard]] ExactMatrix block(const QMorphism& qm) const {
    const Factor fac = factor(qm);
    ExactMatrix b = to_exact(specht_.matrix(fac.pi), q_->ell());
    if (variant_ == LpmVariant::twisted) {
      for (int i = 0; i < fac.u; ++i) b = x_ * b;
    }
    return scalar(fac) * b;
  }

  [[nodiscard]] CycNum block_trace(const QMorphism& qm) const {
    const Factor fac = factor(qm);
    if (variant_ == LpmVariant::literal || fac.u == 0) {
      return scalar(fac) * specht_.character(fac.pi);
    }
    return block(qm).trace();
  }

  [[nodiscard]] bool in_component(const QMorphism& qm) const { return block_of(q_->source(qm)).has_value(); }

  [[nodiscard]] ExactMatrix action(const QMorphism& qm) const {
    const std::size_t n = total_dim();
    const std::size_t b = block_dim();
    ExactMatrix out(n, n, CycNum(q_->ell()));
    if (!in_component(qm)) return out;
    const std::size_t src = *block_of(q_->source(qm));
    const std::size_t dst = *block_of(q_->target(qm));
    const ExactMatrix blk = block(qm);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) out(dst * b + i, src * b + j) = blk(i, j);
    }
    return out;
  }

  /// Action of an H_k-invariant element of A_(l,d), read through Psi^{-1}:
  /// each quotient morphism is represented by its member with source f_o.
  [[nodiscard]] ExactMatrix action(const AlgElem& a) const {
    const std::size_t n = total_dim();
    const std::size_t b = block_dim();
    ExactMatrix out(n, n, CycNum(q_->ell()));
    for (const auto& [sigma, c] : a.terms()) {
      const std::size_t o1 = q_->object_of(sigma.source);
      auto src = block_of(o1);
      if (!src || sigma.source != base(o1)) continue;
      const QMorphism qm = q_->normalize(sigma);
      const std::size_t dst = *block_of(q_->target(qm));
      const ExactMatrix blk = block(qm);
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) out(dst * b + i, *src * b + j) += c * blk(i, j);
      }
    }
    return out;
  }

  /// Character on x in G(l,k,d) via the closed form of Phi(x).
  [[nodiscard]] CycNum character(const WreathElem& x) const {
    CycNum s(q_->ell());
    const Perm inv = inverse(x.perm);
    for (std::size_t blk = 0; blk < comp_objects_.size(); ++blk) {
      const ColorFn& f = f_o_[blk];
      std::vector<int> g(f.d());
      long long e = 0;
      for (int j = 0; j < f.d(); ++j) {
        g[j] = f[inv[j]];
        e += static_cast<long long>(x.colors[j]) * g[j];
      }
      const GMorphism sigma{f, ColorFn(f.ell, std::move(g)), x.perm};
      if (q_->object_of(sigma.target) != comp_objects_[blk]) continue;
      s += root_of_unity(q_->ell(), e) * block_trace(q_->normalize(sigma));
    }
    return s;
  }

  /// Every quotient morphism of the component.
  [[nodiscard]] std::vector<QMorphism> component_morphisms() const {
    std::vector<QMorphism> out;
    for (const auto& qm : q_->morphisms()) {
      if (in_component(qm)) out.push_back(qm);
    }
    return out;
  }

  /// Failures of L(q2 o q1) = L(q2) L(q1) over composable pairs, and of L(e) = 1.
  [[nodiscard]] long long functoriality_failures() const {
    const auto ms = component_morphisms();
    std::map<QMorphism, ExactMatrix> blocks;
    std::map<std::size_t, std::vector<const QMorphism*>> by_source;
    for (const auto& qm : ms) {
      blocks.emplace(qm, block(qm));
      by_source[q_->source(qm)].push_back(&qm);
    }
    long long bad = 0;
    for (const auto& a : ms) {
      for (const auto* b : by_source[q_->target(a)]) {
        if (!(blocks.at(q_->compose(*b, a)) == blocks.at(*b) * blocks.at(a))) ++bad;
      }
    }
    const ExactMatrix id = ExactMatrix::identity(block_dim(), CycNum(q_->ell(), Rational(1)));
    for (std::size_t o : comp_objects_) {
      const QMorphism e{identity_morphism(q_->objects()[o].representative)};
      if (!(blocks.at(e) == id)) ++bad;
    }
    return bad;
  }

  [[nodiscard]] std::size_t commutant_dimension() const {
    std::vector<ExactMatrix> gens;
    for (const auto& qm : component_morphisms()) gens.push_back(action(qm));
    return commutant_dim(gens, total_dim());
  }

 private:
  const QuotientGroupoid* q_;
  MultiPartition label_;
  int m_;
  LpmVariant variant_;
  MultiSpecht specht_;
  Composition lambda_;
  ColorFn f_lambda_;
  int step_ = 1;
  int h_order_ = 1;
  std::vector<std::size_t> comp_objects_;
  std::vector<ColorFn> f_o_;
  std::map<std::size_t, std::size_t> block_;
  ExactMatrix x_{0, 0, CycNum(1)};
};

/// Labels (p, m) with lambda in Gamma, p of shape lambda, 1 <= m <= |H^lambda|.
inline std::vector<std::pair<MultiPartition, int>> gkd_labels(int l, int k, int d) {
  std::vector<std::pair<MultiPartition, int>> out;
  for (const auto& lam : gamma_cross_section(l, k, d)) {
    const int h = stabilizer_order(lam, k);
    for (const auto& p : enum_multipartitions(lam)) {
      for (int m = 1; m <= h; ++m) out.emplace_back(p, m);
    }
  }
  return out;
}

/// True if the generator of H_k^lambda fixes p.
inline bool label_fixed_by_stabilizer(const MultiPartition& p, int k) {
  return theta_k(p, k, stabilizer_step(p.shape(), k)) == p;
}

/// The module Q_p = sum over the sectors theta_k^i(lambda), i < [H_k : H_k^lambda],
/// of L_{theta_k^i p}, with the color rotation Theta.
class QpModule {
 public:
  QpModule(int l, int k, MultiPartition p) : ell_(l), k_(k), label_(std::move(p)), specht_(label_) {
    require_k_divides(l, k);
    lambda_ = label_.shape();
    d_ = label_.size();
    require(d_ >= 1, "Q_p needs d >= 1");
    sectors_ = stabilizer_step(lambda_, k);
    require(label_fixed_by_stabilizer(label_, k), "Q_p: p must be fixed by the stabilizer of its shape");
    const ColorFn f_lambda = canonical_object(lambda_);
    for (int i = 0; i < sectors_; ++i) {
      base_.push_back(theta_k(f_lambda, k, i));
      for (const auto& f : objects_of_type(theta_k(lambda_, k, i))) {
        position_.emplace(f, objects_.size());
        sector_of_.push_back(i);
        objects_.push_back(f);
      }
    }
  }

  [[nodiscard]] std::size_t dim() const { return objects_.size() * specht_.dim(); }
  [[nodiscard]] int sectors() const { return sectors_; }
  [[nodiscard]] const std::vector<ColorFn>& objects() const { return objects_; }

  [[nodiscard]] std::optional<std::size_t> block_of(const ColorFn& f) const {
    auto it = position_.find(f);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }

  /// Q(sigma) as a block, sigma inside one sector.
  [[nodiscard]] RationalMatrix block(const GMorphism& sigma) const {
    const int i = sector_of_[*block_of(sigma.source)];
    const GMorphism t = grpd::compose(canonical_morphism(sigma.target, base_[i]),
                                      grpd::compose(sigma, canonical_morphism(base_[i], sigma.source)));
    return specht_.matrix(t.perm);
  }

  [[nodiscard]] ExactMatrix action(const AlgElem& a) const {
    const std::size_t b = specht_.dim();
    ExactMatrix out(dim(), dim(), CycNum(ell_));
    for (const auto& [sigma, c] : a.terms()) {
      auto src = block_of(sigma.source);
      if (!src) continue;
      const std::size_t dst = *block_of(sigma.target);
      const RationalMatrix blk = block(sigma);
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          if (!blk(i, j).is_zero()) out(dst * b + i, *src * b + j) += c * blk(i, j);
        }
      }
    }
    return out;
  }

  /// Theta: Q(f) -> Q(theta_k f); the identity between consecutive sectors and
  /// a tensor factor permutation where the last sector wraps to the first.
  [[nodiscard]] ExactMatrix theta() const {
    const std::size_t b = specht_.dim();
    ExactMatrix out(dim(), dim(), CycNum(ell_));
    const int delta = sectors_ * (ell_ / k_);
    const RationalMatrix wrap = factor_shift(specht_, delta);
    for (std::size_t src = 0; src < objects_.size(); ++src) {
      const std::size_t dst = *block_of(theta_k(objects_[src], k_));
      const bool wraps = sector_of_[src] == sectors_ - 1;
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          const Rational v = wraps ? wrap(i, j) : Rational(i == j ? 1 : 0);
          if (!v.is_zero()) out(dst * b + i, src * b + j) = CycNum(ell_, v);
        }
      }
    }
    return out;
  }

  /// Failures of Theta Q(sigma) = Q(theta_k sigma) Theta over all morphisms
  /// between objects of Q_p.
  [[nodiscard]] long long equivariance_failures() const {
    const ExactMatrix th = theta();
    long long bad = 0;
    for (const auto& f : objects_) {
      for (const auto& g : objects_) {
        for (const auto& sigma : hom(f, g)) {
          const AlgElem a = AlgElem::basis(sigma);
          const AlgElem ta = AlgElem::basis(theta_k(sigma, k_));
          if (!(th * action(a) == action(ta) * th)) ++bad;
        }
      }
    }
    return bad;
  }

  /// Projection onto the xi_l^{(l/k) j} eigenspace of Theta.
  [[nodiscard]] ExactMatrix projection(int j) const {
    const ExactMatrix th = theta();
    ExactMatrix pw = ExactMatrix::identity(dim(), CycNum(ell_, Rational(1)));
    ExactMatrix out(dim(), dim(), CycNum(ell_));
    for (int t = 0; t < k_; ++t) {
      out = out + root_of_unity(ell_, -static_cast<long long>(ell_ / k_) * j * t) * pw;
      pw = th * pw;
    }
    return CycNum(ell_, Rational(1, k_)) * out;
  }

 private:
  int ell_;
  int k_;
  int d_ = 0;
  MultiPartition label_;
  MultiSpecht specht_;
  Composition lambda_;
  int sectors_ = 1;
  std::vector<ColorFn> base_;
  std::vector<ColorFn> objects_;
  std::vector<int> sector_of_;
  std::map<ColorFn, std::size_t> position_;
};

struct GkdOptions {
  long long cap = kDefaultCap;
  bool exhaustive_composition = true;
  LpmVariant variant = LpmVariant::literal;
};

/// The worked example (l,k,d) = (2,2,2): two orbits of objects, four morphisms.
inline Check example49_check() {
  const QuotientGroupoid q(2, 2, 2);
  bool ok = q.objects().size() == 2 && q.morphisms().size() == 4;
  Json objs = Json::array();
  for (std::size_t o = 0; o < q.objects().size(); ++o) {
    const auto endo = q.hom(o, o);
    ok = ok && endo.size() == 2;
    for (std::size_t o2 = 0; o2 < q.objects().size(); ++o2) ok = ok && (o2 == o || q.hom(o, o2).empty());
    Json orbit = Json::array();
    for (const auto& f : q.objects()[o].orbit) orbit.push_back(f.str());
    objs.push_back(Json{{"orbit", orbit}, {"endomorphisms", endo.size()}});
  }
  ok = ok && q.objects()[0].orbit == std::vector<ColorFn>{ColorFn(2, {1, 1}), ColorFn(2, {2, 2})} &&
       q.objects()[1].orbit == std::vector<ColorFn>{ColorFn(2, {1, 2}), ColorFn(2, {2, 1})};
  // o_1 endomorphisms form S_2 (the swap squares to e), o_2 endomorphisms form H_2
  const auto e2 = q.hom(1, 1);
  bool h2 = false;
  for (const auto& a : e2) {
    if (a.rep.target != a.rep.source) h2 = q.compose(a, a) == QMorphism{identity_morphism(a.rep.source)};
  }
  ok = ok && h2;
  return make_check("example49", ok, Json{{"objects", objs}});
}

/// Orbit sizes, hom-set sizes in the quotient and the semidirect structure of every endomorphism group.
inline Check lemma51_check(const QuotientGroupoid& q) {
  bool ok = true;
  Json rows = Json::array();
  const int k = q.k();
  for (std::size_t o = 0; o < q.objects().size(); ++o) {
    const ColorFn& f = q.objects()[o].representative;
    const Composition lam = type_of(f);
    const int h = stabilizer_order(lam, k);
    const auto endo = q.hom(o, o);
    const auto expected = static_cast<std::size_t>(h * composition_factorial(lam));
    bool row = endo.size() == expected;
    if (q.d() >= 1) row = row && static_cast<int>(q.objects()[o].orbit.size()) == k;
    // N = raw endomorphisms of f, c = sigma_(f, h f) of order |H^lambda|
    const int step = stabilizer_step(lam, k);
    const QMorphism c{canonical_morphism(f, theta_k(f, k, step))};
    const QMorphism e{identity_morphism(f)};
    int order = 1;
    QMorphism pw = c;
    while (!(pw == e) && order <= k) {
      pw = q.compose(c, pw);
      ++order;
    }
    row = row && order == h;
    std::set<QMorphism> normal;
    for (const auto& s : grpd::hom(f, f)) normal.insert(QMorphism{s});
    const QMorphism c_inv{inverse(c.rep)};
    const QMorphism c_inv_n = q.normalize(c_inv.rep);
    for (const auto& n : normal) row = row && normal.count(q.compose(c, q.compose(n, c_inv_n)));
    // N and <c> meet trivially and fill the group
    std::set<QMorphism> products;
    pw = e;
    for (int t = 0; t < h; ++t) {
      for (const auto& n : normal) products.insert(q.compose(pw, n));
      pw = q.compose(c, pw);
    }
    row = row && products.size() == endo.size();
    ok = ok && row;
    rows.push_back(Json{{"object", f.str()},
                        {"stabilizer", h},
                        {"endomorphisms", endo.size()},
                        {"expected", expected},
                        {"ok", row}});
  }
  return make_check("lemma51", ok, Json{{"objects", rows}});
}

/// Composition does not depend on the chosen members.
inline Check quotient_composition_check(const QuotientGroupoid& q) {
  long long bad = 0;
  long long pairs = 0;
  std::map<std::size_t, std::vector<const QMorphism*>> by_source;
  for (const auto& m : q.morphisms()) by_source[q.source(m)].push_back(&m);
  for (const auto& a : q.morphisms()) {
    for (const auto* b : by_source[q.target(a)]) {
      ++pairs;
      const QMorphism ref = q.compose(*b, a);
      for (const auto& am : q.members(a)) {
        const GMorphism bm = q.member_from(*b, am.target);
        if (!(q.normalize(compose(bm, am)) == ref)) ++bad;
      }
    }
  }
  return make_check("quotient_composition_well_defined", bad == 0, Json{{"pairs", pairs}, {"failures", bad}});
}

/// Psi is multiplicative and injective.
inline std::vector<Check> psi_checks(const QuotientGroupoid& q, bool exhaustive) {
  std::vector<Check> out;
  const int l = q.ell();
  const int d = q.d();
  const MorphismIndex index(all_morphisms(l, d));
  EchelonBasis<CycNum> span;
  for (const auto& m : q.morphisms()) span.add(q.psi(m).coordinates(index));
  const std::size_t expected = static_cast<std::size_t>(int_pow(l, d) * factorial(d)) / (d >= 1 ? q.k() : 1);
  out.push_back(make_check("psi_injective", span.rank() == q.morphisms().size() && span.rank() == expected,
                           Json{{"rank", span.rank()}, {"quotient_morphisms", q.morphisms().size()},
                                {"expected", expected}}));
  long long bad = 0;
  long long pairs = 0;
  AlgElem unit(l, d);
  for (std::size_t o = 0; o < q.objects().size(); ++o) {
    unit = unit + q.psi(QMorphism{identity_morphism(q.objects()[o].representative)});
  }
  if (!(unit == alg_unit(l, d))) ++bad;
  if (exhaustive) {
    std::vector<AlgElem> images;
    for (const auto& m : q.morphisms()) images.push_back(q.psi(m));
    for (std::size_t a = 0; a < q.morphisms().size(); ++a) {
      for (std::size_t b = 0; b < q.morphisms().size(); ++b) {
        ++pairs;
        const auto& qa = q.morphisms()[a];
        const auto& qb = q.morphisms()[b];
        const AlgElem prod = images[b] * images[a];
        const AlgElem expect = q.target(qa) == q.source(qb) ? q.psi(q.compose(qb, qa)) : AlgElem(l, d);
        if (!(prod == expect)) ++bad;
      }
    }
  }
  out.push_back(make_check("psi_multiplicative", bad == 0, Json{{"pairs", pairs}, {"failures", bad}}));
  return out;
}

/// span Phi(G(l,k,d)) = span Psi(A_(l,k,d)).
inline Check theorem55_check(const QuotientGroupoid& q, const ClassTable& gkd) {
  const int l = q.ell();
  const int d = q.d();
  const MorphismIndex index(all_morphisms(l, d));
  EchelonBasis<CycNum> psi_span;
  for (const auto& m : q.morphisms()) psi_span.add(q.psi(m).coordinates(index));
  EchelonBasis<CycNum> phi_span;
  long long outside = 0;
  for (const auto& x : gkd.elements()) {
    const auto v = phi_closed_form(x).coordinates(index);
    if (!psi_span.contains(v)) ++outside;
    phi_span.add(v);
  }
  const bool ok = outside == 0 && phi_span.rank() == psi_span.rank() &&
                  static_cast<long long>(phi_span.rank()) == gkd.order();
  return make_check("theorem55", ok,
                    Json{{"dim_phi_span", phi_span.rank()}, {"dim_psi_span", psi_span.rank()},
                         {"group_order", gkd.order()}, {"phi_outside_psi", outside}});
}

inline ClassFunction character_of(const LpmModule& m, const ClassTable& table) {
  return make_class_function(table, [&](const WreathElem& x) { return m.character(x); });
}

/// The L_(p,m) are modules, simple, pairwise distinct and complete.
inline std::vector<Check> theorem77_check(const QuotientGroupoid& q, const ClassTable& gkd, LpmVariant variant) {
  std::vector<Check> out;
  long long sum_sq = 0;
  long long functor_bad = 0;
  long long comm_bad = 0;
  long long unit_bad = 0;
  Json labels = Json::array();
  std::vector<ClassFunction> chars;
  const PhiMap phi_map(q.ell(), q.d());
  for (const auto& [p, m] : gkd_labels(q.ell(), q.k(), q.d())) {
    const LpmModule mod(q, p, m, variant);
    const auto n = static_cast<long long>(mod.total_dim());
    sum_sq += n * n;
    const long long fb = mod.functoriality_failures();
    functor_bad += fb;
    const auto cd = static_cast<long long>(mod.commutant_dimension());
    comm_bad += cd != 1;
    chars.push_back(character_of(mod, gkd));
    // the character agrees with the trace of the matrix of Phi(x)
    for (std::size_t c = 0; c < gkd.num_classes(); ++c) {
      if (!(mod.action(phi_map(gkd.representative(c))).trace() == chars.back().values[c])) ++unit_bad;
    }
    labels.push_back(Json{{"p", p.str()}, {"m", m}, {"dim", n}, {"commutant_dim", cd}, {"functor_failures", fb}});
  }
  long long same = 0;
  long long ortho_bad = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      if (i < j && chars[i] == chars[j]) ++same;
      if (!(inner_product(chars[i], chars[j]) == CycNum(q.ell(), Rational(i == j ? 1 : 0)))) ++ortho_bad;
    }
  }
  out.push_back(make_check("lpm_functoriality", functor_bad == 0, Json{{"failures", functor_bad}}));
  out.push_back(make_check("theorem77_wedderburn", sum_sq == gkd.order(),
                           Json{{"sum_dim_sq", sum_sq}, {"group_order", gkd.order()}, {"labels", labels}}));
  out.push_back(make_check("theorem77_commutant_dim_one", comm_bad == 0, Json{{"failures", comm_bad}}));
  out.push_back(make_check("theorem77_characters_distinct", same == 0 && ortho_bad == 0,
                           Json{{"equal_pairs", same}, {"orthonormality_failures", ortho_bad}}));
  out.push_back(make_check("theorem77_character_equals_trace", unit_bad == 0, Json{{"failures", unit_bad}}));
  out.push_back(make_check("theorem77_count", chars.size() == gkd.num_classes(),
                           Json{{"simples", chars.size()}, {"classes", gkd.num_classes()}}));
  return out;
}

/// Res L_p = sum_m L_(p,m), multiplicity free, for every p.
inline Check corollary78_check(const QuotientGroupoid& q, const ClassTable& gkd, LpmVariant variant) {
  bool ok = true;
  Json rows = Json::array();
  for (const auto& p : enum_all_multipartitions(q.ell(), q.d())) {
    const SimpleModule lp(q.ell(), p);
    const ClassFunction res = make_class_function(gkd, [&](const WreathElem& x) { return lp.character(x); });
    const int h = stabilizer_order(p.shape(), q.k());
    ClassFunction sum = zero_class_function(gkd);
    Json mults = Json::array();
    bool row = true;
    for (int m = 1; m <= h; ++m) {
      const ClassFunction cm = character_of(LpmModule(q, p, m, variant), gkd);
      sum = sum + cm;
      const long long mult = as_multiplicity(inner_product(res, cm));
      mults.push_back(mult);
      row = row && mult == 1;
    }
    row = row && sum == res;
    ok = ok && row;
    rows.push_back(Json{{"p", p.str()}, {"multiplicities", mults}, {"ok", row}});
  }
  return make_check("corollary78", ok, Json{{"rows", rows}});
}

/// Q_p: Theta commutes with the A_(l,k,d) action, and its eigenspaces carry
/// the characters of the L_(p,m), each m reached k/|H^lambda| times.
inline Check qp_cross_check(const QuotientGroupoid& q, const ClassTable& gkd, LpmVariant variant) {
  bool ok = true;
  Json rows = Json::array();
  const int k = q.k();
  const PhiMap phi_map(q.ell(), q.d());
  std::vector<ExactMatrix> reps;
  for (std::size_t c = 0; c < gkd.num_classes(); ++c) reps.push_back(ExactMatrix(0, 0, CycNum(q.ell())));
  for (const auto& lam : gamma_cross_section(q.ell(), k, q.d())) {
    for (const auto& p : enum_multipartitions(lam)) {
      if (!label_fixed_by_stabilizer(p, k)) continue;
      const QpModule qp(q.ell(), k, p);
      const long long eq_bad = qp.equivariance_failures();
      const ExactMatrix th = qp.theta();
      ExactMatrix pw = ExactMatrix::identity(qp.dim(), CycNum(q.ell(), Rational(1)));
      for (int t = 0; t < k; ++t) pw = th * pw;
      const bool order_ok = pw == ExactMatrix::identity(qp.dim(), CycNum(q.ell(), Rational(1)));
      std::vector<ExactMatrix> images;
      for (std::size_t c = 0; c < gkd.num_classes(); ++c) images.push_back(qp.action(phi_map(gkd.representative(c))));
      const int h = stabilizer_order(lam, k);
      std::vector<ClassFunction> lpm;
      for (int m = 1; m <= h; ++m) lpm.push_back(character_of(LpmModule(q, p, m, variant), gkd));
      std::vector<int> hits(h, 0);
      Json matches = Json::array();
      bool row = eq_bad == 0 && order_ok;
      for (int j = 1; j <= k; ++j) {
        const ExactMatrix proj = qp.projection(j);
        ClassFunction cj = zero_class_function(gkd);
        for (std::size_t c = 0; c < gkd.num_classes(); ++c) cj.values[c] = (proj * images[c]).trace();
        int found = 0;
        for (int m = 1; m <= h; ++m) {
          if (cj == lpm[m - 1]) {
            found = m;
            ++hits[m - 1];
          }
        }
        row = row && found > 0;
        matches.push_back(Json{{"eigen_index", j}, {"m", found}});
      }
      for (int m = 1; m <= h; ++m) row = row && hits[m - 1] == k / h;
      ok = ok && row;
      rows.push_back(Json{{"p", p.str()}, {"dim", qp.dim()}, {"equivariance_failures", eq_bad},
                          {"eigenspaces", matches}, {"ok", row}});
    }
  }
  return make_check("qp_eigenspace_cross_check", ok, Json{{"rows", rows}});
}

/// Every check for G(l,k,d). d = 0 is reported as a special case: the empty
/// object is fixed by H_k, so the quotient has one object and one morphism.
inline std::vector<Check> verify_gkd(int l, int k, int d, const GkdOptions& opt = {}) {
  require_k_divides(l, k);
  std::vector<Check> out;
  const QuotientGroupoid q(l, k, d, opt.cap);
  const ClassTable gkd(l, d, k, opt.cap);
  Json summary{{"objects", q.objects().size()}, {"morphisms", q.morphisms().size()}, {"group_order", gkd.order()}};
  if (d == 0) {
    out.push_back(make_check("d0_special_case", q.objects().size() == 1 && q.morphisms().size() == 1 && gkd.order() == 1,
                             summary));
    return out;
  }
  const bool count_ok = static_cast<long long>(q.objects().size()) * k == int_pow(l, d) &&
                        static_cast<long long>(q.morphisms().size()) * k == wreath_order(l, d) &&
                        gkd.order() * k == wreath_order(l, d);
  out.push_back(make_check("quotient_sizes", count_ok, summary));
  out.push_back(lemma51_check(q));
  if (opt.exhaustive_composition) out.push_back(quotient_composition_check(q));
  append(out, psi_checks(q, opt.exhaustive_composition));
  out.push_back(theorem55_check(q, gkd));
  append(out, theorem77_check(q, gkd, opt.variant));
  out.push_back(corollary78_check(q, gkd, opt.variant));
  out.push_back(qp_cross_check(q, gkd, opt.variant));
  return out;
}

}  // namespace grpd
