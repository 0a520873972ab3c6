// The simple modules L_p of the groupoid algebra, their characters through
// Phi, completeness, branching and the generalized Young subgroup check.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpd/classes.hpp"
#include "grpd/combinat.hpp"
#include "grpd/commutant.hpp"
#include "grpd/galgebra.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"
#include "grpd/specht.hpp"

namespace grpd {

/// Sums Rational weights attached to powers of xi_l, then converts once.
class RootAccumulator {
 public:
  explicit RootAccumulator(int l) : ell_(l), bins_(l, Rational(0)) {}
  void add(long long power, const Rational& w) {
    if (w.is_zero()) return;
    bins_[mod(power, ell_)] += w;
  }
  [[nodiscard]] CycNum value() const {
    CycNum s(ell_);
    for (int e = 0; e < ell_; ++e) {
      if (!bins_[e].is_zero()) s += root_of_unity(ell_, e) * bins_[e];
    }
    return s;
  }

 private:
  int ell_;
  std::vector<Rational> bins_;
};

/// L_p: the Specht module S_p placed on every object of type lambda and
/// transported along the canonical morphisms.
class SimpleModule {
 public:
  SimpleModule(int l, MultiPartition p) : ell_(l), label_(std::move(p)), specht_(label_) {
    require(static_cast<int>(label_.comps.size()) == l, "SimpleModule: label needs l components");
    lambda_ = label_.shape();
    f_lambda_ = canonical_object(lambda_);
    objects_ = objects_of_type(lambda_);
    for (std::size_t i = 0; i < objects_.size(); ++i) position_.emplace(objects_[i], i);
  }

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int d() const { return label_.size(); }
  [[nodiscard]] const MultiPartition& label() const { return label_; }
  [[nodiscard]] const Composition& lambda() const { return lambda_; }
  [[nodiscard]] const ColorFn& f_lambda() const { return f_lambda_; }
  [[nodiscard]] const MultiSpecht& specht() const { return specht_; }
  [[nodiscard]] std::size_t block_dim() const { return specht_.dim(); }
  [[nodiscard]] const std::vector<ColorFn>& objects() const { return objects_; }
  [[nodiscard]] std::size_t total_dim() const { return block_dim() * objects_.size(); }

  /// Index of the block of f, or nothing if f is not of type lambda.
  [[nodiscard]] std::optional<std::size_t> block_of(const ColorFn& f) const {
    auto it = position_.find(f);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }

  /// sigma_(g,f_lambda) o pi o sigma_(f_lambda,f), an element of S_lambda.
  [[nodiscard]] Perm transported(const GMorphism& pi) const {
    require(pi.is_valid(), "transported: invalid morphism");
    require(type_of(pi.source) == lambda_, "transported: morphism outside the component of lambda");
    const GMorphism m = compose(canonical_morphism(pi.target, f_lambda_),
                                compose(pi, canonical_morphism(f_lambda_, pi.source)));
    return m.perm;
  }

  /// Block L_p(pi): L_p(f) -> L_p(g).
  [[nodiscard]] RationalMatrix block(const GMorphism& pi) const { return specht_.matrix(transported(pi)); }

  /// L_p(pi) on the whole module; zero when pi is outside the component.
  [[nodiscard]] RationalMatrix action(const GMorphism& pi) const {
    const std::size_t n = total_dim();
    const std::size_t b = block_dim();
    RationalMatrix m(n, n, Rational(0));
    auto src = block_of(pi.source);
    if (!src) return m;
    const std::size_t dst = *block_of(pi.target);
    const RationalMatrix blk = block(pi);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) m(dst * b + i, *src * b + j) = blk(i, j);
    }
    return m;
  }

  [[nodiscard]] ExactMatrix action(const AlgElem& a) const {
    const std::size_t n = total_dim();
    const std::size_t b = block_dim();
    ExactMatrix m(n, n, CycNum(ell_));
    for (const auto& [pi, c] : a.terms()) {
      auto src = block_of(pi.source);
      if (!src) continue;
      const std::size_t dst = *block_of(pi.target);
      const RationalMatrix blk = block(pi);
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          if (!blk(i, j).is_zero()) m(dst * b + i, *src * b + j) += c * blk(i, j);
        }
      }
    }
    return m;
  }

  /// Trace of the action of a; only endomorphisms contribute.
  [[nodiscard]] CycNum trace(const AlgElem& a) const {
    CycNum t(ell_);
    for (const auto& [pi, c] : a.terms()) {
      if (pi.is_endo() && block_of(pi.source)) t += c * specht_.character(transported(pi));
    }
    return t;
  }

  /// chi(x) = trace of Phi(x), summed directly over the objects fixed by x.
  [[nodiscard]] CycNum character(const WreathElem& x) const {
    require(x.ell == ell_ && x.d() == d(), "SimpleModule::character: element of a different group");
    RootAccumulator acc(ell_);
    for (const auto& f : objects_) {
      bool fixed = true;
      long long e = 0;
      for (int i = 0; i < x.d() && fixed; ++i) {
        fixed = f[x.perm[i]] == f[i];
        e += static_cast<long long>(x.colors[i]) * f[i];
      }
      if (!fixed) continue;
      acc.add(e, specht_.character(transported(GMorphism{f, f, x.perm})));
    }
    return acc.value();
  }

  /// Generators of the image algebra: block idempotents, the transports
  /// c_f = L(sigma_(f_lambda,f)) and their inverses, and the Young subgroup
  /// generators at f_lambda.
  [[nodiscard]] std::vector<RationalMatrix> algebra_generators() const {
    std::vector<RationalMatrix> gens;
    for (const auto& f : objects_) {
      gens.push_back(action(identity_morphism(f)));
      gens.push_back(action(canonical_morphism(f_lambda_, f)));
      gens.push_back(action(canonical_morphism(f, f_lambda_)));
    }
    for (std::size_t c = 0; c < lambda_.size(); ++c) {
      const int off = specht_.offsets()[c];
      for (int i = 0; i + 1 < lambda_[c]; ++i) {
        gens.push_back(action(GMorphism{f_lambda_, f_lambda_, adjacent_transposition(d(), off + i)}));
      }
    }
    return gens;
  }

  [[nodiscard]] std::size_t commutant_dimension() const { return commutant_dim(algebra_generators(), total_dim()); }

  /// Every morphism of the component of lambda.
  [[nodiscard]] std::vector<GMorphism> component_morphisms() const {
    std::vector<GMorphism> out;
    for (const auto& f : objects_) {
      for (const auto& g : objects_) {
        for (auto& m : hom(f, g)) out.push_back(std::move(m));
      }
    }
    return out;
  }

  /// L(tau o sigma) = L(tau) L(sigma) on every composable pair of the component.
  [[nodiscard]] long long functoriality_failures() const {
    const auto ms = component_morphisms();
    std::map<ColorFn, std::vector<const GMorphism*>> by_source;
    std::map<GMorphism, RationalMatrix> blocks;
    for (const auto& m : ms) {
      by_source[m.source].push_back(&m);
      blocks.emplace(m, block(m));
    }
    long long bad = 0;
    for (const auto& s : ms) {
      for (const auto* t : by_source[s.target]) {
        if (!(blocks.at(compose(*t, s)) == blocks.at(*t) * blocks.at(s))) ++bad;
      }
    }
    for (const auto& f : objects_) {
      const RationalMatrix id = RationalMatrix::identity(block_dim(), Rational(1));
      if (!(blocks.at(identity_morphism(f)) == id)) ++bad;
    }
    return bad;
  }

 private:
  int ell_;
  MultiPartition label_;
  MultiSpecht specht_;
  Composition lambda_;
  ColorFn f_lambda_;
  std::vector<ColorFn> objects_;
  std::map<ColorFn, std::size_t> position_;
};

/// (d!/lambda!) dim S_p.
inline std::int64_t predicted_total_dim(const MultiPartition& p) {
  std::int64_t dim = 1;
  for (const auto& c : p.comps) dim *= hook_length_dim(c);
  return factorial(p.size()) / composition_factorial(p.shape()) * dim;
}

inline bool total_dim_check(int l, const MultiPartition& p) {
  return static_cast<std::int64_t>(SimpleModule(l, p).total_dim()) == predicted_total_dim(p);
}

inline ClassFunction character_of(const SimpleModule& m, const ClassTable& table) {
  return make_class_function(table, [&](const WreathElem& x) { return m.character(x); });
}

/// All simple modules of A_(l,d), in enum_all_multipartitions order.
inline std::vector<SimpleModule> all_simples(int l, int d) {
  std::vector<SimpleModule> out;
  for (auto& p : enum_all_multipartitions(l, d)) out.emplace_back(l, std::move(p));
  return out;
}

struct CompletenessOptions {
  long long cap = kDefaultCap;
  bool functoriality = true;
  bool commutant = true;
};

/// Functoriality, total dimension (d!/lambda!) dim S_p, Wedderburn, irreducibility, distinct characters
/// and the agreement of chi with the trace of Phi(x).
inline std::vector<Check> verify_complete(int l, int d, const CompletenessOptions& opt = {}) {
  std::vector<Check> out;
  const ClassTable table(l, d, 1, opt.cap);
  const auto simples = all_simples(l, d);
  const PhiMap phi_map(l, d);

  Json dims = Json::array();
  long long sum_sq = 0;
  long long eq5_bad = 0;
  long long functor_bad = 0;
  long long comm_bad = 0;
  Json comm_dims = Json::array();
  std::vector<ClassFunction> chars;
  long long trace_bad = 0;
  for (const auto& m : simples) {
    const auto n = static_cast<long long>(m.total_dim());
    dims.push_back(Json{{"label", m.label().str()}, {"block_dim", m.block_dim()}, {"total_dim", n}});
    sum_sq += n * n;
    if (n != predicted_total_dim(m.label())) ++eq5_bad;
    if (opt.functoriality) functor_bad += m.functoriality_failures();
    if (opt.commutant) {
      const auto cd = static_cast<long long>(m.commutant_dimension());
      comm_dims.push_back(cd);
      if (cd != 1) ++comm_bad;
    }
    chars.push_back(character_of(m, table));
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      const auto& x = table.representative(c);
      const AlgElem image = d == 0 ? phi_map.unit() : phi_map(x);
      if (!(m.trace(image) == chars.back().values[c])) ++trace_bad;
    }
  }
  long long same = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = i + 1; j < chars.size(); ++j) same += chars[i] == chars[j];
  }
  // orthonormality is a consequence, but cheap and informative
  long long ortho_bad = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      const CycNum ip = inner_product(chars[i], chars[j]);
      if (!(ip == CycNum(l, Rational(i == j ? 1 : 0)))) ++ortho_bad;
    }
  }
  const long long order = table.order();
  if (opt.functoriality) {
    out.push_back(make_check("functoriality", functor_bad == 0, Json{{"failures", functor_bad}}));
  }
  out.push_back(make_check("eq5_total_dim", eq5_bad == 0, Json{{"simples", dims}, {"failures", eq5_bad}}));
  out.push_back(make_check("wedderburn", sum_sq == order,
                           Json{{"sum_dim_sq", sum_sq}, {"group_order", order}, {"num_simples", simples.size()}}));
  if (opt.commutant) {
    out.push_back(make_check("commutant_dim_one", comm_bad == 0, Json{{"dims", comm_dims}}));
  }
  out.push_back(make_check("characters_distinct", same == 0,
                           Json{{"classes", table.num_classes()}, {"equal_pairs", same}}));
  out.push_back(make_check("characters_orthonormal", ortho_bad == 0, Json{{"failures", ortho_bad}}));
  out.push_back(make_check("character_equals_trace_of_phi", trace_bad == 0, Json{{"failures", trace_bad}}));
  out.push_back(make_check("simples_count_equals_classes", simples.size() == table.num_classes(),
                           Json{{"simples", simples.size()}, {"classes", table.num_classes()}}));
  return out;
}

/// x in S(l,d-1) acting on the first d-1 strands of S(l,d).
inline WreathElem embed_first_strands(const WreathElem& x) {
  Perm p = x.perm;
  p.push_back(x.d());
  std::vector<int> c = x.colors;
  c.push_back(0);
  return {x.ell, std::move(p), std::move(c)};
}

struct BranchingResult {
  std::map<MultiPartition, long long> multiplicities;  // only nonzero entries
  bool integral = true;
};

/// Restriction of L_p to S(l,d-1), decomposed by characters.
inline BranchingResult branching(int l, const MultiPartition& p) {
  const int d = p.size();
  require(d >= 1, "branching: needs d >= 1");
  const SimpleModule m(l, p);
  const ClassTable small(l, d - 1);
  const ClassFunction res =
      make_class_function(small, [&](const WreathElem& x) { return m.character(embed_first_strands(x)); });
  BranchingResult r;
  for (const auto& q : enum_all_multipartitions(l, d - 1)) {
    const SimpleModule mq(l, q);
    const long long mult = as_multiplicity(inner_product(res, character_of(mq, small)));
    if (mult < 0) {
      r.integral = false;
    } else if (mult > 0) {
      r.multiplicities.emplace(q, mult);
    }
  }
  return r;
}

/// Branching equals the removable-node multiset and is multiplicity free.
inline Check branching_check(int l, int d) {
  Json rows = Json::array();
  bool ok = true;
  for (const auto& p : enum_all_multipartitions(l, d)) {
    const auto r = branching(l, p);
    std::map<MultiPartition, long long> expected;
    for (auto& q : remove_one_node(p)) ++expected[q];
    bool free = true;
    for (const auto& [q, mult] : r.multiplicities) free = free && mult == 1;
    const bool row_ok = r.integral && free && r.multiplicities == expected;
    ok = ok && row_ok;
    Json restricted = Json::array();
    for (const auto& [q, mult] : r.multiplicities) restricted.push_back(Json{{"label", q.str()}, {"mult", mult}});
    rows.push_back(Json{{"label", p.str()}, {"restriction", restricted}, {"ok", row_ok}});
  }
  return make_check("branching_" + std::to_string(l) + "_" + std::to_string(d), ok, Json{{"rows", rows}});
}

/// |S(l,d)| / |G^f| * dim L_p(f) = total dim, and the Frobenius multiplicity
/// <Res_{G^f} chi_p, chi_{L_p(f)}> equals 1, so Ind L_p(f) = L_p.
inline bool young_induction_check(int l, const MultiPartition& p, const ColorFn& f) {
  const SimpleModule m(l, p);
  require(type_of(f) == m.lambda(), "young_induction_check: f must have the type of p");
  const int d = p.size();
  const std::int64_t gf_order = int_pow(l, d) * composition_factorial(m.lambda());
  const std::int64_t index = wreath_order(l, d) / gf_order;
  if (index * static_cast<std::int64_t>(m.block_dim()) != static_cast<std::int64_t>(m.total_dim())) return false;
  // G^f = {D(c) sigma : f o sigma^{-1} = f}; L_p(f) is the e_f-corner of L_p
  CycNum ip(l);
  std::int64_t count = 0;
  for (const auto& x : enum_group(l, d)) {
    bool in = true;
    long long e = 0;
    for (int i = 0; i < d && in; ++i) {
      in = f[x.perm[i]] == f[i];
      e += static_cast<long long>(x.colors[i]) * f[i];
    }
    if (!in) continue;
    ++count;
    const CycNum local = root_of_unity(l, e) * m.specht().character(m.transported(GMorphism{f, f, x.perm}));
    ip += m.character(x) * local.conj();
  }
  if (count != gf_order) return false;
  return ip * Rational(1, count) == CycNum(l, Rational(1));
}

}  // namespace grpd
