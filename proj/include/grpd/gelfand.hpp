// The involutive Gelfand model: basis I^f of involutions in hom(f,f) and the
// signed conjugation action sigma . w = (-1)^{inv(sigma,w)} sigma w sigma^{-1}.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "grpd/classes.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"
#include "grpd/simples.hpp"

namespace grpd {

inline bool is_involution(const GMorphism& w) { return w.is_endo() && compose(w.perm, w.perm) == identity_perm(w.source.d()); }

/// I^f, in hom order.
inline std::vector<GMorphism> involutions(const ColorFn& f) {
  std::vector<GMorphism> out;
  for (auto& w : hom(f, f)) {
    if (is_involution(w)) out.push_back(std::move(w));
  }
  return out;
}

/// |{(i,j) : i < j, w(i) = j, sigma(i) > sigma(j)}|.
inline int inv_statistic(const Perm& sigma, const Perm& w) {
  int c = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    const int j = w[i];
    if (i < j && sigma[i] > sigma[j]) ++c;
  }
  return c;
}

inline int inv_statistic(const GMorphism& sigma, const GMorphism& w) { return inv_statistic(sigma.perm, w.perm); }

struct SignedImage {
  GMorphism w;
  int sign = 1;
};

/// sigma . w for sigma: f -> g and w in I^f.
inline SignedImage gelfand_act(const GMorphism& sigma, const GMorphism& w) {
  require(w.source == sigma.source && is_involution(w), "gelfand_act: w must be an involution on the source");
  GMorphism img = compose(sigma, compose(w, inverse(sigma)));
  return {std::move(img), inv_statistic(sigma, w) % 2 == 0 ? 1 : -1};
}

class GelfandModel {
 public:
  GelfandModel(int l, int d, long long cap = kDefaultCap) : ell_(l), d_(d) {
    for (auto& f : grpd::objects(l, d, cap)) {
      offsets_.emplace(f, basis_.size());
      for (auto& w : involutions(f)) {
        position_.emplace(w, basis_.size());
        basis_.push_back(std::move(w));
      }
      objects_.push_back(std::move(f));
    }
  }

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<GMorphism>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<ColorFn>& objects() const { return objects_; }
  [[nodiscard]] std::size_t dim_at(const ColorFn& f) const {
    auto it = offsets_.find(f);
    auto next = std::next(it);
    return (next == offsets_.end() ? basis_.size() : next->second) - it->second;
  }
  [[nodiscard]] std::size_t position(const GMorphism& w) const { return position_.at(w); }

  /// Matrix of sigma on the whole model.
  [[nodiscard]] RationalMatrix action(const GMorphism& sigma) const {
    RationalMatrix m(dim(), dim(), Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].source != sigma.source) continue;
      const auto img = gelfand_act(sigma, basis_[i]);
      m(position(img.w), i) = Rational(img.sign);
    }
    return m;
  }

  /// sum over f fixed by x of xi^{c.f} times the signed count of w with sigma w sigma^{-1} = w.
  [[nodiscard]] CycNum character(const WreathElem& x) const {
    RootAccumulator acc(ell_);
    for (const auto& f : objects_) {
      bool fixed = true;
      long long e = 0;
      for (int i = 0; i < d_ && fixed; ++i) {
        fixed = f[x.perm[i]] == f[i];
        e += static_cast<long long>(x.colors[i]) * f[i];
      }
      if (!fixed) continue;
      const GMorphism sigma{f, f, x.perm};
      long long tr = 0;
      const std::size_t start = offsets_.at(f);
      for (std::size_t i = start; i < start + dim_at(f); ++i) {
        const auto img = gelfand_act(sigma, basis_[i]);
        if (img.w == basis_[i]) tr += img.sign;
      }
      acc.add(e, Rational(tr));
    }
    return acc.value();
  }

  /// Basis-vector evaluations needed by the functoriality check.
  [[nodiscard]] long long functoriality_work() const {
    long long total = 0;
    for (const auto& f : objects_) {
      long long same_type = 0;
      for (const auto& g : objects_) same_type += type_of(g) == type_of(f);
      const long long auts = composition_factorial(type_of(f));
      total += same_type * auts * same_type * auts * static_cast<long long>(dim_at(f));
    }
    return total;
  }

  /// Failures of G(tau o sigma) = G(tau) G(sigma) on basis vectors, plus
  /// images that are not involutions.
  [[nodiscard]] long long functoriality_failures() const {
    const auto ms = all_morphisms(ell_, d_);
    std::map<ColorFn, std::vector<const GMorphism*>> by_source;
    for (const auto& m : ms) by_source[m.source].push_back(&m);
    long long bad = 0;
    for (const auto& s : ms) {
      const std::size_t start = offsets_.at(s.source);
      for (std::size_t i = start; i < start + dim_at(s.source); ++i) {
        const auto first = gelfand_act(s, basis_[i]);
        if (!is_involution(first.w) || first.w.source != s.target) ++bad;
        for (const auto* t : by_source[s.target]) {
          const auto both = gelfand_act(*t, first.w);
          const auto direct = gelfand_act(compose(*t, s), basis_[i]);
          if (!(both.w == direct.w) || both.sign * first.sign != direct.sign) ++bad;
        }
      }
    }
    return bad;
  }

 private:
  int ell_;
  int d_;
  std::vector<ColorFn> objects_;
  std::map<ColorFn, std::size_t> offsets_;
  std::vector<GMorphism> basis_;
  std::map<GMorphism, std::size_t> position_;
};

inline ExactMatrix gelfand_action(const GelfandModel& g, const AlgElem& a) {
  ExactMatrix m(g.dim(), g.dim(), CycNum(g.ell()));
  for (const auto& [sigma, c] : a.terms()) {
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (g.basis()[i].source != sigma.source) continue;
      const auto img = gelfand_act(sigma, g.basis()[i]);
      m(g.position(img.w), i) += c * Rational(img.sign);
    }
  }
  return m;
}

struct GelfandOptions {
  long long cap = kDefaultCap;
  long long functoriality_work_limit = 2'000'000;
};

/// The model is multiplicity free and contains every simple.
inline std::vector<Check> verify_gelfand(int l, int d, const GelfandOptions& opt = {}) {
  std::vector<Check> out;
  const GelfandModel model(l, d, opt.cap);
  const ClassTable table(l, d, 1, opt.cap);
  const ClassFunction chi = make_class_function(table, [&](const WreathElem& x) { return model.character(x); });

  ClassFunction sum = zero_class_function(table);
  long long sum_dims = 0;
  Json mults = Json::array();
  bool all_one = true;
  for (const auto& m : all_simples(l, d)) {
    const ClassFunction cp = character_of(m, table);
    sum = sum + cp;
    sum_dims += static_cast<long long>(m.total_dim());
    const long long mult = as_multiplicity(inner_product(chi, cp));
    all_one = all_one && mult == 1;
    mults.push_back(Json{{"label", m.label().str()}, {"mult", mult}});
  }
  Json per_object = Json::array();
  for (const auto& f : model.objects()) per_object.push_back(Json{{"object", f.str()}, {"involutions", model.dim_at(f)}});
  out.push_back(make_check("gelfand_character_equals_sum", chi == sum, Json{{"classes", table.num_classes()}}));
  out.push_back(make_check("gelfand_multiplicities_one", all_one, Json{{"multiplicities", mults}}));
  out.push_back(make_check("gelfand_dimension", static_cast<long long>(model.dim()) == sum_dims,
                           Json{{"dim", model.dim()}, {"sum_simple_dims", sum_dims}, {"per_object", per_object}}));
  if (model.functoriality_work() <= opt.functoriality_work_limit) {
    const long long bad = model.functoriality_failures();
    out.push_back(make_check("gelfand_functoriality", bad == 0, Json{{"failures", bad}}));
  }
  return out;
}

}  // namespace grpd
