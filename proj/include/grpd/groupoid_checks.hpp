// Cardinality and structure checks for the groupoid G_(l,d).

#pragma once

#include <map>
#include <set>

#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"

namespace grpd {

/// Total morphism count, hom-set sizes, the cocycle law of canonical
/// morphisms and closure of endomorphism sets.
inline std::vector<Check> groupoid_checks(int l, int d, long long cap = kDefaultCap) {
  std::vector<Check> out;
  const auto objs = objects(l, d, cap);
  long long total = 0;
  long long hom_bad = 0;
  std::map<Composition, std::vector<ColorFn>> by_type;
  for (const auto& f : objs) by_type[type_of(f)].push_back(f);
  for (const auto& f : objs) {
    for (const auto& g : objs) {
      const auto h = hom(f, g);
      total += static_cast<long long>(h.size());
      const long long expect = type_of(f) == type_of(g) ? composition_factorial(type_of(f)) : 0;
      if (static_cast<long long>(h.size()) != expect) ++hom_bad;
      for (const auto& m : h) hom_bad += !m.is_valid();
    }
  }
  out.push_back(make_check("total_morphisms", total == int_pow(l, d) * factorial(d),
                           Json{{"ell", l}, {"d", d}, {"objects", objs.size()}, {"morphisms", total}}));
  out.push_back(make_check("hom_sizes", hom_bad == 0, Json{{"failures", hom_bad}, {"components", by_type.size()}}));
  long long cocycle_bad = 0;
  long long endo_bad = 0;
  if (d <= 4) {
    for (const auto& [lam, fs] : by_type) {
      for (const auto& f : fs) {
        if (!(canonical_morphism(f, f) == identity_morphism(f))) ++cocycle_bad;
        for (const auto& g : fs) {
          for (const auto& h : fs) {
            if (!(compose(canonical_morphism(g, h), canonical_morphism(f, g)) == canonical_morphism(f, h))) {
              ++cocycle_bad;
            }
          }
        }
        const auto endo = hom(f, f);
        const std::set<GMorphism> set(endo.begin(), endo.end());
        for (const auto& a : endo) {
          endo_bad += !set.count(inverse(a));
          for (const auto& b : endo) endo_bad += !set.count(compose(a, b));
        }
      }
    }
    out.push_back(make_check("canonical_cocycle", cocycle_bad == 0, Json{{"failures", cocycle_bad}}));
    out.push_back(make_check("endomorphisms_closed", endo_bad == 0, Json{{"failures", endo_bad}}));
  }
  return out;
}

/// The hom table of G_(2,2): objects (1,1), (1,2), (2,1), (2,2).
inline Check example1_check() {
  const auto objs = objects(2, 2);
  const std::vector<ColorFn> expect_objs{ColorFn(2, {1, 1}), ColorFn(2, {1, 2}), ColorFn(2, {2, 1}), ColorFn(2, {2, 2})};
  const Perm id{0, 1};
  const Perm swap{1, 0};
  // table[g][f] lists the permutations in hom(f, g)
  const std::vector<std::vector<std::vector<Perm>>> expect{
      {{id, swap}, {}, {}, {}},
      {{}, {id}, {swap}, {}},
      {{}, {swap}, {id}, {}},
      {{}, {}, {}, {id, swap}},
  };
  bool ok = objs == expect_objs;
  Json table = Json::array();
  for (std::size_t gi = 0; gi < objs.size() && ok; ++gi) {
    Json row = Json::array();
    for (std::size_t fi = 0; fi < objs.size(); ++fi) {
      std::vector<Perm> perms;
      for (const auto& m : hom(objs[fi], objs[gi])) perms.push_back(m.perm);
      ok = ok && perms == expect[gi][fi];
      row.push_back(perms.size());
    }
    table.push_back(row);
  }
  return make_check("example1_hom_table", ok, Json{{"hom_sizes_by_target_then_source", table}});
}

}  // namespace grpd
