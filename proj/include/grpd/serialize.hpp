// JSON forms of the core values. Positions and permutations are 1-based.

#pragma once

#include "grpd/combinat.hpp"
#include "grpd/cyclotomic.hpp"
#include "grpd/galgebra.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"
#include "grpd/wreath.hpp"

namespace grpd {

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const CycNum& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const Partition& p) { return Json(p.parts); }

inline Json to_json(const MultiPartition& p) {
  Json a = Json::array();
  for (const auto& c : p.comps) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const ColorFn& f) { return Json(f.values); }

inline Json perm_to_json(const Perm& p) {
  Json a = Json::array();
  for (int v : p) a.push_back(v + 1);
  return a;
}

inline Json to_json(const GMorphism& m) {
  return Json{{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"perm", perm_to_json(m.perm)}};
}

inline Json to_json(const WreathElem& x) { return Json{{"perm", perm_to_json(x.perm)}, {"colors", Json(x.colors)}}; }

inline Json to_json(const AlgElem& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) terms.push_back(Json{{"morphism", to_json(m)}, {"coeff", to_json(c)}});
  return terms;
}

}  // namespace grpd
