// Conjugacy classes of S(l,d) and G(l,k,d), and exact class functions.

#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "grpd/cyclotomic.hpp"
#include "grpd/error.hpp"
#include "grpd/wreath.hpp"

namespace grpd {

/// Conjugacy classes by orbit partitioning under conjugation by generators.
class ClassTable {
 public:
  ClassTable(int l, int d, int k = 1, long long cap = kDefaultCap) : ell_(l), d_(d), k_(k) {
    require(k >= 1 && l % k == 0, "ClassTable: k must divide l");
    for (auto& x : enum_group(l, d, cap)) {
      if (gkd_member(x, k)) {
        position_.emplace(wreath_index(x), elements_.size());
        elements_.push_back(std::move(x));
      }
    }
    std::vector<WreathElem> gens;
    if (d >= 1) gens = gkd_generators(l, k, d);
    std::vector<WreathElem> gens_inv;
    for (const auto& g : gens) gens_inv.push_back(wreath_inverse(g));
    class_of_.assign(elements_.size(), -1);
    for (std::size_t s = 0; s < elements_.size(); ++s) {
      if (class_of_[s] >= 0) continue;
      const int c = static_cast<int>(classes_.size());
      classes_.emplace_back();
      std::deque<std::size_t> queue{s};
      class_of_[s] = c;
      while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        classes_[c].push_back(i);
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const auto y = wreath_mul(wreath_mul(gens[g], elements_[i]), gens_inv[g]);
          const std::size_t j = position(y);
          if (class_of_[j] < 0) {
            class_of_[j] = c;
            queue.push_back(j);
          }
        }
      }
    }
  }

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  [[nodiscard]] const std::vector<WreathElem>& elements() const { return elements_; }
  [[nodiscard]] std::size_t num_classes() const { return classes_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& members(std::size_t c) const { return classes_.at(c); }
  [[nodiscard]] const WreathElem& representative(std::size_t c) const { return elements_[classes_.at(c).front()]; }
  [[nodiscard]] std::int64_t class_size(std::size_t c) const { return static_cast<std::int64_t>(classes_.at(c).size()); }

  [[nodiscard]] bool contains(const WreathElem& x) const { return position_.count(wreath_index(x)) > 0; }
  [[nodiscard]] std::size_t position(const WreathElem& x) const {
    auto it = position_.find(wreath_index(x));
    if (it == position_.end()) throw InvalidArgument("element not in group: " + x.str());
    return it->second;
  }
  [[nodiscard]] std::size_t class_of(const WreathElem& x) const { return class_of_[position(x)]; }

 private:
  int ell_;
  int d_;
  int k_;
  std::vector<WreathElem> elements_;
  std::unordered_map<std::int64_t, std::size_t> position_;
  std::vector<int> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
};

/// A class function, stored by class of a ClassTable.
struct ClassFunction {
  const ClassTable* table = nullptr;
  std::vector<CycNum> values;

  [[nodiscard]] const CycNum& operator()(const WreathElem& x) const { return values.at(table->class_of(x)); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
    require(a.table == b.table, "ClassFunction: different groups");
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
  }
};

/// Evaluates fn on each class representative.
template <class Fn>
ClassFunction make_class_function(const ClassTable& table, Fn&& fn) {
  ClassFunction cf{&table, {}};
  cf.values.reserve(table.num_classes());
  for (std::size_t c = 0; c < table.num_classes(); ++c) cf.values.push_back(fn(table.representative(c)));
  return cf;
}

inline ClassFunction zero_class_function(const ClassTable& table) {
  return ClassFunction{&table, std::vector<CycNum>(table.num_classes(), CycNum(table.ell()))};
}

/// <a, b> = 1/|G| sum_x a(x) conj(b(x)).
inline CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
  require(a.table == b.table && a.table != nullptr, "inner_product: class functions on different groups");
  const ClassTable& t = *a.table;
  CycNum s(t.ell());
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    s += (a.values[c] * b.values[c].conj()) * Rational(t.class_size(c));
  }
  return s * Rational(1, t.order());
}

/// Checks fn is constant on conjugacy classes by evaluating it on every element.
template <class Fn>
bool is_class_function(const ClassTable& table, Fn&& fn) {
  for (std::size_t c = 0; c < table.num_classes(); ++c) {
    const CycNum v = fn(table.representative(c));
    for (std::size_t i : table.members(c)) {
      if (!(fn(table.elements()[i]) == v)) return false;
    }
  }
  return true;
}

/// Nonnegative integer value of an exact multiplicity, or -1 if it is not one.
inline long long as_multiplicity(const CycNum& m) {
  if (!m.is_rational()) return -1;
  const Rational r = m.to_rational();
  if (!r.is_integer() || r.sign() < 0 || !r.is_small()) return -1;
  return r.small_num();
}

}  // namespace grpd
