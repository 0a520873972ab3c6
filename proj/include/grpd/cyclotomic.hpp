// Exact arithmetic in the cyclotomic field Q(xi_l) = Q[x]/Phi_l(x).
//
// Elements are coordinate vectors in the power basis 1, x, ..., x^(phi(l)-1).
// Reduction modulo the l-th cyclotomic polynomial is canonical, so equality is
// coordinate-wise. Elements of different orders never mix; use embed() to move
// an element of Q(xi_m) into Q(xi_l) when m | l.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "grpd/error.hpp"
#include "grpd/rational.hpp"

namespace grpd {

namespace detail {

using IntPoly = std::vector<std::int64_t>;  // low degree first

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

struct CyclotomicData {
  int order = 1;
  int phi = 1;
  IntPoly poly;  // Phi_order, monic, size phi + 1
  // powers[j] = coordinates of x^j mod Phi, for 0 <= j < max(order, 2*phi - 1)
  std::vector<IntPoly> powers;
};

class CyclotomicRegistry {
 public:
  static CyclotomicRegistry& instance() {
    static CyclotomicRegistry reg;
    return reg;
  }

  const CyclotomicData& get(int order) {
    if (order <= 0) throw InvalidArgument("cyclotomic order must be positive, got " + std::to_string(order));
    std::lock_guard<std::mutex> lock(mu_);
    return get_locked(order);
  }

 private:
  const CyclotomicData& get_locked(int order) {
    if (auto it = cache_.find(order); it != cache_.end()) return *it->second;
    // Phi_l = (x^l - 1) / prod_{d | l, d < l} Phi_d
    IntPoly p(order + 1, 0);
    p[0] = -1;
    p[order] = 1;
    for (int d = 1; d < order; ++d) {
      if (order % d == 0) p = poly_divide_exact(p, get_locked(d).poly);
    }
    auto data = std::make_unique<CyclotomicData>();
    data->order = order;
    data->phi = static_cast<int>(p.size()) - 1;
    data->poly = p;
    const int phi = data->phi;
    const int n_pow = std::max(order, 2 * phi - 1);
    IntPoly cur(phi, 0);
    cur[0] = 1;
    for (int j = 0; j < n_pow; ++j) {
      data->powers.push_back(cur);
      // multiply by x, then fold x^phi = -sum poly[i] x^i
      const std::int64_t top = cur[phi - 1];
      for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < phi; ++i) cur[i] -= top * p[i];
      }
    }
    const CyclotomicData& ref = *data;
    cache_.emplace(order, std::move(data));
    return ref;
  }

  std::mutex mu_;
  std::map<int, std::unique_ptr<CyclotomicData>> cache_;
};

}  // namespace detail

/// Integer coefficients of the l-th cyclotomic polynomial, low degree first.
inline std::vector<std::int64_t> cyclotomic_polynomial(int order) {
  return detail::CyclotomicRegistry::instance().get(order).poly;
}

inline int euler_phi(int order) { return detail::CyclotomicRegistry::instance().get(order).phi; }

class CycNum {
 public:
  /// Zero of Q(xi_order).
  explicit CycNum(int order = 1)
      : field_(&detail::CyclotomicRegistry::instance().get(order)), coeffs_(field_->phi) {}

  CycNum(int order, const Rational& r) : CycNum(order) { coeffs_[0] = r; }

  /// From power-basis coordinates; the length must be phi(order).
  CycNum(int order, std::vector<Rational> coeffs) : CycNum(order) {
    require(static_cast<int>(coeffs.size()) == field_->phi,
            "CycNum: expected " + std::to_string(field_->phi) + " coordinates");
    coeffs_ = std::move(coeffs);
  }

  [[nodiscard]] int order() const { return field_->order; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_one() const { return is_rational() && coeffs_[0].is_one(); }
  [[nodiscard]] Rational to_rational() const {
    if (!is_rational()) throw InvalidArgument("CycNum is not rational: " + str());
    return coeffs_[0];
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    check_same(a, b);
    CycNum r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend CycNum operator-(const CycNum& a, const CycNum& b) {
    check_same(a, b);
    CycNum r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }
  CycNum operator-() const {
    CycNum r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    check_same(a, b);
    const int phi = a.field_->phi;
    if (phi == 1) {
      CycNum r(a.order());
      r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
      return r;
    }
    std::vector<Rational> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; j < phi; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    CycNum r(a.order());
    for (int i = 0; i < phi; ++i) r.coeffs_[i] = std::move(prod[i]);
    for (int j = phi; j < 2 * phi - 1; ++j) {
      if (prod[j].is_zero()) continue;
      r.add_scaled_power(prod[j], j);
    }
    return r;
  }
  friend CycNum operator*(const CycNum& a, const Rational& s) {
    CycNum r(a);
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

  /// Multiplicative inverse, by solving (a * u = 1) in the power basis.
  [[nodiscard]] CycNum inverse() const {
    if (is_zero()) throw std::domain_error("CycNum division by zero");
    const int phi = field_->phi;
    if (phi == 1) return CycNum(order(), coeffs_[0].inverse());
    // column j of M holds a * x^j
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    for (int j = 0; j < phi; ++j) {
      CycNum col = *this * CycNum::power_of_x(order(), j);
      for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
    }
    m[0][phi] = Rational(1);
    for (int c = 0, r = 0; c < phi; ++c, ++r) {
      int piv = r;
      while (piv < phi && m[piv][c].is_zero()) ++piv;
      if (piv == phi) throw std::logic_error("singular multiplication matrix in Q(xi)");
      std::swap(m[piv], m[r]);
      const Rational inv = m[r][c].inverse();
      for (int k = c; k <= phi; ++k) m[r][k] *= inv;
      for (int i = 0; i < phi; ++i) {
        if (i == r || m[i][c].is_zero()) continue;
        const Rational f = m[i][c];
        for (int k = c; k <= phi; ++k) m[i][k] -= f * m[r][k];
      }
    }
    std::vector<Rational> u(phi);
    for (int i = 0; i < phi; ++i) u[i] = m[i][phi];
    return CycNum(order(), std::move(u));
  }

  /// Image under the automorphism xi -> xi^k (k coprime to the order).
  [[nodiscard]] CycNum galois(int k) const {
    const int l = order();
    CycNum r(l);
    for (int i = 0; i < field_->phi; ++i) {
      if (coeffs_[i].is_zero()) continue;
      const int e = static_cast<int>(((static_cast<long long>(i) * k) % l + l) % l);
      r.add_scaled_power(coeffs_[i], e);
    }
    return r;
  }

  /// Complex conjugate: xi -> xi^{-1}.
  [[nodiscard]] CycNum conj() const { return galois(-1); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (int i = 0; i < field_->phi; ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs_[i].str() + ")";
      if (i > 0) s += "*z" + std::to_string(order()) + "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }
  friend std::ostream& operator<<(std::ostream& os, const CycNum& c) { return os << c.str(); }

  static CycNum power_of_x(int order, long long power) {
    CycNum r(order);
    const int e = static_cast<int>(((power % order) + order) % order);
    r.add_scaled_power(Rational(1), e);
    return r;
  }

 private:
  static void check_same(const CycNum& a, const CycNum& b) {
    if (a.field_ != b.field_) {
      throw InvalidArgument("mixing cyclotomic orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
    }
  }

  void add_scaled_power(const Rational& s, int e) {
    const auto& p = field_->powers[e];
    for (int i = 0; i < field_->phi; ++i) {
      if (p[i] != 0) coeffs_[i] += s * Rational(p[i]);
    }
  }

  const detail::CyclotomicData* field_;
  std::vector<Rational> coeffs_;
};

/// xi_l^power; depends only on power mod l.
inline CycNum root_of_unity(int order, long long power) {
  if (order <= 0) throw InvalidArgument("root_of_unity: order must be positive");
  return CycNum::power_of_x(order, power);
}

/// Embeds x in Q(xi_m) into Q(xi_l) for m | l via xi_m -> xi_l^(l/m).
inline CycNum embed(const CycNum& x, int target_order) {
  const int m = x.order();
  require(target_order > 0 && target_order % m == 0,
          "embed: order " + std::to_string(m) + " does not divide " + std::to_string(target_order));
  const int step = target_order / m;
  CycNum r(target_order);
  for (int i = 0; i < static_cast<int>(x.coeffs().size()); ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    r += root_of_unity(target_order, static_cast<long long>(i) * step) * x.coeffs()[i];
  }
  return r;
}

inline CycNum zero_like(const CycNum& x) { return CycNum(x.order()); }
inline CycNum one_like(const CycNum& x) { return CycNum(x.order(), Rational(1)); }

}  // namespace grpd
