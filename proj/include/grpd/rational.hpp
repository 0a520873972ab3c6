// Arbitrary-precision rationals with an int64 fast path.
//
// Values that fit in two machine words are kept inline; anything larger is
// promoted to a GMP rational and demoted again as soon as it fits. The
// representation is canonical (lowest terms, positive denominator, inline
// whenever possible) so equality is structural.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grpd {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign_i128(n, d); }

  Rational(const Rational& o)
      : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "n", "-n" or "n/d".
  static Rational parse(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(s));
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    Rational r;
    r.assign_big(std::move(q));
    return r;
  }

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  /// Only valid when is_small().
  [[nodiscard]] std::int64_t small_num() const { return num_; }
  [[nodiscard]] std::int64_t small_den() const { return den_; }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  [[nodiscard]] std::string str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) {
      Rational r;
      r.assign_big(-*big_);
      return r;
    }
    Rational r;
    r.assign_i128(-static_cast<__int128>(num_), den_);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.den_ == 1 && b.den_ == 1) {
        r.assign_i128(static_cast<__int128>(a.num_) + b.num_, 1);
      } else {
        r.assign_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
      }
      return r;
    }
    Rational r;
    r.assign_big(a.to_mpq() + b.to_mpq());
    return r;
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        Rational r;
        r.assign_i128(static_cast<__int128>(a.num_) * b.num_, 1);
        return r;
      }
      const std::int64_t g1 = gcd64(a.num_, b.den_);
      const std::int64_t g2 = gcd64(b.num_, a.den_);
      Rational r;
      r.assign_reduced(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                       static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
      return r;
    }
    Rational r;
    r.assign_big(a.to_mpq() * b.to_mpq());
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return a * b.inverse();
  }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    if (big_) {
      Rational r;
      r.assign_big(1 / *big_);
      return r;
    }
    Rational r;
    r.assign_i128(den_, num_);
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a small value is never stored big
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y != 0) {
      const std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return x == 0 ? 1 : static_cast<std::int64_t>(x);
  }

  static unsigned __int128 gcd128(unsigned __int128 x, unsigned __int128 y) {
    while (y != 0) {
      const unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  }

  static bool fits64(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

  static mpz_class mpz_from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  void assign_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const unsigned __int128 un = n < 0 ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(n)
                                       : static_cast<unsigned __int128>(n);
    const unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
    assign_reduced(n, d);
  }

  // Precondition: gcd(n, d) == 1 and d > 0.
  void assign_reduced(__int128 n, __int128 d) {
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
    num_ = 0;
    den_ = 1;
  }

  void assign_big(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
      return;
    }
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline Rational zero_like(const Rational&) { return {}; }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace grpd
