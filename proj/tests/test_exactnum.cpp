#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "grpd/cyclotomic.hpp"
#include "grpd/error.hpp"
#include "grpd/matrix.hpp"
#include "grpd/rational.hpp"
#include "grpd/serialize.hpp"

using namespace grpd;

namespace {

CycNum random_cyc(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(euler_phi(order));
  for (auto& r : c) r = Rational(num(rng), den(rng));
  return CycNum(order, c);
}

}  // namespace

TEST(Rational, LowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, PromotesToBigIntegers) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x = x * Rational(3);
  Rational y = x;
  for (int i = 0; i < 200; ++i) y = y / Rational(3);
  EXPECT_EQ(y, Rational(1));
  EXPECT_TRUE(y.is_small());
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, 200);
  EXPECT_EQ(x.str(), p.get_str() + "/1");
}

TEST(CycNum, RootOfUnityExamples) {
  EXPECT_EQ(root_of_unity(2, 1), CycNum(2, Rational(-1)));
  EXPECT_EQ(root_of_unity(4, 2), CycNum(4, Rational(-1)));
  EXPECT_TRUE((root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero());
  EXPECT_EQ(root_of_unity(5, 7), root_of_unity(5, 2));
  EXPECT_EQ(root_of_unity(5, -1), root_of_unity(5, 4));
  EXPECT_THROW(root_of_unity(0, 1), std::exception);
}

TEST(CycNum, FieldOpExamples) {
  for (int l = 1; l <= 8; ++l) {
    const CycNum one(l, Rational(1));
    EXPECT_EQ(one / root_of_unity(l, 1), root_of_unity(l, l - 1)) << l;
  }
  EXPECT_TRUE((root_of_unity(6, 1) * root_of_unity(6, 5)).is_one());
  EXPECT_THROW(CycNum(3, Rational(1)) / CycNum(3), std::exception);
  EXPECT_THROW(root_of_unity(3, 1) + root_of_unity(4, 1), std::exception);
}

TEST(CycNum, RootOrders) {
  for (int l = 1; l <= 12; ++l) {
    for (int p = 0; p < l; ++p) {
      const CycNum z = root_of_unity(l, p);
      CycNum acc(l, Rational(1));
      for (int i = 0; i < l; ++i) acc = acc * z;
      EXPECT_TRUE(acc.is_one());
      if (p > 0 && std::gcd(p, l) == 1) {
        EXPECT_FALSE(z.is_one());
      }
      // the order of a primitive root is exactly l
      if (p == 1) {
        CycNum q(l, Rational(1));
        for (int i = 1; i < l; ++i) {
          q = q * z;
          EXPECT_FALSE(q.is_one()) << l << " " << i;
        }
      }
    }
  }
}

TEST(CycNum, EmbedAndConjugate) {
  EXPECT_EQ(embed(root_of_unity(3, 1), 6), root_of_unity(6, 2));
  EXPECT_EQ(embed(root_of_unity(2, 1), 4), root_of_unity(4, 2));
  EXPECT_EQ(root_of_unity(5, 2).conj(), root_of_unity(5, 3));
}

TEST(CycNum, RandomizedFieldAxioms) {
  std::mt19937_64 rng(7);
  for (int l = 1; l <= 6; ++l) {
    for (int t = 0; t < 10000; ++t) {
      const CycNum a = random_cyc(rng, l);
      const CycNum b = random_cyc(rng, l);
      const CycNum c = random_cyc(rng, l);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + CycNum(l), a);
      if (!b.is_zero() && t % 10 == 0) {
        ASSERT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(CycNum, Json) {
  const Json j = to_json(root_of_unity(3, 2));
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["coeffs"], Json({"-1/1", "-1/1"}));
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(RationalMatrix::identity(5, Rational(1))), 5U);
  RationalMatrix ones(2, 2, Rational(1));
  EXPECT_EQ(rank(ones), 1U);
}

TEST(Matrix, KernelOfOneByTwo) {
  ExactMatrix m(1, 2, CycNum(3));
  m(0, 0) = CycNum(3, Rational(1));
  m(0, 1) = root_of_unity(3, 1);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1U);
  EXPECT_TRUE((m(0, 0) * k[0][0] + m(0, 1) * k[0][1]).is_zero());
  EXPECT_FALSE(k[0][1].is_zero());
}

TEST(Matrix, RankNullityRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = dim(rng);
    const std::size_t c = dim(rng);
    ExactMatrix m(r, c, CycNum(4));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = CycNum(4, {Rational(val(rng)), Rational(val(rng) * (t % 2))});
    }
    const auto k = kernel_basis(m);
    ASSERT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k) {
      for (std::size_t i = 0; i < r; ++i) {
        CycNum s(4);
        for (std::size_t j = 0; j < c; ++j) s = s + m(i, j) * v[j];
        ASSERT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(Matrix, SolveReportsInconsistency) {
  RationalMatrix m(2, 1, Rational(1));
  EXPECT_FALSE(solve(m, {Rational(1), Rational(2)}).has_value());
  const auto x = solve(m, {Rational(3), Rational(3)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(3));
}

TEST(Matrix, KronDimensions) {
  const auto a = RationalMatrix::identity(2, Rational(1));
  RationalMatrix b(1, 3, Rational(2));
  const auto k = kron(a, b);
  EXPECT_EQ(k.rows(), 2U);
  EXPECT_EQ(k.cols(), 6U);
  EXPECT_EQ(k(1, 4), Rational(2));
  EXPECT_EQ(k(0, 4), Rational(0));
}
