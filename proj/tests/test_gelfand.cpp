#include <gtest/gtest.h>

#include "grpd/gelfand.hpp"

using namespace grpd;

namespace {

// involutions in S_n: a(n) = a(n-1) + (n-1) a(n-2)
long long involution_count(int n) {
  long long a = 1;
  long long b = 1;
  for (int i = 2; i <= n; ++i) {
    const long long c = b + (i - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST(Inv, Examples) {
  const Perm id3 = identity_perm(3);
  for (const auto& w : all_perms(3)) {
    EXPECT_TRUE(compose(w, w) != id3 || inv_statistic(id3, w) == 0);
  }
  for (const auto& s : all_perms(3)) EXPECT_EQ(inv_statistic(s, id3), 0);
  EXPECT_EQ(inv_statistic(Perm{1, 0}, Perm{1, 0}), 1);
}

TEST(Involutions, CountsPerObject) {
  EXPECT_EQ(involutions(ColorFn(2, {1, 1})).size(), 2U);
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 4; ++d) {
      if (wreath_order(l, d) > 2000) continue;
      for (const auto& f : objects(l, d)) {
        long long expect = 1;
        for (int x : type_of(f)) expect *= involution_count(x);
        const auto inv = involutions(f);
        EXPECT_EQ(static_cast<long long>(inv.size()), expect);
        for (const auto& w : inv) EXPECT_TRUE(is_involution(w));
      }
    }
  }
}

TEST(Gelfand, Dimensions) {
  EXPECT_EQ(GelfandModel(2, 2).dim(), 6U);
  EXPECT_EQ(GelfandModel(4, 1).dim(), 4U);
  EXPECT_EQ(GelfandModel(2, 2).dim_at(ColorFn(2, {1, 1})), 2U);
}

TEST(Gelfand, SymmetricGroupCharacter) {
  const GelfandModel g(1, 2);
  EXPECT_TRUE(g.character(gen_s(1, 2, 1)).is_zero());
  EXPECT_EQ(g.character(wreath_identity(1, 2)), CycNum(1, Rational(2)));
}

TEST(Gelfand, ConjugatesAreInvolutions) {
  for (const auto& sigma : all_morphisms(3, 3)) {
    for (const auto& w : involutions(sigma.source)) {
      const auto img = gelfand_act(sigma, w);
      EXPECT_TRUE(is_involution(img.w));
      EXPECT_EQ(img.w.source, sigma.target);
    }
  }
}

TEST(Gelfand, Functoriality) {
  for (int l = 1; l <= 3; ++l) {
    for (int d = 1; d <= 3; ++d) EXPECT_EQ(GelfandModel(l, d).functoriality_failures(), 0) << l << "," << d;
  }
}

TEST(Gelfand, MultiplicityFree) {
  for (int l = 1; l <= 4; ++l) {
    for (int d = 0; d <= 4; ++d) {
      if (wreath_order(l, d) > 10000) continue;
      for (const auto& c : verify_gelfand(l, d)) EXPECT_TRUE(c.pass) << c.name << " " << l << "," << d;
    }
  }
}

TEST(Gelfand, TwoTwoTable) {
  const auto checks = verify_gelfand(2, 2);
  const auto& mults = checks[1].details["multiplicities"];
  EXPECT_EQ(mults.size(), 5U);
  for (const auto& m : mults) EXPECT_EQ(m["mult"], 1);
}
