#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grpd/serialize.hpp"
#include "grpd/wreath.hpp"

using namespace grpd;

namespace {

std::string matrix_key(const ExactMatrix& m) {
  std::string s;
  for (const auto& x : m.data()) s += x.str() + ";";
  return s;
}

// closure of a generating set under right multiplication
std::set<WreathElem> generated(const std::vector<WreathElem>& gens) {
  const WreathElem e = wreath_identity(gens[0].ell, gens[0].d());
  std::set<WreathElem> seen{e};
  std::vector<WreathElem> frontier{e};
  while (!frontier.empty()) {
    std::vector<WreathElem> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = wreath_mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(Wreath, MultiplicationExamples) {
  const auto s0 = gen_s0(2, 3);
  EXPECT_EQ(wreath_mul(s0, s0), wreath_identity(2, 3));
  const auto s1 = gen_s(3, 3, 1);
  const auto s2 = gen_s(3, 3, 2);
  EXPECT_EQ(wreath_mul(wreath_mul(s1, s2), s1), wreath_mul(wreath_mul(s2, s1), s2));
  std::mt19937_64 rng(3);
  const auto g = enum_group(3, 3);
  for (int t = 0; t < 200; ++t) {
    const auto& a = g[rng() % g.size()];
    EXPECT_EQ(wreath_mul(a, wreath_inverse(a)), wreath_identity(3, 3));
  }
  EXPECT_THROW(wreath_mul(gen_s0(2, 2), gen_s0(3, 2)), std::exception);
}

TEST(Wreath, GeneratorExamples) {
  const auto s0 = gen_s0(3, 2);
  EXPECT_EQ(s0.perm, identity_perm(2));
  EXPECT_EQ(s0.colors, (std::vector<int>{1, 0}));
  const auto s1 = gen_s(2, 2, 1);
  EXPECT_EQ(s1.perm, (Perm{1, 0}));
  EXPECT_EQ(s1.colors, (std::vector<int>{0, 0}));
  EXPECT_EQ(generators(5, 1).size(), 1U);
}

TEST(Wreath, S0jExamples) {
  EXPECT_EQ(s0_j(4, 3, 1), gen_s0(4, 3));
  EXPECT_EQ(wreath_pow(s0_j(4, 3, 2), 4), wreath_identity(4, 3));
  EXPECT_EQ(s0_j_by_word(3, 2, 2), s0_j(3, 2, 2));
  EXPECT_THROW(s0_j(2, 2, 3), std::exception);
  for (int d = 1; d <= 5; ++d) {
    for (int j = 1; j <= d; ++j) EXPECT_EQ(s0_j_by_word(3, d, j), s0_j(3, d, j));
  }
}

TEST(Wreath, MonomialMatrices) {
  for (int l = 1; l <= 3; ++l) {
    for (int d = 1; d <= 3; ++d) {
      const auto g = enum_group(l, d);
      std::set<std::string> keys;
      for (const auto& x : g) {
        const auto m = monomial_matrix(x);
        keys.insert(matrix_key(m));
        for (int i = 0; i < d; ++i) {
          int row_nz = 0;
          int col_nz = 0;
          for (int j = 0; j < d; ++j) {
            row_nz += !m(i, j).is_zero();
            col_nz += !m(j, i).is_zero();
            if (!m(i, j).is_zero()) {
              CycNum p = m(i, j);
              for (int e = 1; e < l; ++e) p = p * m(i, j);
              EXPECT_TRUE(p.is_one());
            }
          }
          EXPECT_EQ(row_nz, 1);
          EXPECT_EQ(col_nz, 1);
        }
      }
      EXPECT_EQ(keys.size(), g.size());
      for (std::size_t a = 0; a < g.size(); a += 3) {
        for (std::size_t b = 0; b < g.size(); b += 5) {
          EXPECT_EQ(monomial_matrix(wreath_mul(g[a], g[b])), monomial_matrix(g[a]) * monomial_matrix(g[b]));
        }
      }
    }
  }
}

TEST(Wreath, EnumerationAndClosure) {
  EXPECT_EQ(enum_group(2, 2).size(), 8U);
  for (int l = 1; l <= 3; ++l) {
    for (int d = 1; d <= 3; ++d) {
      const auto g = enum_group(l, d);
      const std::set<WreathElem> s(g.begin(), g.end());
      EXPECT_EQ(static_cast<long long>(s.size()), wreath_order(l, d));
      EXPECT_EQ(s, generated(generators(l, d)));
      for (const auto& x : g) EXPECT_EQ(wreath_from_index(l, d, wreath_index(x)), x);
    }
  }
}

TEST(Wreath, Presentation) {
  for (int l = 1; l <= 4; ++l) {
    for (int d = 1; d <= 4; ++d) {
      for (const auto& r : check_presentation(l, d)) EXPECT_TRUE(r.holds) << r.relation << " " << l << "," << d;
    }
  }
}

TEST(Wreath, DeterminantMatchesLeibniz) {
  for (const auto& x : enum_group(3, 3)) {
    const auto m = monomial_matrix(x);
    CycNum det(3);
    for (const auto& p : all_perms(3)) {
      CycNum t(3, Rational(sign(p)));
      for (int i = 0; i < 3; ++i) t = t * m(i, p[i]);
      det = det + t;
    }
    EXPECT_EQ(det, determinant(x));
  }
}

TEST(Gkd, MembershipExamples) {
  EXPECT_FALSE(gkd_member(gen_s0(2, 2), 2));
  EXPECT_FALSE(gkd_member(gen_s0(4, 3), 4));
  int count = 0;
  for (const auto& x : enum_group(2, 2)) count += gkd_member(x, 2);
  EXPECT_EQ(count, 4);
  // a plain transposition is a reflection in G(l,l,d)
  EXPECT_TRUE(gkd_member(gen_s(2, 2, 1), 2));
  EXPECT_THROW(gkd_member(gen_s0(4, 2), 3), std::exception);
}

TEST(Gkd, IndexAndGenerators) {
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= l; ++k) {
      if (l % k) continue;
      for (int d = 1; d <= 3; ++d) {
        std::set<WreathElem> members;
        for (const auto& x : enum_group(l, d)) {
          if (gkd_member(x, k)) members.insert(x);
        }
        EXPECT_EQ(static_cast<long long>(members.size()) * k, wreath_order(l, d));
        EXPECT_EQ(generated(gkd_generators(l, k, d)), members) << l << "," << k << "," << d;
      }
    }
  }
}

TEST(Serialize, WreathJson) {
  const auto x = wreath_mul(gen_s0(3, 2), gen_s(3, 2, 1));
  EXPECT_EQ(to_json(x).dump(), R"({"perm":[2,1],"colors":[1,0]})");
}
