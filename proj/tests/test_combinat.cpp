#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "grpd/combinat.hpp"
#include "grpd/commutant.hpp"
#include "grpd/serialize.hpp"
#include "grpd/specht.hpp"

using namespace grpd;

namespace {

// number of partitions of n with parts at most k
long long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  long long s = count_partitions(n, k - 1);
  if (n >= k) s += count_partitions(n - k, k);
  return s;
}

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

MultiPartition MP(std::vector<std::vector<int>> v) {
  std::vector<Partition> c;
  for (auto& x : v) c.emplace_back(std::move(x));
  return MultiPartition(std::move(c));
}

// standard tableaux counted by placing n in a removable corner, recursively
long long count_tableaux(const std::vector<int>& shape) {
  int n = 0;
  for (int x : shape) n += x;
  if (n == 0) return 1;
  long long s = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] == 0) continue;
    if (i + 1 < shape.size() && shape[i + 1] == shape[i]) continue;
    auto t = shape;
    --t[i];
    s += count_tableaux(t);
  }
  return s;
}

}  // namespace

TEST(Partitions, Examples) {
  const auto p0 = enum_partitions(0);
  ASSERT_EQ(p0.size(), 1U);
  EXPECT_TRUE(p0[0].parts.empty());
  EXPECT_EQ(enum_partitions(4).size(), 5U);
  ASSERT_EQ(enum_partitions(1).size(), 1U);
  EXPECT_EQ(enum_partitions(1)[0], P({1}));
}

TEST(Partitions, CountsAndShape) {
  for (int n = 0; n <= 12; ++n) {
    const auto ps = enum_partitions(n);
    EXPECT_EQ(static_cast<long long>(ps.size()), count_partitions(n, n)) << n;
    std::set<Partition> seen(ps.begin(), ps.end());
    EXPECT_EQ(seen.size(), ps.size());
    for (const auto& p : ps) {
      EXPECT_EQ(p.size(), n);
      EXPECT_TRUE(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    }
  }
}

TEST(Partitions, RejectsUnsortedParts) { EXPECT_THROW(P({1, 2}), std::exception); }

TEST(MultiPartitions, Examples) {
  const auto a = enum_multipartitions({1, 1});
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0], MP({{1}, {1}}));
  const auto b = enum_multipartitions({2, 0});
  ASSERT_EQ(b.size(), 2U);
  EXPECT_EQ(std::set<MultiPartition>(b.begin(), b.end()),
            (std::set<MultiPartition>{MP({{2}, {}}), MP({{1, 1}, {}})}));
  EXPECT_EQ(enum_multipartitions({2, 1}).size(), 2U);
}

TEST(MultiPartitions, CountIsProduct) {
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 4; ++d) {
      for (const auto& shape : enum_compositions(l, d)) {
        long long expect = 1;
        for (int x : shape) expect *= count_partitions(x, x);
        EXPECT_EQ(static_cast<long long>(enum_multipartitions(shape).size()), expect);
      }
    }
  }
}

TEST(Compositions, CountAndFactorial) {
  // C(d + l - 1, l - 1)
  EXPECT_EQ(enum_compositions(3, 2).size(), 6U);
  EXPECT_EQ(enum_compositions(2, 3).size(), 4U);
  EXPECT_EQ(composition_factorial({2, 1}), 2);
  EXPECT_EQ(composition_factorial({3, 0, 2}), 12);
}

TEST(Tableaux, Examples) {
  EXPECT_EQ(standard_tableaux(P({4})).size(), 1U);
  EXPECT_EQ(standard_tableaux(P({2, 1})).size(), 2U);
  EXPECT_EQ(standard_tableaux(P({1, 1, 1})).size(), 1U);
}

TEST(Tableaux, CountsMatchHookLengthAndCornerRecursion) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& mu : enum_partitions(n)) {
      const auto ts = standard_tableaux(mu);
      EXPECT_EQ(static_cast<long long>(ts.size()), hook_length_dim(mu));
      EXPECT_EQ(static_cast<long long>(ts.size()), count_tableaux(mu.parts));
      for (const auto& t : ts) EXPECT_TRUE(is_standard(t.rows));
    }
  }
}

TEST(Specht, Examples) {
  const SpechtModule sign(P({1, 1}));
  ASSERT_EQ(sign.dim(), 1U);
  EXPECT_EQ(sign.generator(0)(0, 0), Rational(-1));
  const SpechtModule std21(P({2, 1}));
  EXPECT_EQ(std21.generator(0).trace(), Rational(0));
  const SpechtModule triv(P({4}));
  for (const auto& g : triv.generators()) EXPECT_EQ(g, RationalMatrix::identity(1, Rational(1)));
  EXPECT_EQ(SpechtModule(Partition()).dim(), 1U);
}

TEST(Specht, CoxeterRelations) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : enum_partitions(n)) {
      const SpechtModule s(mu);
      const auto& g = s.generators();
      ASSERT_EQ(static_cast<int>(g.size()), n - 1);
      const auto id = RationalMatrix::identity(s.dim(), Rational(1));
      for (int i = 0; i + 1 < n; ++i) {
        EXPECT_EQ(g[i] * g[i], id);
        if (i + 2 < n) {
          EXPECT_EQ(g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1]);
        }
        for (int j = i + 2; j + 1 < n; ++j) EXPECT_EQ(g[i] * g[j], g[j] * g[i]);
      }
    }
  }
}

TEST(Specht, SumOfSquaresIsFactorial) {
  for (int n = 0; n <= 6; ++n) {
    long long s = 0;
    for (const auto& mu : enum_partitions(n)) {
      const auto dim = static_cast<long long>(SpechtModule(mu).dim());
      EXPECT_EQ(dim, hook_length_dim(mu));
      s += dim * dim;
    }
    EXPECT_EQ(s, factorial(n));
  }
}

TEST(Specht, Irreducible) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& mu : enum_partitions(n)) {
      const SpechtModule s(mu);
      EXPECT_EQ(commutant_dim(s.generators(), s.dim()), 1U) << mu.str();
    }
  }
}

TEST(Specht, MatrixIsHomomorphism) {
  const SpechtModule s(P({3, 2}));
  for (const auto& a : all_perms(5)) {
    for (const auto& b : all_perms(5)) {
      if ((perm_rank(a) * 7 + perm_rank(b)) % 13 != 0) continue;
      ASSERT_EQ(s.matrix(compose(a, b)), s.matrix(a) * s.matrix(b));
    }
  }
}

TEST(Specht, CharacterOrthonormality) {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_perms(n);
    const auto parts = enum_partitions(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        const SpechtModule sa(a);
        const SpechtModule sb(b);
        Rational ip;
        for (const auto& p : perms) ip += sa.character(p) * sb.character(p);
        EXPECT_EQ(ip / Rational(factorial(n)), Rational(a == b ? 1 : 0));
      }
    }
  }
}

TEST(OuterTensor, Examples) {
  EXPECT_EQ(MultiSpecht(MP({{1}, {1}})).dim(), 1U);
  const MultiSpecht ts(MP({{2}, {1, 1}}));
  ASSERT_EQ(ts.dim(), 1U);
  EXPECT_EQ(ts.block_generator(1, 0)(0, 0), Rational(-1));
  EXPECT_EQ(ts.block_generator(0, 0)(0, 0), Rational(1));
  const MultiSpecht big(MP({{2, 1}, {2, 1}}));
  EXPECT_EQ(big.dim(), 4U);
  const auto a = big.block_generator(0, 0);
  const auto b = big.block_generator(1, 1);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a.trace(), Rational(0));
}

TEST(Serialize, PartitionJson) {
  EXPECT_EQ(to_json(P({3, 1})), Json({3, 1}));
  EXPECT_EQ(to_json(MP({{2}, {}})).dump(), "[[2],[]]");
}

TEST(RemovableNodes, Examples) {
  const auto r = remove_one_node(P({3, 1}));
  EXPECT_EQ(std::set<Partition>(r.begin(), r.end()), (std::set<Partition>{P({2, 1}), P({3})}));
  EXPECT_EQ(remove_one_node(P({2, 2})).size(), 1U);
}
