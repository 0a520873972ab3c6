#include <gtest/gtest.h>

#include <algorithm>

#include "grpd/simples.hpp"

using namespace grpd;

namespace {

MultiPartition MP(std::vector<std::vector<int>> v) {
  std::vector<Partition> c;
  for (auto& x : v) c.emplace_back(std::move(x));
  return MultiPartition(std::move(c));
}

std::vector<std::size_t> sorted_dims(int l, int d) {
  std::vector<std::size_t> out;
  for (const auto& m : all_simples(l, d)) out.push_back(m.total_dim());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Simples, TrivialLabel) {
  const SimpleModule m(2, MP({{3}, {}}));
  EXPECT_EQ(m.total_dim(), 1U);
  for (const auto& pi : m.component_morphisms()) EXPECT_EQ(m.block(pi), RationalMatrix::identity(1, Rational(1)));
}

TEST(Simples, MixedColorsOnTwoObjects) {
  const SimpleModule m(2, MP({{1}, {1}}));
  EXPECT_EQ(m.block_dim(), 1U);
  EXPECT_EQ(m.total_dim(), 2U);
  EXPECT_EQ(m.objects(), (std::vector<ColorFn>{ColorFn(2, {1, 2}), ColorFn(2, {2, 1})}));
  EXPECT_FALSE(m.block_of(ColorFn(2, {1, 1})).has_value());
  for (const auto& f : m.objects()) {
    const auto a = m.action(identity_morphism(f));
    EXPECT_EQ(a.trace(), Rational(1));
  }
}

TEST(Simples, TotalDimExamples) {
  EXPECT_EQ(predicted_total_dim(MP({{1}, {1}})), 2);
  EXPECT_EQ(predicted_total_dim(MP({{2}, {}})), 1);
  EXPECT_EQ(predicted_total_dim(MP({{2, 1}, {1}})), 8);
  EXPECT_EQ(SimpleModule(2, MP({{2, 1}, {1}})).total_dim(), 8U);
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 4; ++d) {
      for (const auto& p : enum_all_multipartitions(l, d)) EXPECT_TRUE(total_dim_check(l, p));
    }
  }
}

TEST(Simples, CharacterExamples) {
  const SimpleModule mixed(2, MP({{1}, {1}}));
  EXPECT_EQ(mixed.character(wreath_identity(2, 2)), CycNum(2, Rational(2)));
  EXPECT_TRUE(mixed.character(gen_s0(2, 2)).is_zero());
  const SimpleModule sign(2, MP({{1, 1}, {}}));
  EXPECT_EQ(sign.character(gen_s(2, 2, 1)), CycNum(2, Rational(-1)));
}

TEST(Simples, DimensionLists) {
  EXPECT_EQ(sorted_dims(2, 2), (std::vector<std::size_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_dims(1, 3), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(sorted_dims(3, 1), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(Simples, ActionOfPhiIsARepresentation) {
  const PhiMap phi_map(2, 2);
  const auto g = enum_group(2, 2);
  for (const auto& p : enum_all_multipartitions(2, 2)) {
    const SimpleModule m(2, p);
    for (const auto& x : g) {
      const auto ax = m.action(phi_map(x));
      EXPECT_EQ(ax.trace(), m.character(x));
      for (const auto& y : g) EXPECT_EQ(m.action(phi_map(wreath_mul(x, y))), ax * m.action(phi_map(y)));
    }
  }
}

TEST(Simples, Functoriality) {
  for (int l = 1; l <= 3; ++l) {
    for (int d = 1; d <= 3; ++d) {
      for (const auto& p : enum_all_multipartitions(l, d)) {
        EXPECT_EQ(SimpleModule(l, p).functoriality_failures(), 0) << p.str();
      }
    }
  }
}

TEST(Simples, VerifyComplete) {
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& c : verify_complete(l, d)) EXPECT_TRUE(c.pass) << c.name << " " << l << "," << d;
    }
  }
}

TEST(Branching, Examples) {
  const auto r = branching(2, MP({{1}, {1}}));
  EXPECT_TRUE(r.integral);
  EXPECT_EQ(r.multiplicities, (std::map<MultiPartition, long long>{{MP({{1}, {}}), 1}, {MP({{}, {1}}), 1}}));
  const auto t = branching(3, MP({{3}, {}, {}}));
  EXPECT_EQ(t.multiplicities, (std::map<MultiPartition, long long>{{MP({{2}, {}, {}}), 1}}));
}

TEST(Branching, RemovableNodeRule) {
  EXPECT_TRUE(branching_check(2, 2).pass);
  EXPECT_TRUE(branching_check(2, 3).pass);
  EXPECT_TRUE(branching_check(3, 2).pass);
}

TEST(YoungInduction, Examples) {
  EXPECT_TRUE(young_induction_check(2, MP({{1}, {1}}), ColorFn(2, {1, 2})));
  EXPECT_TRUE(young_induction_check(2, MP({{2, 1}, {1}}), ColorFn(2, {1, 2, 1, 1})));
  EXPECT_THROW(young_induction_check(2, MP({{1}, {1}}), ColorFn(2, {1, 1})), std::exception);
}
