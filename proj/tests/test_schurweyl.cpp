#include <gtest/gtest.h>

#include "grpd/rook.hpp"
#include "grpd/schurweyl.hpp"

using namespace grpd;

namespace {

MultiPartition MP(std::vector<std::vector<int>> v) {
  std::vector<Partition> c;
  for (auto& x : v) c.emplace_back(std::move(x));
  return MultiPartition(std::move(c));
}

const Check& find(const std::vector<Check>& cs, const std::string& name) {
  for (const auto& c : cs) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

long long image_dim(const TensorSpace& t) {
  std::vector<RationalMatrix> image;
  for (const auto& m : all_morphisms(t.ell(), t.d())) image.push_back(t.action(m));
  return static_cast<long long>(span_dim(image));
}

}  // namespace

TEST(TensorSpace, Basics) {
  const TensorSpace t({2, 1}, 2);
  EXPECT_EQ(t.n(), 3);
  EXPECT_EQ(t.dim(), 9U);
  EXPECT_EQ(t.color(0), 1);
  EXPECT_EQ(t.color(2), 2);
  for (std::size_t i = 0; i < t.dim(); ++i) EXPECT_EQ(t.index(t.sequence(i)), i);
  EXPECT_EQ(t.block(ColorFn(2, {1, 1})).size(), 4U);
  EXPECT_EQ(t.block(ColorFn(2, {1, 2})).size(), 2U);
  EXPECT_NO_THROW(TensorSpace({4, 4}, 4));
  EXPECT_THROW(TensorSpace({4, 4}, 5), ResourceError);
}

TEST(TensorSpace, ActionExamples) {
  const TensorSpace t({1, 1}, 2);
  const ColorFn f(2, {1, 2});
  const ColorFn g(2, {2, 1});
  EXPECT_EQ(t.action(identity_morphism(f)).trace(), Rational(1));
  const auto a = t.action(hom(f, g)[0]);
  // v_1 (x) v_2 -> v_2 (x) v_1
  const std::size_t from = t.index({0, 1});
  const std::size_t to = t.index({1, 0});
  EXPECT_EQ(a(to, from), Rational(1));
  EXPECT_EQ(a.trace(), Rational(0));
  const TensorSpace c({3}, 2);
  const auto flip = c.action(hom(ColorFn(1, {1, 1}), ColorFn(1, {1, 1}))[1]);
  EXPECT_EQ(flip(c.index({2, 0}), c.index({0, 2})), Rational(1));
  EXPECT_EQ(flip.trace(), Rational(3));
}

TEST(TensorCommuting, Commuting) {
  for (const auto& [k, d] : std::vector<std::pair<std::vector<int>, int>>{
           {{2}, 2}, {{2}, 3}, {{1, 1}, 2}, {{1, 1}, 3}, {{2, 1}, 2}, {{2, 2}, 2}, {{1, 1, 1}, 2}}) {
    const TensorSpace t(k, d);
    for (const auto& c : verify_commuting(t)) EXPECT_TRUE(c.pass) << c.name << " " << kvec_str(k) << " d=" << d;
  }
}

TEST(DoubleCentralizer, ClassicalDimension) {
  const TensorSpace t({2}, 2);
  const auto cs = verify_double_centralizer(t);
  for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_EQ(find(cs, "theorem12_image_is_commutant").details["commutant_dim"], 2);
  // the symmetric tensors in End(V) (x) End(V): 4 * 5 / 2
  EXPECT_EQ(find(cs, "theorem12_commutant_is_gl").details["gl_algebra_dim"], 10);
}

TEST(DoubleCentralizer, DiagonalBlocks) {
  // the colorings (1,1), (2,2) each give a line, and the mixed pair a 2x2
  // matrix algebra, so the image has dimension 1 + 1 + 4
  const TensorSpace t({1, 1}, 2);
  const auto cs = verify_double_centralizer(t);
  for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_EQ(find(cs, "theorem12_image_is_commutant").details["image_dim"], 6);
  EXPECT_EQ(image_dim(t), 6);
}

TEST(DoubleCentralizer, Grid) {
  for (const auto& [k, d] : std::vector<std::pair<std::vector<int>, int>>{
           {{2}, 3}, {{1, 1}, 3}, {{2, 1}, 2}, {{2, 2}, 2}}) {
    const TensorSpace t(k, d);
    for (const auto& c : verify_double_centralizer(t)) EXPECT_TRUE(c.pass) << c.name << " " << kvec_str(k);
  }
  EXPECT_EQ(image_dim(TensorSpace({2, 2}, 2)), 8);
}

TEST(DoubleCentralizer, DegreeOneIsBlockDiagonal) {
  const TensorSpace t({2, 1}, 1);
  const auto cs = verify_double_centralizer(t);
  EXPECT_EQ(find(cs, "theorem12_commutant_is_gl").details["gl_algebra_dim"], 5);
}

TEST(TensorKernel, KillsMultiRowLabels) {
  EXPECT_TRUE(killed_by_tensor_space(MP({{1, 1}, {}}), {1, 1}));
  EXPECT_FALSE(killed_by_tensor_space(MP({{2}, {}}), {1, 1}));
  EXPECT_FALSE(killed_by_tensor_space(MP({{1, 1}, {}}), {2, 1}));
  const TensorSpace t({1, 1}, 2);
  const auto cs = kernel_check(t);
  for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name;
  const auto& kd = find(cs, "lemma17_kernel_dim");
  EXPECT_EQ(kd.details["kernel_dim"], 2);
  EXPECT_EQ(kd.details["killed"], Json({"((1,1),())", "((),(1,1))"}));
}

TEST(TensorKernel, FaithfulWhenBlocksLarge) {
  for (const auto& [k, d] : std::vector<std::pair<std::vector<int>, int>>{{{2, 2}, 2}, {{3}, 3}, {{2, 2, 2}, 2}}) {
    const TensorSpace t(k, d);
    const auto cs = kernel_check(t);
    for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name << " " << kvec_str(k);
    EXPECT_TRUE(find(cs, "faithful_when_blocks_large").pass);
  }
  for (const auto& c : kernel_check(TensorSpace({2, 1}, 3))) EXPECT_TRUE(c.pass) << c.name;
}

TEST(TensorKernel, TensorCharacterIsTrace) {
  const TensorSpace t({2, 1}, 2);
  for (const auto& x : enum_group(2, 2)) EXPECT_EQ(t.action(phi(x)).trace(), tensor_character(t, x));
}

TEST(Rook, Counts) {
  EXPECT_EQ(rook_order(2), 7);
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(static_cast<long long>(all_rook_elems(d).size()), rook_order(d));
  EXPECT_EQ(rook_order(3), 34);
  EXPECT_EQ(rook_order(4), 209);
}

TEST(Rook, Identities) {
  const RookAlg e = RookAlg::basis(rook_identity(2));
  const RookAlg s0 = rook_generator_images(2)[0];
  EXPECT_EQ(s0 * s0, e);
  // eps_1 s_1 eps_1 s_1 is the identity on {3, ..., d}
  const RookElem eps = rook_eps1(3);
  const RookElem s1{adjacent_transposition(3, 0)};
  const RookElem w = rook_compose(eps, rook_compose(s1, rook_compose(eps, s1)));
  EXPECT_EQ(w.map, (std::vector<int>{-1, -1, 2}));
}

TEST(Rook, Epimorphism) {
  for (int d = 1; d <= 4; ++d) {
    const auto cs = rook_epimorphism_check(d);
    for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name << " d=" << d;
    EXPECT_EQ(find(cs, "rook_surjective").details["span_dim"], rook_order(d));
  }
}

TEST(Rook, TensorImage) {
  const auto c = rook_tensor_image(2, 3);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.details["image_dim"], 7);
}

TEST(GkdDuality, SmallParameters) {
  const auto a = theorem95_check({2, 2, 1, 1});
  for (const auto& c : a) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_EQ(find(a, "theorem95_image_is_commutant").details["image_dim"], 1);
  const auto b = theorem95_check({2, 2, 2, 2});
  for (const auto& c : b) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_EQ(find(b, "theorem95_image_is_commutant").details["image_dim"], 4);
}

TEST(GkdDuality, ZCommutesWithPsiImage) {
  const Theorem95Params p{4, 2, 1, 2};
  const auto cs = theorem95_check(p);
  for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_EQ(find(cs, "theorem95_image_is_commutant").details["algebra_dim"], 16);
}
