#include <random>

#include <gtest/gtest.h>

#include "skewhom/constructions.hpp"

using namespace skewhom;

namespace {

using Q = Rational;

Mat<Q> diag(std::initializer_list<int> d) {
  Mat<Q> m(d.size(), d.size());
  std::size_t i = 0;
  for (int v : d) m(i, i) = Q(v), ++i;
  return m;
}

Vec<Q> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-5, 5);
  Vec<Q> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Q(d(rng));
  return v;
}

// Conjugate the structure by a basis permutation: e_i ↦ e_perm[i].
HomAlgebra<Q> permuted(const HomAlgebra<Q>& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.dim();
  Mat<Q> p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = Q(1);
  const Mat<Q> pinv = p.transpose();
  std::vector<std::vector<Vec<Q>>> table(n, std::vector<Vec<Q>>(n, Vec<Q>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[perm[i]][perm[j]] = p * g.bracket(i, j);
  return HomAlgebra<Q>(table, p * g.twist() * pinv);
}

}  // namespace

TEST(HomAlgebra, RejectsNonAntisymmetricTable) {
  std::vector<std::vector<Vec<Q>>> table(2, std::vector<Vec<Q>>(2, Vec<Q>(2)));
  table[0][1] = Vec<Q>{Q(1), Q(0)};
  EXPECT_THROW(HomAlgebra<Q>(table, Mat<Q>::identity(2)), ValidationError);
  table[1][0] = Vec<Q>{Q(-1), Q(0)};
  EXPECT_NO_THROW(HomAlgebra<Q>(table, Mat<Q>::identity(2)));
  table[0][0] = Vec<Q>{Q(1), Q(0)};
  EXPECT_THROW(HomAlgebra<Q>(table, Mat<Q>::identity(2)), ValidationError);
}

TEST(HomAlgebra, CrossProductIsLie) {
  const auto g = build_r3_cross(Mat<Q>::identity(3));
  const auto c = classify(g);
  EXPECT_EQ(c.verdict, Verdict::Lie);
  EXPECT_TRUE(c.is_hom_lie());
  EXPECT_TRUE(c.regular);
  EXPECT_EQ(c.twist_sign.sign, 1);
}

TEST(HomAlgebra, NegatedTwistIsSkew) {
  const auto g = build_r3_cross(diag({-1, -1, -1}));
  const auto c = classify(g);
  EXPECT_EQ(c.verdict, Verdict::SkewHomLie);
  EXPECT_EQ(c.twist_sign.sign, -1);
}

TEST(HomAlgebra, ScaledTwistIsNeither) {
  // β = 2·id: β[x,y] = 2[x,y] but [βx,βy] = 4[x,y]
  const auto g = build_r3_cross(Mat<Q>::identity(3)).with_twist(Q(2) * Mat<Q>::identity(3));
  const auto c = classify(g);
  EXPECT_EQ(c.verdict, Verdict::Neither);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->what, "twist-sign");
}

TEST(HomAlgebra, AbelianIsDegenerateForTwistSign) {
  const auto g = HomAlgebra<Q>::abelian(diag({2, 3}));
  const auto s = check_twist_sign(g);
  EXPECT_TRUE(s.degenerate);
  EXPECT_FALSE(s.is_neither());
  EXPECT_EQ(classify(g).verdict, Verdict::HomLie);
  EXPECT_TRUE(g.is_abelian());
}

TEST(HomAlgebra, FromUpperFillsLowerTriangle) {
  const auto g = HomAlgebra<Q>::from_upper(2, {{{0, 1}, Vec<Q>{Q(0), Q(1)}}}, Mat<Q>::identity(2));
  EXPECT_EQ(g.bracket(1, 0), (Vec<Q>{Q(0), Q(-1)}));
  EXPECT_THROW(HomAlgebra<Q>::from_upper(2, {{{1, 0}, Vec<Q>{Q(0), Q(1)}}}, Mat<Q>::identity(2)), ValidationError);
}

TEST(HomAlgebra, JacobiWitnessOnMutation) {
  const auto g = build_r3_cross(Mat<Q>::identity(3)).with_structure_constant(0, 1, 0, Q(1));
  const auto r = check_hom_jacobi(g);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->what, "hom-jacobi");
  EXPECT_EQ(r.witness->indices.size(), 3u);
  EXPECT_EQ(classify(g).verdict, Verdict::Neither);
}

TEST(HomAlgebra, WitnessIsLexicographicallyFirst) {
  const auto g = build_r3_cross(Mat<Q>::identity(3)).with_structure_constant(0, 1, 0, Q(1));
  const auto r = check_hom_jacobi(g);
  ASSERT_FALSE(r.passed);
  const auto& t = r.witness->indices;
  // nothing earlier fails
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        if (std::vector<std::size_t>{i, j, k} >= t) continue;
        EXPECT_TRUE(hom_jacobi_residual(g, Vec<Q>::unit(3, i), Vec<Q>::unit(3, j), Vec<Q>::unit(3, k)).is_zero());
      }
}

TEST(HomAlgebra, TwistSignHoldsOnRandomVectors) {
  std::mt19937_64 rng(21);
  const auto se = build_semi_euclidean<QuadExt>(Q(1));
  const auto& g = se.algebra;
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = to_backend<QuadExt>(random_vec(rng, 4)), y = to_backend<QuadExt>(random_vec(rng, 4));
    const auto& b = g.twist();
    EXPECT_EQ(b * bracket_eval(g, x, y), -bracket_eval(g, b * x, b * y));
  }
}

TEST(HomAlgebra, ClassificationInvariantUnderBasisPermutation) {
  const std::vector<std::size_t> perm{2, 0, 1};
  for (const auto& a : {Mat<Q>::identity(3), diag({-1, -1, -1}), diag({1, 1, -1}), diag({1, -1, -1})}) {
    const auto g = build_r3_cross(a);
    EXPECT_EQ(classify(permuted(g, perm)).verdict, classify(g).verdict);
  }
  const auto bad = build_r3_cross(Mat<Q>::identity(3)).with_structure_constant(0, 1, 0, Q(1));
  ASSERT_EQ(classify(bad).verdict, Verdict::Neither);
  EXPECT_EQ(classify(permuted(bad, perm)).verdict, Verdict::Neither);
}

TEST(HomAlgebra, PowerSignLaw) {
  const auto g = build_r3_cross(diag({-1, -1, -1}));
  for (unsigned m = 1; m <= 4; ++m) EXPECT_TRUE(check_power_sign_law(g, m).passed) << m;
  EXPECT_EQ(check_power_sign_law(g, 2).note, "sign +1");
  EXPECT_THROW(check_power_sign_law(build_r3_cross(Mat<Q>::identity(3)), 1), PreconditionError);
  EXPECT_THROW(check_power_sign_law(g, 0), PreconditionError);
}

TEST(HomAlgebra, MorphismCheck) {
  const auto g = build_r3_cross(Mat<Q>::identity(3));
  EXPECT_TRUE(check_morphism(Mat<Q>::identity(3), g, g, 1).passed);
  EXPECT_FALSE(check_morphism(Mat<Q>::identity(3), g, g, -1).passed);
  // x ↦ -x reverses the bracket sign
  EXPECT_TRUE(check_morphism(-Mat<Q>::identity(3), g, g, -1).passed);
  EXPECT_THROW(check_morphism(Mat<Q>::identity(3), g, g, 2), PreconditionError);
}
