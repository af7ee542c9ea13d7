#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "skewhom/constructions.hpp"

using namespace skewhom;

namespace {

using Q = Rational;
using K = QuadExt;

const std::vector<Q> kThetas{Q(0), Q(1), Q(1, 2), Q(-2, 3), Q(3, 4)};

template <typename F>
F leibniz_det(const Mat<F>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  F total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    F term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Bracket from its defining determinant: ⟨z,[x,y]⟩_σ = det[z;Px;r;y] - det[z;Py;r;x].
Vec<K> bracket_oracle(const Mat<K>& p, const Vec<K>& r, const Vec<K>& x, const Vec<K>& y) {
  static constexpr int sigma[4] = {1, -1, 1, 1};
  const Vec<K> px = p * x, py = p * y;
  Vec<K> out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    auto rows = [&](const Vec<K>& a, const Vec<K>& c) {
      Mat<K> m(4, 4);
      m(0, i) = K(1);
      for (std::size_t j = 0; j < 4; ++j) m(1, j) = a[j], m(2, j) = r[j], m(3, j) = c[j];
      return leibniz_det(m);
    };
    out[i] = K(sigma[i]) * (rows(px, y) - rows(py, x));
  }
  return out;
}

// αBα computed entrywise with no library matrix code.
Mat<K> sandwich_oracle(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t l = 0; l < 2; ++l) {
      K acc(0);
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) acc = acc + a(i, j) * b(j, k) * a(k, l);
      out(i, l) = acc;
    }
  return out;
}

Vec<K> random_vec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return Vec<K>{K(d(rng)), K(d(rng)), K(d(rng)), K(d(rng))};
}

Mat<Q> diag3(int a, int b, int c) { return Mat<Q>{{Q(a), Q(0), Q(0)}, {Q(0), Q(b), Q(0)}, {Q(0), Q(0), Q(c)}}; }

}  // namespace

TEST(R3Cross, VerdictFollowsDeterminant) {
  EXPECT_EQ(classify(build_r3_cross(Mat<Q>::identity(3))).verdict, Verdict::Lie);
  EXPECT_EQ(classify(build_r3_cross(diag3(1, 1, -1))).verdict, Verdict::SkewHomLie);
  EXPECT_EQ(classify(build_r3_cross(diag3(-1, -1, -1))).verdict, Verdict::SkewHomLie);
  EXPECT_EQ(classify(build_r3_cross(diag3(1, -1, -1))).verdict, Verdict::HomLie);
  // quarter turn about the third axis
  const Mat<Q> rot{{Q(0), Q(-1), Q(0)}, {Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(1)}};
  EXPECT_EQ(classify(build_r3_cross(rot)).verdict, Verdict::HomLie);
}

TEST(R3Cross, NonOrthogonalRejected) {
  EXPECT_THROW(build_r3_cross(diag3(2, 1, 1)), PreconditionError);
  EXPECT_THROW(build_r3_cross(Mat<Q>::identity(2)), DimensionMismatch);
}

TEST(GlAlpha, AdjointOfMatrixUnits) {
  const auto ctx = GlContext<K>::make(alpha_matrix<K>(Q(0)));
  // Ad_α(e11) = -e22
  EXPECT_EQ(ctx.ad_matrix() * ctx.basis(0).flatten(), (-ctx.basis(3)).flatten());
  // [e11, e22]_α = e12 + e21
  EXPECT_EQ(gl_bracket(ctx.alpha, ctx.basis(0), ctx.basis(3)), ctx.basis(1) + ctx.basis(2));
}

TEST(GlAlpha, AdjointMatchesEntrywiseOracle) {
  for (const auto& theta : kThetas) {
    const auto ctx = GlContext<K>::make(alpha_matrix<K>(theta));
    const auto ad = ctx.ad_matrix();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ad.column(i), sandwich_oracle(ctx.alpha, ctx.basis(i)).flatten());
  }
}

TEST(GlAlpha, IsSkewHomLie) {
  for (const auto& theta : kThetas) {
    const auto g = build_gl_alpha(GlContext<K>::make(alpha_matrix<K>(theta)));
    EXPECT_EQ(classify(g).verdict, Verdict::SkewHomLie) << theta;
  }
}

TEST(GlAlpha, RequiresComplexStructure) {
  EXPECT_THROW(GlContext<Q>::make(Mat<Q>::identity(2)), PreconditionError);
}

TEST(GlAlpha, AdSquaredHasNoCounterexampleOnTwoByTwo) {
  // Ad_α² = id here, so the pair is a Hom-Lie algebra and the scan comes back empty
  for (const auto& theta : kThetas) {
    const auto ctx = GlContext<K>::make(alpha_matrix<K>(theta));
    EXPECT_EQ(ctx.ad_matrix() * ctx.ad_matrix(), Mat<K>::identity(4));
    EXPECT_FALSE(ad_alpha_squared_counterexample(ctx).has_value()) << theta;
  }
}

TEST(GlAlpha, AdSquaredCounterexampleOnFourByFour) {
  const auto a = alpha_matrix<K>(Q(0));
  Mat<K> block(4, 4);
  for (std::size_t b = 0; b < 4; b += 2)
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) block(b + p, b + q) = a(p, q);
  const auto ctx = GlContext<K>::make(block);
  const auto hit = ad_alpha_squared_counterexample(ctx);
  ASSERT_TRUE(hit.has_value());
  EXPECT_FALSE(hit->residual.is_zero());
  const auto [i, j, k] = hit->triple;
  EXPECT_EQ(ad_alpha_squared_cyclic_sum(ctx.alpha, ctx.basis(i), ctx.basis(j), ctx.basis(k)).flatten(), hit->residual);
}

TEST(GlAlpha, CyclicSumEqualsJacobiResidualOnRandomMatrices) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto alpha = alpha_matrix<K>(Q(1, 2));
  const auto ctx = GlContext<K>::make(alpha);
  const auto g = build_gl_alpha(ctx);
  const auto twist = ctx.ad_matrix() * ctx.ad_matrix();
  for (int trial = 0; trial < 20; ++trial) {
    Mat<K> a(2, 2), b(2, 2), c(2, 2);
    for (auto* m : {&a, &b, &c})
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) (*m)(p, q) = K(d(rng));
    EXPECT_EQ(ad_alpha_squared_cyclic_sum(alpha, a, b, c).flatten(),
              hom_jacobi_residual(g, twist, a.flatten(), b.flatten(), c.flatten()));
  }
}

TEST(SemiEuclidean, MatrixIdentities) {
  for (const auto& theta : kThetas) {
    const auto se = build_semi_euclidean<K>(theta);
    const auto& p = se.ctx.p;
    EXPECT_EQ(p * p, Mat<K>::identity(4));
    EXPECT_EQ(p * se.ctx.r, -se.ctx.r);
    EXPECT_EQ(p, GlContext<K>::make(alpha_matrix<K>(theta)).ad_matrix());
    EXPECT_EQ(se.ctx.s * se.ctx.s, K(Q(1) + theta * theta));
  }
}

TEST(SemiEuclidean, NotOrthogonalAwayFromZero) {
  EXPECT_EQ(semi_euclidean_p<K>(Q(0)) * semi_euclidean_p<K>(Q(0)).transpose(), Mat<K>::identity(4));
  for (const auto& theta : {Q(1), Q(1, 2)}) {
    const auto p = semi_euclidean_p<K>(theta);
    EXPECT_FALSE(p * p.transpose() == Mat<K>::identity(4)) << theta;
  }
}

TEST(SemiEuclidean, SkewHomLieForEachTheta) {
  for (const auto& theta : kThetas) {
    const auto c = classify(build_semi_euclidean<K>(theta).algebra);
    EXPECT_EQ(c.verdict, Verdict::SkewHomLie) << theta;
    EXPECT_TRUE(c.regular);
  }
}

TEST(SemiEuclidean, BracketMatchesDeterminantOracle) {
  std::mt19937_64 rng(43);
  for (const auto& theta : kThetas) {
    const auto se = build_semi_euclidean<K>(theta);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_vec(rng), y = random_vec(rng);
      EXPECT_EQ(semi_euclidean_bracket(se.ctx, x, y), bracket_oracle(se.ctx.p, se.ctx.r, x, y));
      EXPECT_EQ(bracket_eval(se.algebra, x, y), bracket_oracle(se.ctx.p, se.ctx.r, x, y));
    }
  }
}

TEST(SemiEuclidean, BracketHasShapeAZeroZeroA) {
  std::mt19937_64 rng(44);
  for (const auto& theta : kThetas) {
    const auto se = build_semi_euclidean<K>(theta);
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_vec(rng), y = random_vec(rng);
      const auto b = semi_euclidean_bracket(se.ctx, x, y);
      const K a = exact_coefficient(se.ctx, x, y);
      EXPECT_EQ(b, (Vec<K>{a, K(0), K(0), a}));
    }
  }
}

TEST(SemiEuclidean, ClosedFormCoefficientOnlyHoldsAtZero) {
  std::mt19937_64 rng(45);
  for (const auto& theta : kThetas) {
    const auto se = build_semi_euclidean<K>(theta);
    const K t(theta);
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_vec(rng), y = random_vec(rng);
      const K gap = semi_euclidean_bracket(se.ctx, x, y)[0] - closed_form_coefficient(se.ctx, x, y);
      EXPECT_EQ(gap, K(-2) * t * (x[1] * y[2] - x[2] * y[1]));
    }
  }
  const auto se = build_semi_euclidean<K>(Q(1));
  const Vec<K> e2 = Vec<K>::unit(4, 1), e3 = Vec<K>::unit(4, 2);
  EXPECT_FALSE(semi_euclidean_bracket(se.ctx, e2, e3)[0] == closed_form_coefficient(se.ctx, e2, e3));
}

TEST(SemiEuclidean, RationalBackendNeedsSquareDiscriminant) {
  EXPECT_THROW(build_semi_euclidean<Q>(Q(1)), DomainError);
  const auto se = build_semi_euclidean<Q>(Q(3, 4));
  EXPECT_EQ(se.ctx.s, Q(5, 4));
  EXPECT_EQ(classify(se.algebra).verdict, Verdict::SkewHomLie);
}

TEST(SemiEuclidean, ApproxBackendAgreesWithExact) {
  const auto approx = build_semi_euclidean<Approx>(Q(1));
  EXPECT_EQ(classify(approx.algebra).verdict, Verdict::SkewHomLie);
}

TEST(PseudoAdjoint, IdentityOnSkewFamilies) {
  for (const auto& theta : {Q(0), Q(1), Q(1, 2)}) {
    EXPECT_TRUE(check_pseudo_adjoint_identity(build_semi_euclidean<K>(theta).algebra).passed) << theta;
    EXPECT_TRUE(check_pseudo_adjoint_identity(build_gl_alpha(GlContext<K>::make(alpha_matrix<K>(theta)))).passed);
  }
  EXPECT_TRUE(check_pseudo_adjoint_identity(build_r3_cross(diag3(-1, -1, -1))).passed);
}

TEST(PseudoAdjoint, RejectsNonSkewAlgebra) {
  EXPECT_THROW(check_pseudo_adjoint_identity(build_r3_cross(Mat<Q>::identity(3))), PreconditionError);
}

TEST(PseudoAdjoint, AdStarIsMinusBracket) {
  const auto g = build_semi_euclidean<K>(Q(1)).algebra;
  const auto ad = pseudo_adjoint(g);
  const Vec<K> x{K(1), K(2), K(0), K(-1)}, y{K(0), K(3), K(1), K(1)};
  EXPECT_EQ(ad(x) * y, -bracket_eval(g, x, y));
}

TEST(PseudoAdjoint, MorphismNeedsComplexStructure) {
  EXPECT_THROW(check_pseudo_adjoint_morphism(build_semi_euclidean<K>(Q(0)).algebra), PreconditionError);
  const auto abelian = HomAlgebra<K>::abelian(alpha_matrix<K>(Q(1)));
  EXPECT_TRUE(check_pseudo_adjoint_morphism(abelian).passed);
}
