#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "skewhom/constructions.hpp"
#include "skewhom/linalg.hpp"

using namespace skewhom;

namespace {

using Q = Rational;

// Leibniz expansion over permutations; independent of the elimination in det().
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

Mat<Q> random_matrix(std::mt19937_64& rng, std::size_t n, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Mat<Q> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Q(d(rng));
  return m;
}

Vec<Q> random_vec(std::mt19937_64& rng, std::size_t n, int bound = 9) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Vec<Q> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Q(d(rng));
  return v;
}

Mat<Q> rows_of(const std::vector<Vec<Q>>& rows) { return Mat<Q>::from_columns(rows).transpose(); }

// metric weights of the quadruple product
constexpr int kSigma[4] = {1, -1, 1, 1};

}  // namespace

TEST(Linalg, AlphaSquaresToMinusIdentity) {
  const auto a = alpha_matrix<QuadExt>(Q(0));
  EXPECT_EQ(a * a, -Mat<QuadExt>::identity(2));
  const auto b = alpha_matrix<QuadExt>(Q(1, 2));
  EXPECT_EQ(b * b, -Mat<QuadExt>::identity(2));
}

TEST(Linalg, DeterminantExamples) {
  EXPECT_EQ(det(Mat<Q>{{Q(1), Q(2)}, {Q(3), Q(4)}}), Q(-2));
  EXPECT_EQ(det(alpha_matrix<QuadExt>(Q(1))), QuadExt(1));
  EXPECT_EQ(det(Mat<Q>::identity(4)), Q(1));
  EXPECT_EQ(det(Mat<Q>{{Q(0), Q(1)}, {Q(1), Q(0)}}), Q(-1));
  EXPECT_THROW(det(Mat<Q>(2, 3)), DimensionMismatch);
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto a = random_matrix(rng, n);
    EXPECT_EQ(det(a), leibniz_det(a));
  }
}

TEST(Linalg, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Linalg, InverseRoundTrip) {
  std::mt19937_64 rng(5);
  int inverted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_matrix(rng, 4, 3);
    if (det(a).is_zero()) {
      EXPECT_THROW(mat_inv(a), SingularMatrix);
      continue;
    }
    const auto inv = mat_inv(a);
    EXPECT_EQ(a * inv, Mat<Q>::identity(4));
    EXPECT_EQ(inv * a, Mat<Q>::identity(4));
    ++inverted;
  }
  EXPECT_GT(inverted, 30);
}

TEST(Linalg, SingularMatrixRejected) {
  EXPECT_THROW(mat_inv(Mat<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}), SingularMatrix);
}

TEST(Linalg, InverseInQuadraticExtension) {
  const auto p = semi_euclidean_p<QuadExt>(Q(1, 2));
  EXPECT_EQ(mat_inv(p), p);  // P² = I
}

TEST(Linalg, MatPowAndShapes) {
  const auto a = alpha_matrix<QuadExt>(Q(1));
  EXPECT_EQ(mat_pow(a, 0), Mat<QuadExt>::identity(2));
  EXPECT_EQ(mat_pow(a, 4), Mat<QuadExt>::identity(2));
  EXPECT_EQ(mat_pow(a, 3), -a);
  EXPECT_THROW((void)(Mat<Q>(2, 3) * Mat<Q>(2, 3)), DimensionMismatch);
  EXPECT_THROW((void)(Vec<Q>(2) + Vec<Q>(3)), DimensionMismatch);
}

TEST(Linalg, FlattenIsRowMajor) {
  const Mat<Q> m{{Q(1), Q(2)}, {Q(3), Q(4)}};
  EXPECT_EQ(m.flatten(), (Vec<Q>{Q(1), Q(2), Q(3), Q(4)}));
  EXPECT_EQ(Mat<Q>::unflatten(m.flatten(), 2, 2), m);
}

TEST(Wedge, QuadrupleProductIdentity) {
  // det[z; u; v; w] = Σ σ_i z_i wedge3(u,v,w)_i, with the determinant by Leibniz
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto z = random_vec(rng, 4), u = random_vec(rng, 4), v = random_vec(rng, 4), w = random_vec(rng, 4);
    const auto c = wedge3(u, v, w);
    Q pairing(0);
    for (std::size_t i = 0; i < 4; ++i) pairing = pairing + Q(kSigma[i]) * z[i] * c[i];
    EXPECT_EQ(pairing, leibniz_det(rows_of({z, u, v, w})));
  }
}

TEST(Wedge, AlternatingAndMultilinear) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_vec(rng, 4), v = random_vec(rng, 4), w = random_vec(rng, 4), x = random_vec(rng, 4);
    const Q c(trial % 7 - 3);
    EXPECT_EQ(wedge3(u, v, w), -wedge3(v, u, w));
    EXPECT_EQ(wedge3(u, v, w), -wedge3(u, w, v));
    EXPECT_TRUE(wedge3(u, u, w).is_zero());
    EXPECT_EQ(wedge3(u + c * x, v, w), wedge3(u, v, w) + c * wedge3(x, v, w));
  }
}

TEST(Wedge, BasisValues) {
  const auto e = [](std::size_t i) { return Vec<Q>::unit(4, i); };
  // cofactor of the omitted index with the metric weight
  EXPECT_EQ(wedge3(e(1), e(2), e(3)), (Vec<Q>{Q(1), Q(0), Q(0), Q(0)}));
  EXPECT_EQ(wedge3(e(0), e(2), e(3)), (Vec<Q>{Q(0), Q(1), Q(0), Q(0)}));
  EXPECT_EQ(wedge3(e(0), e(1), e(3)), (Vec<Q>{Q(0), Q(0), Q(1), Q(0)}));
  EXPECT_EQ(wedge3(e(0), e(1), e(2)), (Vec<Q>{Q(0), Q(0), Q(0), Q(-1)}));
}

TEST(Cross, RightHanded) {
  const auto e = [](std::size_t i) { return Vec<Q>::unit(3, i); };
  EXPECT_EQ(cross3(e(0), e(1)), e(2));
  EXPECT_EQ(cross3(e(1), e(2)), e(0));
  EXPECT_EQ(cross3(e(2), e(0)), e(1));
}
