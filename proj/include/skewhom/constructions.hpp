#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "skewhom/algebra.hpp"
#include "skewhom/errors.hpp"
#include "skewhom/linalg.hpp"

namespace skewhom {

// ---------------------------------------------------------------------------
// R³ with a twisted cross product

/// Bracket [x,y] = A(x × y) with twist A, for orthogonal A.
/// det A = +1 gives a Hom-Lie algebra, det A = -1 a skew-Hom-Lie algebra.
template <Scalar F>
HomAlgebra<F> build_r3_cross(const Mat<F>& a) {
  if (a.rows() != 3 || a.cols() != 3) throw DimensionMismatch("build_r3_cross needs a 3x3 matrix");
  if (!(a * a.transpose() == Mat<F>::identity(3))) throw PreconditionError("A is not orthogonal: A*A^T != I");
  std::vector<std::vector<Vec<F>>> table(3, std::vector<Vec<F>>(3, Vec<F>(3)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) table[i][j] = a * cross3(Vec<F>::unit(3, i), Vec<F>::unit(3, j));
  return HomAlgebra<F>(std::move(table), a);
}

// ---------------------------------------------------------------------------
// gl(V) with [A,B]_α = αAαBα - αBαAα and twist Ad_α(B) = αBα

/// α(θ) = [[-θ, √(1+θ²)], [-√(1+θ²), θ]], which squares to -id.
template <Scalar F>
Mat<F> alpha_matrix(const Rational& theta) {
  const F t = ScalarTraits<F>::from_rational(theta);
  const F s = sqrt_one_plus_square<F>(theta);
  return Mat<F>{{-t, s}, {-s, t}};
}

template <Scalar F>
Mat<F> matrix_unit(std::size_t m, std::size_t p, std::size_t q) {
  Mat<F> e(m, m);
  e(p, q) = F(1);
  return e;
}

/// Matrix of B ↦ L·B·R in the row-major matrix-unit basis of gl(m).
template <Scalar F>
Mat<F> sandwich_matrix(const Mat<F>& left, const Mat<F>& right) {
  const std::size_t m = left.rows();
  std::vector<Vec<F>> cols;
  cols.reserve(m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) cols.push_back((left * matrix_unit<F>(m, p, q) * right).flatten());
  return Mat<F>::from_columns(cols);
}

/// [A,B]_α on matrices.
template <Scalar F>
Mat<F> gl_bracket(const Mat<F>& alpha, const Mat<F>& a, const Mat<F>& b) {
  return alpha * a * alpha * b * alpha - alpha * b * alpha * a * alpha;
}

template <Scalar F>
struct GlContext {
  std::size_t m = 0;
  Mat<F> alpha;

  static GlContext make(Mat<F> alpha) {
    if (!alpha.is_square()) throw DimensionMismatch("alpha must be square");
    const std::size_t m = alpha.rows();
    if (!(alpha * alpha == -Mat<F>::identity(m))) throw PreconditionError("alpha^2 != -id");
    return GlContext{m, std::move(alpha)};
  }

  std::size_t dim() const { return m * m; }
  Mat<F> basis(std::size_t index) const { return matrix_unit<F>(m, index / m, index % m); }
  Mat<F> ad_matrix() const { return sandwich_matrix(alpha, alpha); }
};

template <Scalar F>
HomAlgebra<F> build_gl_alpha(const GlContext<F>& ctx) {
  const std::size_t n = ctx.dim();
  std::vector<std::vector<Vec<F>>> table(n, std::vector<Vec<F>>(n, Vec<F>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      table[i][j] = gl_bracket(ctx.alpha, ctx.basis(i), ctx.basis(j)).flatten();
      table[j][i] = -table[i][j];
    }
  return HomAlgebra<F>(std::move(table), ctx.ad_matrix());
}

template <Scalar F>
struct GlCounterexample {
  std::array<std::size_t, 3> triple{};
  Vec<F> residual;
};

/// Scans triples of distinct matrix units for a nonzero Hom-Jacobi residual of
/// ([·,·]_α, Ad_α²). Returns nullopt when the whole scan comes back clean.
template <Scalar F>
std::optional<GlCounterexample<F>> ad_alpha_squared_counterexample(const GlContext<F>& ctx) {
  const HomAlgebra<F> g = build_gl_alpha(ctx);
  const Mat<F> twist = ctx.ad_matrix() * ctx.ad_matrix();
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;  // repeated arguments give zero
        auto r = hom_jacobi_residual(g, twist, Vec<F>::unit(n, i), Vec<F>::unit(n, j), Vec<F>::unit(n, k));
        if (!r.is_zero()) return GlCounterexample<F>{{i, j, k}, std::move(r)};
      }
  return std::nullopt;
}

/// Expanded form of the Ad_α² cyclic sum:
/// Σ_cyc AαBCα - αCAαB - BαACα + αCBαA.
template <Scalar F>
Mat<F> ad_alpha_squared_cyclic_sum(const Mat<F>& alpha, const Mat<F>& a, const Mat<F>& b, const Mat<F>& c) {
  auto term = [&](const Mat<F>& x, const Mat<F>& y, const Mat<F>& z) {
    return x * alpha * y * z * alpha - alpha * z * x * alpha * y - y * alpha * x * z * alpha +
           alpha * z * y * alpha * x;
  };
  return term(a, b, c) + term(b, c, a) + term(c, a, b);
}

// ---------------------------------------------------------------------------
// Semi-Euclidean R⁴₂

template <Scalar F>
struct SemiEuclideanContext {
  Rational theta;
  F s;       // √(1+θ²)
  Mat<F> p;  // the matrix of Ad_{α(θ)}
  Vec<F> r;  // (-θ, s, -s, θ)ᵀ, satisfies P r = -r
};

template <Scalar F>
struct SemiEuclidean {
  HomAlgebra<F> algebra;
  SemiEuclideanContext<F> ctx;
};

/// P(θ) from its closed-form entries.
template <Scalar F>
Mat<F> semi_euclidean_p(const Rational& theta) {
  const F t = ScalarTraits<F>::from_rational(theta);
  const F s = sqrt_one_plus_square<F>(theta);
  const F t2 = t * t;
  const F ts = t * s;
  const F d = F(1) + t2;
  return Mat<F>{{t2, ts, -ts, -d}, {-ts, -t2, d, ts}, {ts, d, -t2, -ts}, {-d, -ts, ts, t2}};
}

/// Px∧r∧y - Py∧r∧x.
template <Scalar F>
Vec<F> semi_euclidean_bracket(const SemiEuclideanContext<F>& ctx, const Vec<F>& x, const Vec<F>& y) {
  return wedge3(ctx.p * x, ctx.r, y) - wedge3(ctx.p * y, ctx.r, x);
}

/// a = -√(1+θ²)[(x₁-x₄)(y₂+y₃) - (x₂+x₃)(y₁-y₄)], the closed form.
/// Agrees with semi_euclidean_bracket only when θ = 0; see exact_coefficient.
template <Scalar F>
F closed_form_coefficient(const SemiEuclideanContext<F>& ctx, const Vec<F>& x, const Vec<F>& y) {
  return -ctx.s * ((x[0] - x[3]) * (y[1] + y[2]) - (x[1] + x[2]) * (y[0] - y[3]));
}

/// Coefficient a with [x,y]_θ = (a,0,0,a)ᵀ, from expanding the determinant.
template <Scalar F>
F exact_coefficient(const SemiEuclideanContext<F>& ctx, const Vec<F>& x, const Vec<F>& y) {
  const F t = ScalarTraits<F>::from_rational(ctx.theta);
  return closed_form_coefficient(ctx, x, y) - F(2) * t * (x[1] * y[2] - x[2] * y[1]);
}

template <Scalar F>
SemiEuclidean<F> build_semi_euclidean(const Rational& theta) {
  SemiEuclideanContext<F> ctx;
  ctx.theta = theta;
  ctx.s = sqrt_one_plus_square<F>(theta);
  ctx.p = semi_euclidean_p<F>(theta);
  const F t = ScalarTraits<F>::from_rational(theta);
  ctx.r = Vec<F>{-t, ctx.s, -ctx.s, t};

  const auto gl = GlContext<F>::make(alpha_matrix<F>(theta));
  if (!(gl.ad_matrix() == ctx.p))
    throw ValidationError("closed-form P(theta) disagrees with the matrix of Ad_alpha at theta=" + theta.to_string());

  std::vector<std::vector<Vec<F>>> table(4, std::vector<Vec<F>>(4, Vec<F>(4)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) table[i][j] = semi_euclidean_bracket(ctx, Vec<F>::unit(4, i), Vec<F>::unit(4, j));
  return SemiEuclidean<F>{HomAlgebra<F>(std::move(table), ctx.p), std::move(ctx)};
}

// ---------------------------------------------------------------------------
// Pseudo-adjoint ad*_x y = -[x,y]

template <Scalar F>
Mat<F> ad_star(const HomAlgebra<F>& g, const Vec<F>& x) {
  const std::size_t n = g.dim();
  std::vector<Vec<F>> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(-bracket_eval(g, x, Vec<F>::unit(n, j)));
  return Mat<F>::from_columns(cols);
}

template <Scalar F>
std::function<Mat<F>(const Vec<F>&)> pseudo_adjoint(const HomAlgebra<F>& g) {
  return [g](const Vec<F>& x) { return ad_star(g, x); };
}

/// ad*_{[x,y]}∘β = -ad*_{βx}∘ad*_y + ad*_{βy}∘ad*_x on basis pairs.
template <Scalar F>
CheckReport check_pseudo_adjoint_identity(const HomAlgebra<F>& g) {
  if (classify(g).verdict != Verdict::SkewHomLie && !g.is_abelian())
    throw PreconditionError("pseudo-adjoint identity needs a skew-Hom-Lie algebra");
  const std::size_t n = g.dim();
  const Mat<F>& beta = g.twist();
  std::vector<Mat<F>> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = ad_star(g, Vec<F>::unit(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat<F> lhs = ad_star(g, g.bracket(i, j)) * beta;
      const Mat<F> rhs = -(ad_star(g, beta.column(i)) * ad[j]) + ad_star(g, beta.column(j)) * ad[i];
      const Mat<F> diff = lhs - rhs;
      if (!diff.is_zero()) return CheckReport::fail({"pseudo-adjoint-identity", {i, j}, diff.to_string()});
    }
  return CheckReport::pass();
}

/// With β² = -id: ad*_{βx} = Ad_β∘ad*_x and ad*_{[x,y]} = -[ad*_x, ad*_y]_β.
template <Scalar F>
CheckReport check_pseudo_adjoint_morphism(const HomAlgebra<F>& g) {
  const std::size_t n = g.dim();
  const Mat<F>& beta = g.twist();
  if (!(beta * beta == -Mat<F>::identity(n))) throw PreconditionError("pseudo-adjoint morphism needs twist^2 = -id");
  std::vector<Mat<F>> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = ad_star(g, Vec<F>::unit(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    const Mat<F> diff = ad_star(g, beta.column(i)) - beta * ad[i] * beta;
    if (!diff.is_zero()) return CheckReport::fail({"pseudo-adjoint-twist", {i}, diff.to_string()});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat<F> diff = ad_star(g, g.bracket(i, j)) + gl_bracket(beta, ad[i], ad[j]);
      if (!diff.is_zero()) return CheckReport::fail({"pseudo-adjoint-bracket", {i, j}, diff.to_string()});
    }
  return CheckReport::pass();
}

}  // namespace skewhom
