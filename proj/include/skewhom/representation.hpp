#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "skewhom/algebra.hpp"
#include "skewhom/constructions.hpp"

namespace skewhom {

/// A linear map ρ: g → gl(V) together with the companion map φ on V.
template <Scalar F>
class Representation {
 public:
  Representation(HomAlgebra<F> g, std::vector<Mat<F>> rho, Mat<F> phi)
      : g_(std::move(g)), rho_(std::move(rho)), phi_(std::move(phi)) {
    if (!phi_.is_square()) throw ValidationError("phi must be square");
    if (rho_.size() != g_.dim())
      throw ValidationError("representation needs one matrix per basis element (" + std::to_string(g_.dim()) + ")");
    for (const auto& r : rho_)
      if (r.rows() != phi_.rows() || r.cols() != phi_.rows()) throw ValidationError("rho matrices must be m x m");
    if (is_zero(det(phi_))) throw SingularMatrix("phi is not invertible");
  }

  static Representation zero(HomAlgebra<F> g, Mat<F> phi) {
    const std::size_t m = phi.rows();
    const std::size_t n = g.dim();
    return Representation(std::move(g), std::vector<Mat<F>>(n, Mat<F>(m, m)), std::move(phi));
  }

  const HomAlgebra<F>& algebra() const { return g_; }
  std::size_t dim() const { return phi_.rows(); }
  const std::vector<Mat<F>>& rho() const { return rho_; }
  const Mat<F>& rho(std::size_t i) const { return rho_[i]; }
  const Mat<F>& phi() const { return phi_; }

  /// The same representation with ρ(e_i)(p,q) replaced.
  Representation with_rho_entry(std::size_t i, std::size_t p, std::size_t q, const F& value) const {
    Representation out = *this;
    out.rho_[i](p, q) = value;
    return out;
  }

  /// ρ as an (m²)×n matrix into gl(V) in the row-major matrix-unit basis.
  Mat<F> as_linear_map() const {
    std::vector<Vec<F>> cols;
    for (const auto& r : rho_) cols.push_back(r.flatten());
    return Mat<F>::from_columns(cols);
  }

 private:
  HomAlgebra<F> g_;
  std::vector<Mat<F>> rho_;
  Mat<F> phi_;
};

template <Scalar F>
Mat<F> rho_eval(const Representation<F>& rep, const Vec<F>& x) {
  if (x.size() != rep.algebra().dim()) throw DimensionMismatch("rho_eval: argument length differs from dim");
  Mat<F> out(rep.dim(), rep.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out += x[i] * rep.rho(i);
  return out;
}

/// ρ(βx)∘φ = -φ∘ρ(x) and ρ([x,y])∘φ = ρ(βx)∘ρ(y) - ρ(βy)∘ρ(x) on the basis.
template <Scalar F>
CheckReport check_representation(const Representation<F>& rep) {
  const auto& g = rep.algebra();
  const std::size_t n = g.dim();
  const Mat<F>& phi = rep.phi();
  std::vector<Mat<F>> rho_beta(n);
  for (std::size_t i = 0; i < n; ++i) rho_beta[i] = rho_eval(rep, g.twist().column(i));
  for (std::size_t i = 0; i < n; ++i) {
    const Mat<F> diff = rho_beta[i] * phi + phi * rep.rho(i);
    if (!diff.is_zero()) return CheckReport::fail({"rep-twist", {i}, diff.to_string()});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat<F> diff =
          rho_eval(rep, g.bracket(i, j)) * phi - (rho_beta[i] * rep.rho(j) - rho_beta[j] * rep.rho(i));
      if (!diff.is_zero()) return CheckReport::fail({"rep-bracket", {i, j}, diff.to_string()});
    }
  return CheckReport::pass();
}

struct EquivalenceResult {
  CheckReport representation;
  CheckReport morphism;

  bool agree() const { return representation.passed == morphism.passed; }
};

/// Runs the representation check and the morphism check into
/// (gl(V), [·,·]_φ, Ad_φ) with sign -1. Needs φ² = -id.
template <Scalar F>
EquivalenceResult theorem_equivalence(const Representation<F>& rep) {
  const auto ctx = GlContext<F>::make(rep.phi());  // throws PreconditionError unless φ² = -id
  const HomAlgebra<F> target = build_gl_alpha(ctx);
  return EquivalenceResult{check_representation(rep), check_morphism(rep.as_linear_map(), rep.algebra(), target, -1)};
}

struct SearchOptions {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  bool nonzero = true;
  double density = 0.3;  // chance that a candidate entry is nonzero
};

/// Randomized search for a representation on an m-dimensional space.
/// Candidates have entries in {-1, 0, 1}; φ cycles through α(θ)-block
/// matrices (m even) or ±1 diagonals (m odd). Deterministic for a given seed.
template <Scalar F>
std::optional<Representation<F>> search_representation(const HomAlgebra<F>& g, std::size_t m,
                                                        const SearchOptions& options = {}) {
  if (m == 0) throw PreconditionError("representation dimension must be positive");
  std::vector<Mat<F>> phis;
  if (m % 2 == 0) {
    for (const Rational& theta : {Rational(0), Rational(1), Rational(3, 4)}) {
      Mat<F> a;
      try {
        a = alpha_matrix<F>(theta);
      } catch (const DomainError&) {
        continue;  // √(1+θ²) not representable in this backend
      }
      Mat<F> phi(m, m);
      for (std::size_t b = 0; b < m; b += 2)
        for (std::size_t p = 0; p < 2; ++p)
          for (std::size_t q = 0; q < 2; ++q) phi(b + p, b + q) = a(p, q);
      phis.push_back(std::move(phi));
    }
  }
  phis.push_back(Mat<F>::identity(m));
  phis.push_back(-Mat<F>::identity(m));

  const std::size_t n = g.dim();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  for (std::size_t attempt = 0; attempt < options.budget; ++attempt) {
    const Mat<F>& phi = phis[attempt % phis.size()];
    std::vector<Mat<F>> rho(n, Mat<F>(m, m));
    bool all_zero = true;
    for (auto& r : rho)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
          if (coin(rng) < options.density) {
            r(p, q) = sign(rng) ? F(1) : F(-1);
            all_zero = false;
          }
    if (options.nonzero && all_zero) continue;
    Representation<F> candidate(g, std::move(rho), phi);
    if (check_representation(candidate).passed) return candidate;
  }
  return std::nullopt;
}

}  // namespace skewhom
