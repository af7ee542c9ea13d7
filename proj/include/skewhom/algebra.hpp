#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewhom/check.hpp"
#include "skewhom/errors.hpp"
#include "skewhom/linalg.hpp"

namespace skewhom {

/// Finite-dimensional algebra given by structure constants and a twist map.
///
/// bracket(i, j) is the coordinate vector of [e_i, e_j]. The table is kept
/// full (both triangles) and validated to be antisymmetric on construction.
template <Scalar F>
class HomAlgebra {
 public:
  HomAlgebra() = default;

  HomAlgebra(std::vector<std::vector<Vec<F>>> bracket, Mat<F> twist)
      : n_(twist.rows()), bracket_(std::move(bracket)), twist_(std::move(twist)) {
    validate();
  }

  /// Builds the full table from the entries with i < j; missing pairs are zero.
  static HomAlgebra from_upper(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Vec<F>>& upper,
                               Mat<F> twist) {
    std::vector<std::vector<Vec<F>>> table(n, std::vector<Vec<F>>(n, Vec<F>(n)));
    for (const auto& [ij, value] : upper) {
      const auto [i, j] = ij;
      if (i >= j || j >= n) throw ValidationError("from_upper expects 0 <= i < j < n");
      table[i][j] = value;
      table[j][i] = -value;
    }
    return HomAlgebra(std::move(table), std::move(twist));
  }

  /// Zero bracket with the given twist.
  static HomAlgebra abelian(Mat<F> twist) {
    const std::size_t n = twist.rows();
    return HomAlgebra(std::vector<std::vector<Vec<F>>>(n, std::vector<Vec<F>>(n, Vec<F>(n))), std::move(twist));
  }

  std::size_t dim() const { return n_; }
  const Vec<F>& bracket(std::size_t i, std::size_t j) const { return bracket_[i][j]; }
  const Mat<F>& twist() const { return twist_; }

  /// Copy with [e_i, e_j] coordinate `component` replaced (and [e_j, e_i]
  /// adjusted to keep antisymmetry).
  HomAlgebra with_structure_constant(std::size_t i, std::size_t j, std::size_t component, const F& value) const {
    if (i == j) throw ValidationError("diagonal structure constants are zero");
    HomAlgebra out = *this;
    out.bracket_[i][j][component] = value;
    out.bracket_[j][i][component] = -value;
    return out;
  }

  HomAlgebra with_twist(Mat<F> twist) const { return HomAlgebra(bracket_, std::move(twist)); }

  bool is_abelian() const {
    for (const auto& row : bracket_)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }

 private:
  void validate() const {
    if (!twist_.is_square()) throw ValidationError("twist must be square");
    if (bracket_.size() != n_) throw ValidationError("bracket table has wrong number of rows");
    for (std::size_t i = 0; i < n_; ++i) {
      if (bracket_[i].size() != n_) throw ValidationError("bracket table row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n_; ++j)
        if (bracket_[i][j].size() != n_)
          throw ValidationError("bracket value [" + std::to_string(i) + "," + std::to_string(j) + "] has wrong length");
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if (!(bracket_[i][j] + bracket_[j][i]).is_zero())
          throw ValidationError("bracket not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  std::size_t n_ = 0;
  std::vector<std::vector<Vec<F>>> bracket_;
  Mat<F> twist_;
};

template <Scalar F>
Vec<F> bracket_eval(const HomAlgebra<F>& g, const Vec<F>& x, const Vec<F>& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket_eval: argument length differs from dim");
  Vec<F> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || is_zero(y[j])) continue;
      const auto& b = g.bracket(i, j);
      if (b.is_zero()) continue;
      out += (x[i] * y[j]) * b;
    }
  }
  return out;
}

/// [[y,z],βx] + [[z,x],βy] + [[x,y],βz] for an arbitrary twist β.
template <Scalar F>
Vec<F> hom_jacobi_residual(const HomAlgebra<F>& g, const Mat<F>& twist, const Vec<F>& x, const Vec<F>& y,
                           const Vec<F>& z) {
  return bracket_eval(g, bracket_eval(g, y, z), twist * x) + bracket_eval(g, bracket_eval(g, z, x), twist * y) +
         bracket_eval(g, bracket_eval(g, x, y), twist * z);
}

template <Scalar F>
Vec<F> hom_jacobi_residual(const HomAlgebra<F>& g, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
  return hom_jacobi_residual(g, g.twist(), x, y, z);
}

/// Hom-Jacobi on every ordered basis triple; the witness is the
/// lexicographically first failing triple.
template <Scalar F>
CheckReport check_hom_jacobi(const HomAlgebra<F>& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto r = hom_jacobi_residual(g, Vec<F>::unit(n, i), Vec<F>::unit(n, j), Vec<F>::unit(n, k));
        if (!r.is_zero()) return CheckReport::fail({"hom-jacobi", {i, j, k}, r.to_string()});
      }
  return CheckReport::pass();
}

/// Outcome of matching β[x,y] against ε[βx,βy].
struct TwistSign {
  int sign = 1;            // +1, -1, or 0 when no sign is consistent
  bool degenerate = false; // every basis pair had both sides zero
  std::optional<Witness> witness;

  bool is_neither() const { return sign == 0; }
};

template <Scalar F>
TwistSign check_twist_sign(const HomAlgebra<F>& g) {
  const std::size_t n = g.dim();
  const auto& beta = g.twist();
  bool plus_ok = true;
  bool minus_ok = true;
  bool informative = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec<F> lhs = beta * g.bracket(i, j);
      const Vec<F> rhs = bracket_eval(g, beta.column(i), beta.column(j));
      if (lhs.is_zero() && rhs.is_zero()) continue;
      informative = true;
      const bool plus_was_ok = plus_ok;
      const Vec<F> plus_res = lhs - rhs;
      const Vec<F> minus_res = lhs + rhs;
      plus_ok = plus_ok && plus_res.is_zero();
      minus_ok = minus_ok && minus_res.is_zero();
      if (!plus_ok && !minus_ok) {
        // residual of the last sign still standing before this pair
        const Vec<F>& res = plus_was_ok ? plus_res : minus_res;
        return TwistSign{0, false, Witness{"twist-sign", {i, j}, res.to_string()}};
      }
    }
  if (!informative) return TwistSign{1, true, std::nullopt};
  return TwistSign{plus_ok ? 1 : -1, false, std::nullopt};
}

enum class Verdict { Lie, HomLie, SkewHomLie, Neither };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Lie: return "Lie";
    case Verdict::HomLie: return "HomLie";
    case Verdict::SkewHomLie: return "SkewHomLie";
    case Verdict::Neither: return "Neither";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Neither;
  bool regular = false;
  TwistSign twist_sign;
  std::optional<Witness> witness;

  /// A Lie algebra counts as a Hom-Lie algebra with identity twist.
  bool is_hom_lie() const { return verdict == Verdict::Lie || verdict == Verdict::HomLie; }
};

template <Scalar F>
Classification classify(const HomAlgebra<F>& g) {
  Classification c;
  c.twist_sign = check_twist_sign(g);
  c.regular = !is_zero(det(g.twist()));
  const CheckReport jacobi = check_hom_jacobi(g);
  if (c.twist_sign.is_neither()) {
    c.verdict = Verdict::Neither;
    c.witness = c.twist_sign.witness;
  } else if (!jacobi.passed) {
    c.verdict = Verdict::Neither;
    c.witness = jacobi.witness;
  } else if (c.twist_sign.sign == -1) {
    c.verdict = Verdict::SkewHomLie;
  } else {
    c.verdict = g.twist() == Mat<F>::identity(g.dim()) ? Verdict::Lie : Verdict::HomLie;
  }
  return c;
}

/// βᵐ[e_i,e_j] = (-1)ᵐ [βᵐe_i, βᵐe_j] on all basis pairs.
template <Scalar F>
CheckReport check_power_sign_law(const HomAlgebra<F>& g, unsigned m) {
  if (m == 0) throw PreconditionError("power must be positive");
  if (classify(g).verdict != Verdict::SkewHomLie) throw PreconditionError("power sign law needs a skew-Hom-Lie algebra");
  const std::size_t n = g.dim();
  const Mat<F> power = mat_pow(g.twist(), m);
  const bool odd = m % 2 == 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<F> lhs = power * g.bracket(i, j);
      const Vec<F> rhs = bracket_eval(g, power.column(i), power.column(j));
      const Vec<F> res = odd ? lhs + rhs : lhs - rhs;
      if (!res.is_zero()) return CheckReport::fail({"power-sign-law", {i, j}, res.to_string()});
    }
  return CheckReport::pass(odd ? "sign -1" : "sign +1");
}

/// f: g → h with f[x,y]_g = sign·[fx,fy]_h and f∘β_g = β_h∘f.
template <Scalar F>
CheckReport check_morphism(const Mat<F>& f, const HomAlgebra<F>& g, const HomAlgebra<F>& h, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("morphism sign must be +1 or -1");
  if (f.cols() != g.dim() || f.rows() != h.dim()) throw DimensionMismatch("morphism matrix shape does not match algebras");
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<F> lhs = f * g.bracket(i, j);
      const Vec<F> rhs = bracket_eval(h, f.column(i), f.column(j));
      const Vec<F> res = sign == 1 ? lhs - rhs : lhs + rhs;
      if (!res.is_zero()) return CheckReport::fail({"morphism-bracket", {i, j}, res.to_string()});
    }
  const Mat<F> diff = f * g.twist() - h.twist() * f;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec<F> col = diff.column(j);
    if (!col.is_zero()) return CheckReport::fail({"morphism-twist", {j}, col.to_string()});
  }
  return CheckReport::pass();
}

}  // namespace skewhom
