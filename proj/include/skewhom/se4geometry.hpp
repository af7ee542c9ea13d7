#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "skewhom/check.hpp"
#include "skewhom/constructions.hpp"

namespace skewhom {

/// ⟨x,y⟩ = -x₁y₁ - x₂y₂ + x₃y₃ + x₄y₄.
template <Scalar F>
F pseudo_inner(const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != 4 || y.size() != 4) throw DimensionMismatch("pseudo_inner needs 4-vectors");
  return -(x[0] * y[0]) - x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

enum class CausalType { Spacelike, Null, Timelike, Zero };

inline std::string_view to_string(CausalType c) {
  switch (c) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Null: return "null";
    case CausalType::Timelike: return "timelike";
    case CausalType::Zero: return "zero";
  }
  return "?";
}

/// In the float backend |⟨x,x⟩| within tolerance counts as null.
template <Scalar F>
CausalType causal_type(const Vec<F>& x) {
  if (x.is_zero()) return CausalType::Zero;
  const int sign = pseudo_inner(x, x).sign();
  if (sign > 0) return CausalType::Spacelike;
  if (sign < 0) return CausalType::Timelike;
  return CausalType::Null;
}

struct VStarMembership {
  bool in_null_space = false;   // ⟨x,x⟩ = 0
  bool cross_condition = false; // x₁x₂ = x₃x₄

  bool member() const { return in_null_space && cross_condition; }
};

template <Scalar F>
VStarMembership in_v_star(const Vec<F>& x) {
  if (x.size() != 4) throw DimensionMismatch("in_v_star needs a 4-vector");
  return VStarMembership{is_zero(pseudo_inner(x, x)), is_zero(x[0] * x[1] - x[2] * x[3])};
}

/// Random integer vector with entries in [-9, 9].
template <Scalar F>
Vec<F> random_small_vector(std::mt19937_64& rng, std::size_t n = 4) {
  std::uniform_int_distribution<int> dist(-9, 9);
  Vec<F> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = F(dist(rng));
  return v;
}

/// Generates members of V* only: multiples of r, (a,0,0,a), (p,q,p,q),
/// (p,q,q,p), and integer vectors that pass the exact membership test.
template <Scalar F>
class VStarGenerator {
 public:
  VStarGenerator(Vec<F> r, std::uint64_t seed) : r_(std::move(r)), rng_(seed) {}

  Vec<F> next() {
    std::uniform_int_distribution<int> small(-9, 9);
    switch (counter_++ % 5) {
      case 0: return F(small(rng_)) * r_;
      case 1: {
        const F a(small(rng_));
        return Vec<F>{a, F(0), F(0), a};
      }
      case 2: {
        const F p(small(rng_)), q(small(rng_));
        return Vec<F>{p, q, p, q};
      }
      case 3: {
        const F p(small(rng_)), q(small(rng_));
        return Vec<F>{p, q, q, p};
      }
      default:
        for (int attempt = 0; attempt < 100000; ++attempt) {
          auto v = random_small_vector<F>(rng_);
          if (!v.is_zero() && in_v_star(v).member()) return v;
        }
        return Vec<F>{F(1), F(1), F(1), F(1)};
    }
  }

 private:
  Vec<F> r_;
  std::mt19937_64 rng_;
  std::size_t counter_ = 0;
};

struct ClosureOptions {
  std::size_t bracket_samples = 500;
  std::size_t member_samples = 200;
  std::uint64_t seed = 0;
};

/// [x,y]_θ ∈ V* for random x,y, and P z ∈ V* for generated z ∈ V*
/// (including r itself).
template <Scalar F>
CheckReport check_vstar_closure(const Rational& theta, const ClosureOptions& options = {}) {
  const auto se = build_semi_euclidean<F>(theta);
  const auto& ctx = se.ctx;
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.bracket_samples; ++i) {
    const auto x = random_small_vector<F>(rng);
    const auto y = random_small_vector<F>(rng);
    const auto b = semi_euclidean_bracket(ctx, x, y);
    if (!in_v_star(b).member())
      return CheckReport::fail({"bracket-in-vstar", {i}, "x=" + x.to_string() + " y=" + y.to_string() + " [x,y]=" + b.to_string()});
  }
  if (!in_v_star(ctx.r).member() || !in_v_star(ctx.p * ctx.r).member())
    return CheckReport::fail({"r-in-vstar", {}, ctx.r.to_string()});
  VStarGenerator<F> gen(ctx.r, options.seed + 1);
  for (std::size_t i = 0; i < options.member_samples; ++i) {
    const auto z = gen.next();
    const auto pz = ctx.p * z;
    if (!in_v_star(pz).member())
      return CheckReport::fail({"p-preserves-vstar", {i}, "z=" + z.to_string() + " Pz=" + pz.to_string()});
  }
  return CheckReport::pass();
}

}  // namespace skewhom
