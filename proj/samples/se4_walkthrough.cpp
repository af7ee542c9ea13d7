// Builds the semi-Euclidean algebra for a few values of theta and prints the
// pieces: P, r, a bracket value, and the classification.

#include <iostream>

#include "skewhom/skewhom.hpp"

int main() {
  using namespace skewhom;
  using Q = QuadExt;

  for (const Rational theta : {Rational(0), Rational(1), Rational(1, 2)}) {
    const auto se = build_semi_euclidean<Q>(theta);
    std::cout << "theta = " << theta << "\n";
    std::cout << "  P = " << se.ctx.p.to_string() << "\n";
    std::cout << "  r = " << se.ctx.r.to_string() << ", P r = " << (se.ctx.p * se.ctx.r).to_string() << "\n";

    const Vec<Q> x{Q(1), Q(2), Q(-3), Q(4)};
    const Vec<Q> y{Q(-2), Q(5), Q(1), Q(7)};
    const auto b = semi_euclidean_bracket(se.ctx, x, y);
    std::cout << "  [x,y] = " << b.to_string() << " (in V*: " << (in_v_star(b).member() ? "yes" : "no") << ")\n";

    const auto c = classify(se.algebra);
    std::cout << "  verdict: " << to_string(c.verdict) << (c.regular ? " (regular)" : "") << "\n";
  }
  return 0;
}
