#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewhom/algebra.hpp"
#include "skewhom/cohomology.hpp"
#include "skewhom/constructions.hpp"
#include "skewhom/representation.hpp"
#include "skewhom/se4geometry.hpp"

namespace skewhom::suite {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct SuiteConfig {
  std::vector<Rational> theta_list{Rational(0), Rational(1), Rational(1, 2)};
  std::vector<std::size_t> k_list{1, 2};
  std::vector<unsigned> s_list{0, 1, 2};
  std::uint64_t seed = 0;
  std::size_t sample_count = 200;
  Format format = Format::Text;
  bool timing = false;
  bool mutate_bracket = false;  // test hook: corrupt one se4 structure constant
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

inline std::string detail_of(const CheckReport& r) {
  if (r.witness) return r.witness->to_string();
  return r.note;
}

/// Runs checks in registration order and collects their results.
class Runner {
 public:
  explicit Runner(bool timing) : timing_(timing) {}

  void run(const std::string& name, const std::function<CheckResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = body();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("error: ") + e.what();
    }
    result.name = name;
    if (timing_)
      result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

  void run_report(const std::string& name, const std::function<CheckReport()>& body) {
    run(name, [&] {
      const CheckReport r = body();
      return CheckResult{{}, r.passed, detail_of(r), 0.0};
    });
  }

  SuiteReport take() { return std::move(report_); }

 private:
  bool timing_;
  SuiteReport report_;
};

inline CheckResult expect(bool ok, std::string detail) { return CheckResult{{}, ok, std::move(detail), 0.0}; }

inline CheckResult expect_verdict(const Classification& c, bool ok) {
  std::string detail = "verdict " + std::string(to_string(c.verdict)) + ", twist sign " +
                       std::to_string(c.twist_sign.sign) + (c.regular ? ", regular" : "");
  if (c.witness) detail += "; " + c.witness->to_string();
  return expect(ok, detail);
}

/// Block-diagonal matrix with `blocks` copies of a 2x2 matrix.
template <Scalar F>
Mat<F> block_diagonal(const Mat<F>& block, std::size_t blocks) {
  Mat<F> out(2 * blocks, 2 * blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) out(2 * b + p, 2 * b + q) = block(p, q);
  return out;
}

/// ρ(B) = -B on gl_α(V) with φ = α. Satisfies both representation identities.
template <Scalar F>
Representation<F> negation_representation(const GlContext<F>& ctx) {
  std::vector<Mat<F>> rho;
  for (std::size_t i = 0; i < ctx.dim(); ++i) rho.push_back(-ctx.basis(i));
  return Representation<F>(build_gl_alpha(ctx), std::move(rho), ctx.alpha);
}

inline SuiteReport run_verify(const SuiteConfig& config) {
  using Q = QuadExt;
  if (config.theta_list.empty()) throw PreconditionError("theta list must not be empty");
  if (config.sample_count == 0) throw PreconditionError("sample count must be at least 1");
  Runner runner(config.timing);

  for (const auto& theta : config.theta_list) {
    const std::string tag = "[theta=" + theta.to_string() + "]";

    // R⁴₂
    std::optional<SemiEuclidean<Q>> se;
    runner.run("se4" + tag + " construction", [&] {
      se = build_semi_euclidean<Q>(theta);
      if (config.mutate_bracket)
        se->algebra = se->algebra.with_structure_constant(0, 1, 0, se->algebra.bracket(0, 1)[0] + Q(1));
      const auto& ctx = se->ctx;
      const bool p_involution = ctx.p * ctx.p == Mat<Q>::identity(4);
      const bool r_negated = ctx.p * ctx.r == -ctx.r;
      return expect(p_involution && r_negated, std::string("P^2=id ") + (p_involution ? "yes" : "NO") +
                                                   ", Pr=-r " + (r_negated ? "yes" : "NO"));
    });
    if (!se) continue;
    const auto& g = se->algebra;
    runner.run("se4" + tag + " classify", [&] {
      const auto c = classify(g);
      return expect_verdict(c, c.verdict == Verdict::SkewHomLie);
    });
    runner.run_report("se4" + tag + " V* closure", [&] {
      ClosureOptions opts;
      opts.bracket_samples = config.sample_count;
      opts.member_samples = config.sample_count;
      opts.seed = config.seed;
      return check_vstar_closure<Q>(theta, opts);
    });
    for (unsigned m = 1; m <= 3; ++m)
      runner.run_report("se4" + tag + " power sign law m=" + std::to_string(m),
                        [&] { return check_power_sign_law(g, m); });
    runner.run_report("se4" + tag + " pseudo-adjoint identity", [&] { return check_pseudo_adjoint_identity(g); });
    runner.run("se4" + tag + " nonzero representation search (informational)", [&] {
      SearchOptions opts;
      opts.budget = 500;
      opts.seed = config.seed;
      const auto found = search_representation(g, 2, opts);
      return expect(true, found ? "found one, phi=" + found->phi().to_string() : "none within 500 candidates");
    });

    const Mat<Q> alpha = alpha_matrix<Q>(theta);
    for (const auto& [phi_name, phi] : {std::pair{std::string("id"), Mat<Q>::identity(2)}, std::pair{std::string("alpha"), alpha}})
      for (const auto k : config.k_list)
        for (const auto s : config.s_list)
          runner.run_report("se4" + tag + " d^s d^s = 0 rho=0 phi=" + phi_name + " k=" + std::to_string(k) +
                                " s=" + std::to_string(s),
                            [&] { return check_d_squared(Representation<Q>::zero(g, phi), k, s); });

    // gl(R²)
    const auto gl = GlContext<Q>::make(alpha);
    const auto glg = build_gl_alpha(gl);
    runner.run("gl2" + tag + " classify", [&] {
      const auto c = classify(glg);
      return expect_verdict(c, c.verdict == Verdict::SkewHomLie);
    });
    runner.run("gl2" + tag + " Ad_alpha o Ad_alpha = id", [&] {
      const bool ok = gl.ad_matrix() * gl.ad_matrix() == Mat<Q>::identity(4);
      return expect(ok, ok ? "" : "Ad_alpha^2 != id");
    });
    runner.run("gl2" + tag + " Ad_alpha^2 counterexample", [&] {
      const auto hit = ad_alpha_squared_counterexample(gl);
      if (!hit) return expect(false, "no basis triple with nonzero Hom-Jacobi residual (full scan)");
      return expect(true, "triple (" + std::to_string(hit->triple[0]) + "," + std::to_string(hit->triple[1]) + "," +
                              std::to_string(hit->triple[2]) + ") residual " + hit->residual.to_string());
    });
    runner.run("gl4" + tag + " Ad_alpha^2 counterexample", [&] {
      const auto hit = ad_alpha_squared_counterexample(GlContext<Q>::make(block_diagonal(alpha, 2)));
      if (!hit) return expect(false, "no basis triple with nonzero Hom-Jacobi residual (full scan)");
      return expect(true, "triple (" + std::to_string(hit->triple[0]) + "," + std::to_string(hit->triple[1]) + "," +
                              std::to_string(hit->triple[2]) + ") residual " + hit->residual.to_string());
    });
    runner.run_report("gl2" + tag + " pseudo-adjoint identity", [&] { return check_pseudo_adjoint_identity(glg); });
    const auto neg = negation_representation(gl);
    runner.run("gl2" + tag + " representation/morphism equivalence rho=-id", [&] {
      const auto eq = theorem_equivalence(neg);
      return expect(eq.representation.passed && eq.morphism.passed,
                    std::string("representation ") + (eq.representation.passed ? "pass" : "fail") + ", morphism " +
                        (eq.morphism.passed ? "pass" : "fail"));
    });
    for (const auto k : config.k_list)
      for (const auto s : config.s_list) {
        const std::string ks = " k=" + std::to_string(k) + " s=" + std::to_string(s);
        runner.run_report("gl2" + tag + " d^s d^s = 0 rho=0 phi=alpha" + ks,
                          [&] { return check_d_squared(Representation<Q>::zero(glg, alpha), k, s); });
        runner.run_report("gl2" + tag + " d^s d^s = 0 rho=-id phi=alpha" + ks,
                          [&] { return check_d_squared(neg, k, s); });
      }
  }

  // R³ with a twisted cross product
  using R = Rational;
  const std::vector<std::pair<std::string, std::pair<Mat<R>, bool>>> r3_cases{
      {"A=diag(1,1,-1)", {Mat<R>{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, true}},
      {"A=id", {Mat<R>::identity(3), false}},
      {"A=rot90(e3)", {Mat<R>{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, false}},
  };
  for (const auto& [name, c] : r3_cases) {
    const auto& [a, skew] = c;
    runner.run("r3 " + name + (skew ? " skew-Hom-Lie" : " Hom-Lie"), [&] {
      const auto cls = classify(build_r3_cross(a));
      return expect_verdict(cls, skew ? cls.verdict == Verdict::SkewHomLie : cls.is_hom_lie());
    });
  }
  return runner.take();
}

// ---------------------------------------------------------------------------
// Emission

inline json to_json(const SuiteReport& report, bool timing) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (timing) j["millis"] = c.millis;
    checks.push_back(std::move(j));
  }
  return json{{"passed", report.all_passed()}, {"failures", report.failures()}, {"checks", checks}};
}

inline SuiteReport from_json(const json& j) {
  SuiteReport report;
  for (const auto& c : j.at("checks"))
    report.checks.push_back(CheckResult{c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                                        c.at("detail").get<std::string>(), c.value("millis", 0.0)});
  return report;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string emit(const SuiteReport& report, Format format, bool timing) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << to_json(report, timing).dump(2) << "\n";
      break;
    case Format::Csv:
      os << "name,passed,detail" << (timing ? ",millis" : "") << "\n";
      for (const auto& c : report.checks) {
        os << csv_field(c.name) << "," << (c.passed ? "true" : "false") << "," << csv_field(c.detail);
        if (timing) os << "," << c.millis;
        os << "\n";
      }
      break;
    case Format::Text:
      for (const auto& c : report.checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  -- " << c.detail;
        if (timing) os << "  (" << c.millis << " ms)";
        os << "\n";
      }
      os << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Null-space membership table

/// CSV rows: θ, z, ⟨z,z⟩, z₁z₂-z₃z₄, Pz, causal type, z ∈ V*, Pz ∈ V*.
/// Alternates generated V* members with random integer vectors.
inline std::string nullspace_csv(const Rational& theta, std::size_t samples, std::uint64_t seed) {
  using Q = QuadExt;
  const auto se = build_semi_euclidean<Q>(theta);
  const auto& ctx = se.ctx;
  std::ostringstream os;
  os << "theta,z,inner,cross,Pz,causal,z_in_vstar,Pz_in_vstar\n";
  auto row = [&](const Vec<Q>& z) {
    const auto pz = ctx.p * z;
    os << theta.to_string() << "," << csv_field(z.to_string()) << "," << csv_field(to_string(pseudo_inner(z, z))) << ","
       << csv_field(to_string(z[0] * z[1] - z[2] * z[3])) << "," << csv_field(pz.to_string()) << ","
       << to_string(causal_type(z)) << "," << (in_v_star(z).member() ? "true" : "false") << ","
       << (in_v_star(pz).member() ? "true" : "false") << "\n";
  };
  row(ctx.r);
  VStarGenerator<Q> gen(ctx.r, seed);
  std::mt19937_64 rng(seed + 1);
  for (std::size_t i = 0; i < samples; ++i) row(i % 2 == 0 ? gen.next() : random_small_vector<Q>(rng));
  return os.str();
}

}  // namespace skewhom::suite
