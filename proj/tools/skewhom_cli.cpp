// Command-line front end for the skewhom library.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage/IO/parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewhom/skewhom.hpp"

namespace {

using namespace skewhom;
namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

suite::Format parse_format(const std::string& f) {
  if (f == "text") return suite::Format::Text;
  if (f == "json") return suite::Format::Json;
  if (f == "csv") return suite::Format::Csv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int finish(const suite::SuiteReport& report, suite::Format format, bool timing, const std::string& output) {
  write_output(suite::emit(report, format, timing), output);
  return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_check_algebra(const std::string& ref, suite::Format format) {
  const io::AnyAlgebra any = io::load_algebra(ref);
  suite::Runner runner(false);
  std::visit(
      [&](const auto& g) {
        runner.run("classify", [&] {
          const auto c = classify(g);
          return suite::expect_verdict(c, c.verdict != Verdict::Neither);
        });
        runner.run_report("hom-jacobi", [&] { return check_hom_jacobi(g); });
        runner.run("twist-sign", [&] {
          const auto s = check_twist_sign(g);
          std::string detail = "sign " + std::to_string(s.sign);
          if (s.degenerate) detail += " (abelian: every sign is consistent)";
          if (s.witness) detail += "; " + s.witness->to_string();
          return suite::expect(!s.is_neither(), detail);
        });
      },
      any.algebra);
  return finish(runner.take(), format, false, "");
}

template <Scalar F>
int cohomology_for(const io::AnyAlgebra& any, const HomAlgebra<F>& g, const std::string& rep_path,
                   const std::string& cochain_path, std::size_t k, unsigned s) {
  std::optional<Representation<F>> rep;
  if (rep_path.empty()) {
    rep = Representation<F>::zero(g, Mat<F>::identity(g.dim()));
  } else {
    const auto text = io::read_file(rep_path);
    const auto doc = io::parse_document(text, rep_path);
    rep = io::representation_from_json<F>(doc, g, any.spec, rep_path);
  }
  suite::Runner runner(false);
  if (!cochain_path.empty()) {
    const auto doc = io::parse_document(io::read_file(cochain_path), cochain_path);
    const auto eta = io::cochain_from_json<F>(doc, g.dim(), rep->dim(), any.spec, cochain_path);
    const auto d_eta = coboundary(eta, *rep, s);
    std::cout << "d^" << s << " eta = " << io::cochain_to_json(d_eta, any.spec).dump() << "\n";
    k = eta.degree();
  }
  runner.run("representation", [&] {
    const auto r = check_representation(*rep);
    return suite::expect(r.passed, suite::detail_of(r));
  });
  runner.run_report("d^" + std::to_string(s) + " d^" + std::to_string(s) + " = 0 on C^" + std::to_string(k),
                    [&] { return check_d_squared(*rep, k, s); });
  const auto residuals = d_squared_residuals(*rep, k, s);
  std::cout << "residual table (source tuple, component, target tuple, residual): " << residuals.size()
            << " nonzero entries\n";
  for (const auto& e : residuals) {
    std::cout << "  (";
    for (std::size_t i = 0; i < e.source.size(); ++i) std::cout << (i ? "," : "") << e.source[i];
    std::cout << ") v" << e.component << " -> (";
    for (std::size_t i = 0; i < e.target.size(); ++i) std::cout << (i ? "," : "") << e.target[i];
    std::cout << "): " << e.residual.to_string() << "\n";
  }
  return finish(runner.take(), suite::Format::Text, false, "");
}

int cmd_cohomology(const std::string& ref, const std::string& rep_path, const std::string& cochain_path,
                   std::size_t k, unsigned s) {
  fs::path base;
  std::string algebra_ref = ref;
  if (!rep_path.empty() && ref.empty()) {
    const auto doc = io::parse_document(io::read_file(rep_path), rep_path);
    algebra_ref = doc.at("algebra").get<std::string>();
    base = fs::path(rep_path).parent_path();
  }
  const io::AnyAlgebra any = io::load_algebra(algebra_ref, base);
  return std::visit([&](const auto& g) { return cohomology_for(any, g, rep_path, cochain_path, k, s); },
                    any.algebra);
}

int cmd_counterexample(const std::string& family, const std::string& theta_text) {
  using Q = QuadExt;
  const Rational theta = Rational::parse(theta_text);
  const Mat<Q> alpha = alpha_matrix<Q>(theta);
  GlContext<Q> ctx;
  if (family == "gl2") ctx = GlContext<Q>::make(alpha);
  else if (family == "gl4") ctx = GlContext<Q>::make(suite::block_diagonal(alpha, 2));
  else throw CLI::ValidationError("family", "expected gl2 or gl4");
  std::cout << family << " theta=" << theta << " alpha=" << ctx.alpha.to_string() << "\n";
  const auto hit = ad_alpha_squared_counterexample(ctx);
  if (!hit) {
    std::cout << "FAIL  no basis triple of distinct matrix units has a nonzero Hom-Jacobi residual for Ad_alpha^2\n";
    return kExitFail;
  }
  const auto& [i, j, k] = hit->triple;
  std::cout << "PASS  (e" << i << ", e" << j << ", e" << k << ") residual " << hit->residual.to_string() << "\n";
  const auto direct = ad_alpha_squared_cyclic_sum(ctx.alpha, ctx.basis(i), ctx.basis(j), ctx.basis(k)).flatten();
  std::cout << "      expanded cyclic sum agrees: " << (direct == hit->residual ? "yes" : "NO") << "\n";
  return kExitPass;
}

int cmd_export(const std::string& ref, const std::string& output) {
  const io::AnyAlgebra any = io::load_algebra(ref);
  std::visit([&](const auto& g) { write_output(io::write_algebra(g, any.spec), output); }, any.algebra);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify skew-Hom-Lie algebras with exact arithmetic"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run the full verification suite on the built-in families");
  std::string thetas = "0,1,1/2", ks = "1,2", ss = "0,1,2", format = "text", output;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  bool timing = false, mutate = false;
  verify->add_option("--theta", thetas, "Comma-separated theta values (p/q)");
  verify->add_option("--k", ks, "Comma-separated cochain degrees");
  verify->add_option("--s", ss, "Comma-separated coboundary indices");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--samples", samples, "Random samples per closure check");
  verify->add_option("--format", format, "text, json or csv");
  verify->add_option("-o,--output", output, "Write the report to a file");
  verify->add_flag("--timing", timing, "Include per-check timing");
  verify->add_flag("--mutate-bracket", mutate, "Corrupt one se4 structure constant (harness self-test)")
      ->group("");

  auto* check = app.add_subcommand("check-algebra", "Classify an algebra file or built-in family");
  std::string algebra_ref;
  std::string check_format = "text";
  check->add_option("algebra", algebra_ref, "Algebra file, or r3:A=<matrix>, gl2:theta=<p/q>, se4:theta=<p/q>")
      ->required();
  check->add_option("--format", check_format, "text, json or csv");

  auto* coh = app.add_subcommand("cohomology", "Check d^s o d^s = 0 and print the residual table");
  std::string coh_algebra, rep_path, cochain_path;
  std::size_t k = 1;
  unsigned s = 0;
  coh->add_option("algebra", coh_algebra, "Algebra file or built-in family (optional with --rep)");
  coh->add_option("--rep", rep_path, "Representation file (default: zero representation)");
  coh->add_option("--cochain", cochain_path, "Cochain file; prints d^s of it");
  coh->add_option("--k", k, "Cochain degree");
  coh->add_option("--s", s, "Coboundary index");

  auto* nulls = app.add_subcommand("nullspace", "Emit the V* membership table as CSV");
  std::string null_theta = "0";
  std::size_t null_samples = 20;
  std::uint64_t null_seed = 0;
  nulls->add_option("--theta", null_theta, "theta (p/q)")->required();
  nulls->add_option("--samples", null_samples, "Number of sample rows");
  nulls->add_option("--seed", null_seed, "Random seed");

  auto* counter = app.add_subcommand("counterexample", "Search for an Ad_alpha^2 Hom-Jacobi counterexample");
  std::string family, counter_theta = "0";
  counter->add_option("family", family, "gl2 or gl4")->required();
  counter->add_option("--theta", counter_theta, "theta (p/q) for alpha(theta)");

  auto* exp = app.add_subcommand("export", "Write a built-in family as an algebra file");
  std::string export_ref, export_out;
  exp->add_option("algebra", export_ref, "Built-in family name")->required();
  exp->add_option("-o,--output", export_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      suite::SuiteConfig config;
      config.theta_list.clear();
      for (const auto& t : split_list(thetas)) config.theta_list.push_back(Rational::parse(t));
      config.k_list.clear();
      for (const auto& v : split_list(ks)) config.k_list.push_back(std::stoul(v));
      config.s_list.clear();
      for (const auto& v : split_list(ss)) config.s_list.push_back(static_cast<unsigned>(std::stoul(v)));
      config.seed = seed;
      config.sample_count = samples;
      config.format = parse_format(format);
      config.timing = timing;
      config.mutate_bracket = mutate;
      if (config.theta_list.empty()) {
        std::cerr << "verify: --theta list must not be empty\n";
        return kExitUsage;
      }
      if (config.sample_count == 0) {
        std::cerr << "verify: --samples must be at least 1\n";
        return kExitUsage;
      }
      return finish(suite::run_verify(config), config.format, config.timing, output);
    }
    if (*check) return cmd_check_algebra(algebra_ref, parse_format(check_format));
    if (*coh) {
      if (coh_algebra.empty() && rep_path.empty()) {
        std::cerr << "cohomology: give an algebra or --rep\n";
        return kExitUsage;
      }
      return cmd_cohomology(coh_algebra, rep_path, cochain_path, k, s);
    }
    if (*nulls) {
      std::cout << suite::nullspace_csv(Rational::parse(null_theta), null_samples, null_seed);
      return kExitPass;
    }
    if (*counter) return cmd_counterexample(family, counter_theta);
    if (*exp) return cmd_export(export_ref, export_out);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
