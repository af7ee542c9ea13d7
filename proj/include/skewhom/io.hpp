#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "skewhom/algebra.hpp"
#include "skewhom/cohomology.hpp"
#include "skewhom/constructions.hpp"
#include "skewhom/representation.hpp"

namespace skewhom::io {

using nlohmann::json;

enum class BackendKind { Rational, Quadratic, Float };

/// Which scalar ring a file's numbers live in. For the quadratic kind the
/// discriminant is 1 + θ².
struct BackendSpec {
  BackendKind kind = BackendKind::Rational;
  Rational theta;
  double tol = kDefaultTolerance;

  Rational discriminant() const { return Rational(1) + theta * theta; }

  json to_json() const {
    switch (kind) {
      case BackendKind::Rational: return json{{"kind", "rational"}};
      case BackendKind::Quadratic: return json{{"kind", "quadratic"}, {"theta", theta.to_string()}};
      case BackendKind::Float: return json{{"kind", "float"}, {"tol", tol}};
    }
    return {};
  }

  friend bool operator==(const BackendSpec&, const BackendSpec&) = default;
};

inline std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

/// 1-based line numbers of the elements of the array stored under `key` in
/// the top-level object. Best effort; empty when the key is not found.
inline std::vector<std::size_t> element_lines(const std::string& text, const std::string& key) {
  std::vector<std::size_t> lines;
  int depth = 0;
  std::size_t line = 1;
  bool in_target = false;
  bool expect_element = false;
  std::string last_key;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') { ++line; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (in_target && depth == 2 && expect_element && c != ']') {
      lines.push_back(line);
      expect_element = false;
    }
    if (c == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        else s += text[i];
      }
      if (depth == 1) last_key = s;
      continue;
    }
    if (c == '{' || c == '[') {
      ++depth;
      if (depth == 2 && c == '[' && last_key == key) {
        in_target = true;
        expect_element = true;
      }
    } else if (c == '}' || c == ']') {
      --depth;
      if (depth == 1 && in_target) return lines;
    } else if (c == ',' && in_target && depth == 2) {
      expect_element = true;
    }
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Scalars

template <Scalar F>
F scalar_from_json(const json& j, const BackendSpec& spec);

template <>
inline Rational scalar_from_json<Rational>(const json& j, const BackendSpec&) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational (\"p/q\" or integer), got " + j.dump());
}

template <>
inline QuadExt scalar_from_json<QuadExt>(const json& j, const BackendSpec& spec) {
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b")) throw DomainError("quadratic scalar needs \"a\" and \"b\": " + j.dump());
    const Rational a = scalar_from_json<Rational>(j.at("a"), spec);
    const Rational b = scalar_from_json<Rational>(j.at("b"), spec);
    return QuadExt(a) + QuadExt(b) * QuadExt::sqrt_of(spec.discriminant());
  }
  return QuadExt(scalar_from_json<Rational>(j, spec));
}

template <>
inline Approx scalar_from_json<Approx>(const json& j, const BackendSpec& spec) {
  if (j.is_number()) return Approx(j.get<double>(), spec.tol);
  if (j.is_string()) return Approx(Rational::parse(j.get<std::string>()).to_double(), spec.tol);
  throw DomainError("expected a number, got " + j.dump());
}

inline json scalar_to_json(const Rational& x, const BackendSpec&) { return x.to_string(); }
inline json scalar_to_json(const Approx& x, const BackendSpec&) { return x.value(); }
inline json scalar_to_json(const QuadExt& x, const BackendSpec& spec) {
  if (x.b().is_zero()) return x.a().to_string();
  if (spec.kind != BackendKind::Quadratic || !x.discriminant() || *x.discriminant() != spec.discriminant())
    throw BackendMismatch("scalar " + x.to_string() + " does not live in the file's quadratic backend");
  return json{{"a", x.a().to_string()}, {"b", x.b().to_string()}};
}

template <Scalar F>
Vec<F> vec_from_json(const json& j, const BackendSpec& spec) {
  if (!j.is_array()) throw DomainError("expected an array of scalars, got " + j.dump());
  Vec<F> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json<F>(j[i], spec);
  return v;
}

template <Scalar F>
json vec_to_json(const Vec<F>& v, const BackendSpec& spec) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x, spec));
  return out;
}

template <Scalar F>
Mat<F> mat_from_json(const json& j, const BackendSpec& spec) {
  if (!j.is_array() || j.empty()) throw DomainError("expected a nonempty row-major nested array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat<F> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw DomainError("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json<F>(j[i][c], spec);
  }
  return m;
}

template <Scalar F>
json mat_to_json(const Mat<F>& m, const BackendSpec& spec) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c), spec));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebras

template <Scalar F>
struct BackendFor;
template <> struct BackendFor<Rational> { static constexpr BackendKind kind = BackendKind::Rational; };
template <> struct BackendFor<QuadExt> { static constexpr BackendKind kind = BackendKind::Quadratic; };
template <> struct BackendFor<Approx> { static constexpr BackendKind kind = BackendKind::Float; };

using AlgebraVariant = std::variant<HomAlgebra<Rational>, HomAlgebra<QuadExt>, HomAlgebra<Approx>>;

struct AnyAlgebra {
  BackendSpec spec;
  AlgebraVariant algebra;
  std::string source;
};

template <Scalar F>
json algebra_to_json(const HomAlgebra<F>& g, const BackendSpec& spec) {
  json bracket = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!g.bracket(i, j).is_zero())
        bracket.push_back(json{{"i", i}, {"j", j}, {"value", vec_to_json(g.bracket(i, j), spec)}});
  return json{{"dim", g.dim()}, {"backend", spec.to_json()}, {"bracket", bracket}, {"twist", mat_to_json(g.twist(), spec)}};
}

inline BackendSpec backend_from_json(const json& j, const std::string& source) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError(source, 0, "\"backend\" must be an object with \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  BackendSpec spec;
  if (kind == "rational") {
    spec.kind = BackendKind::Rational;
  } else if (kind == "quadratic") {
    spec.kind = BackendKind::Quadratic;
    if (!j.contains("theta")) throw ParseError(source, 0, "quadratic backend needs \"theta\"");
    spec.theta = scalar_from_json<Rational>(j.at("theta"), spec);
  } else if (kind == "float") {
    spec.kind = BackendKind::Float;
    if (j.contains("tol")) spec.tol = j.at("tol").get<double>();
    if (!(spec.tol > 0)) throw ParseError(source, 0, "float tolerance must be positive");
  } else {
    throw ParseError(source, 0, "unknown backend kind '" + kind + "'");
  }
  return spec;
}

/// Reads the bracket/twist of an already-parsed algebra document in backend F.
/// `lines` are the source lines of the bracket entries, for error messages.
template <Scalar F>
HomAlgebra<F> algebra_from_json(const json& doc, const BackendSpec& spec, const std::string& source,
                                const std::vector<std::size_t>& lines = {}) {
  auto line_of = [&](std::size_t idx) -> std::size_t { return idx < lines.size() ? lines[idx] : 0; };
  if (!doc.contains("dim") || !doc.at("dim").is_number_unsigned())
    throw ParseError(source, 0, "missing or invalid \"dim\"");
  const std::size_t n = doc.at("dim").get<std::size_t>();
  if (!doc.contains("twist")) throw ParseError(source, 0, "missing \"twist\"");
  Mat<F> twist;
  try {
    twist = mat_from_json<F>(doc.at("twist"), spec);
  } catch (const Error& e) {
    throw ParseError(source, 0, std::string("twist: ") + e.what());
  }
  if (twist.rows() != n || twist.cols() != n)
    throw ValidationError(source + ": twist is not " + std::to_string(n) + "x" + std::to_string(n));

  std::vector<std::vector<Vec<F>>> table(n, std::vector<Vec<F>>(n, Vec<F>(n)));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  const json& entries = doc.contains("bracket") ? doc.at("bracket") : json::array();
  if (!entries.is_array()) throw ParseError(source, 0, "\"bracket\" must be an array");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const json& entry = entries[e];
    const std::size_t line = line_of(e);
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("value"))
      throw ParseError(source, line, "bracket entry needs \"i\", \"j\", \"value\"");
    const auto i = entry.at("i").get<std::size_t>();
    const auto j = entry.at("j").get<std::size_t>();
    if (i >= n || j >= n) throw ValidationError(source + ":" + std::to_string(line) + ": bracket index out of range");
    Vec<F> value;
    try {
      value = vec_from_json<F>(entry.at("value"), spec);
    } catch (const Error& ex) {
      throw ParseError(source, line, ex.what());
    }
    if (value.size() != n)
      throw ValidationError(source + ":" + std::to_string(line) + ": bracket value has length " +
                            std::to_string(value.size()) + ", expected " + std::to_string(n));
    const auto where = source + ":" + std::to_string(line) + ": ";
    if (i == j) {
      if (!value.is_zero()) throw ValidationError(where + "[e_i,e_i] must be zero (antisymmetry)");
      continue;
    }
    const Vec<F> mirrored = -value;
    if (seen[i][j] && !(table[i][j] == value))
      throw ValidationError(where + "conflicting duplicate entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (seen[j][i] && !(table[j][i] == mirrored))
      throw ValidationError(where + "antisymmetry violated: bracket[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] != -bracket[" + std::to_string(j) + "][" + std::to_string(i) + "]");
    table[i][j] = value;
    table[j][i] = mirrored;
    seen[i][j] = true;
  }
  return HomAlgebra<F>(std::move(table), std::move(twist));
}

inline json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, line_of_offset(text, e.byte), e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyAlgebra algebra_from_text(const std::string& text, const std::string& source) {
  const json doc = parse_document(text, source);
  if (!doc.is_object()) throw ParseError(source, 1, "algebra file must be a JSON object");
  if (!doc.contains("backend")) throw ParseError(source, 0, "missing \"backend\"");
  const BackendSpec spec = backend_from_json(doc.at("backend"), source);
  const auto lines = element_lines(text, "bracket");
  try {
    switch (spec.kind) {
      case BackendKind::Rational: return {spec, algebra_from_json<Rational>(doc, spec, source, lines), source};
      case BackendKind::Quadratic: return {spec, algebra_from_json<QuadExt>(doc, spec, source, lines), source};
      case BackendKind::Float: return {spec, algebra_from_json<Approx>(doc, spec, source, lines), source};
    }
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  }
  throw ParseError(source, 0, "unreachable backend");
}

template <Scalar F>
std::string write_algebra(const HomAlgebra<F>& g, const BackendSpec& spec) {
  return algebra_to_json(g, spec).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Built-in families: r3:A=<matrix>, gl2:theta=<p/q>, se4:theta=<p/q>

inline bool is_builtin_name(const std::string& name) {
  return name.rfind("r3:", 0) == 0 || name.rfind("gl2:", 0) == 0 || name.rfind("se4:", 0) == 0;
}

inline AnyAlgebra builtin_algebra(const std::string& name) {
  auto value_after = [&](const std::string& prefix) -> std::string {
    if (name.rfind(prefix, 0) != 0) throw ParseError(name, 0, "expected '" + prefix + "...'");
    return name.substr(prefix.size());
  };
  if (name.rfind("r3:", 0) == 0) {
    BackendSpec spec;
    const std::string literal = value_after("r3:A=");
    const json m = parse_document(literal, name);
    return {spec, build_r3_cross(mat_from_json<Rational>(m, spec)), name};
  }
  const bool gl = name.rfind("gl2:", 0) == 0;
  BackendSpec spec;
  spec.kind = BackendKind::Quadratic;
  spec.theta = Rational::parse(value_after(gl ? "gl2:theta=" : "se4:theta="));
  if (gl) return {spec, build_gl_alpha(GlContext<QuadExt>::make(alpha_matrix<QuadExt>(spec.theta))), name};
  return {spec, build_semi_euclidean<QuadExt>(spec.theta).algebra, name};
}

/// A builtin name or a path to an algebra file.
inline AnyAlgebra load_algebra(const std::string& ref, const std::filesystem::path& base_dir = {}) {
  if (is_builtin_name(ref)) return builtin_algebra(ref);
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return algebra_from_text(read_file(p), p.string());
}

// ---------------------------------------------------------------------------
// Representations and cochains

template <Scalar F>
Representation<F> representation_from_json(const json& doc, const HomAlgebra<F>& g, const BackendSpec& spec,
                                           const std::string& source) {
  try {
    const auto m = doc.at("m").get<std::size_t>();
    const Mat<F> phi = mat_from_json<F>(doc.at("phi"), spec);
    std::vector<Mat<F>> rho;
    for (const auto& r : doc.at("rho")) rho.push_back(mat_from_json<F>(r, spec));
    if (phi.rows() != m) throw ValidationError(source + ": phi is not m x m");
    return Representation<F>(g, std::move(rho), phi);
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  }
}

template <Scalar F>
json representation_to_json(const Representation<F>& rep, const std::string& algebra_ref, const BackendSpec& spec) {
  json rho = json::array();
  for (const auto& r : rep.rho()) rho.push_back(mat_to_json(r, spec));
  return json{{"algebra", algebra_ref}, {"m", rep.dim()}, {"rho", rho}, {"phi", mat_to_json(rep.phi(), spec)}};
}

template <Scalar F>
Cochain<F> cochain_from_json(const json& doc, std::size_t n, std::size_t m, const BackendSpec& spec,
                             const std::string& source) {
  try {
    const auto k = doc.at("k").get<std::size_t>();
    auto c = Cochain<F>::zero(n, k, m);
    for (const auto& e : doc.at("entries")) {
      const auto idx = e.at("indices").get<std::vector<std::size_t>>();
      if (idx.size() != k) throw ValidationError(source + ": cochain entry arity differs from k");
      c.set(idx, vec_from_json<F>(e.at("value"), spec));
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  }
}

template <Scalar F>
json cochain_to_json(const Cochain<F>& c, const BackendSpec& spec) {
  json entries = json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c.value(i).is_zero()) entries.push_back(json{{"indices", c.tuples()[i]}, {"value", vec_to_json(c.value(i), spec)}});
  return json{{"k", c.degree()}, {"entries", entries}};
}

}  // namespace skewhom::io
