#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "skewhom/errors.hpp"

namespace skewhom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(v) {}
  Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroDivisor("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "p", "-p", "p/q" (optional surrounding spaces).
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    auto parse_int = [&](std::string_view s) -> BigInt {
      s = trim(s);
      std::string_view digits = s;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }))
        throw DomainError("not a rational literal: '" + std::string(text) + "'");
      BigInt out(std::string(s.front() == '+' ? s.substr(1) : s));
      return out;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }
  double to_double() const { return value_.convert_to<double>(); }

  std::string to_string() const {
    std::string out = numerator().str();
    if (denominator() != 1) out += "/" + denominator().str();
    return out;
  }

  Rational inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of rational zero");
    Rational out;
    out.value_ = 1 / value_;
    return out;
  }

  Rational operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
  }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivisor("rational division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

/// Nonnegative rational square root when both numerator and denominator are
/// perfect squares.
inline std::optional<Rational> rational_is_square(const Rational& q) {
  if (q.sign() < 0) throw DomainError("square root of negative rational " + q.to_string());
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

/// Element a + b·s of Q[s]/(s² - d).
///
/// Elements with b = 0 may omit the discriminant; they embed into every
/// extension. Combining two elements that both carry a discriminant requires
/// the discriminants to agree.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int a) : a_(a) {}
  QuadExt(Rational a) : a_(std::move(a)) {}
  QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  /// s with s² = d, or the rational root when d is a perfect square.
  static QuadExt sqrt_of(const Rational& d) {
    if (auto root = rational_is_square(d)) return QuadExt(*root);
    return QuadExt(Rational(0), Rational(1), d);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const std::optional<Rational>& discriminant() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// a² - b²d.
  Rational norm() const {
    if (b_.is_zero()) return a_ * a_;
    return a_ * a_ - b_ * b_ * *d_;
  }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

  QuadExt inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw ZeroDivisor("quadratic element " + to_string() + " has zero norm");
    const Rational inv = n.inverse();
    return QuadExt(a_ * inv, -b_ * inv, d_);
  }

  /// Sign of the real number a + b·√d. Requires d > 0 when b ≠ 0.
  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (d_->sign() <= 0) throw DomainError("ordering needs a positive discriminant");
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a² with b²d
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * *d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  double to_double() const {
    if (b_.is_zero()) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(d_->to_double());
  }

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out;
    if (!a_.is_zero()) out = a_.to_string() + (b_.sign() < 0 ? " - " : " + ");
    else if (b_.sign() < 0) out = "-";
    const Rational mag = b_.sign() < 0 ? -b_ : b_;
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "sqrt(" + d_->to_string() + ")";
    return out;
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o) {
    d_ = merge(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = merge(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    d_ = merge(d_, o.d_);
    Rational a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * *d_;
    Rational b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    merge(x.d_, y.d_);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  QuadExt(Rational a, Rational b, std::optional<Rational> d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  static std::optional<Rational> merge(const std::optional<Rational>& x, const std::optional<Rational>& y) {
    if (!x) return y;
    if (!y) return x;
    if (*x != *y)
      throw BackendMismatch("discriminants differ: " + x->to_string() + " vs " + y->to_string());
    return x;
  }

  Rational a_;
  Rational b_;
  std::optional<Rational> d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

inline constexpr double kDefaultTolerance = 1e-9;

/// Floating-point scalar; equality and zero tests use an absolute tolerance.
class Approx {
 public:
  Approx() = default;
  Approx(int v) : value_(v) {}
  Approx(double v, double tol = kDefaultTolerance) : value_(v), tol_(tol) {
    if (!(tol > 0)) throw DomainError("float tolerance must be positive");
  }

  double value() const { return value_; }
  double tolerance() const { return tol_; }

  bool is_zero() const { return std::abs(value_) <= tol_; }
  int sign() const { return is_zero() ? 0 : (value_ < 0 ? -1 : 1); }
  double to_double() const { return value_; }

  Approx inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of float within tolerance of zero");
    return Approx(1.0 / value_, tol_);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << std::setprecision(17) << value_;
    return os.str();
  }

  Approx operator-() const { return Approx(-value_, tol_); }
  Approx& operator+=(const Approx& o) { value_ += o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  Approx& operator-=(const Approx& o) { value_ -= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  Approx& operator*=(const Approx& o) { value_ *= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  Approx& operator/=(const Approx& o) { return *this *= o.inverse(); }
  friend Approx operator+(Approx x, const Approx& y) { return x += y; }
  friend Approx operator-(Approx x, const Approx& y) { return x -= y; }
  friend Approx operator*(Approx x, const Approx& y) { return x *= y; }
  friend Approx operator/(Approx x, const Approx& y) { return x /= y; }
  friend bool operator==(const Approx& x, const Approx& y) { return (x - y).is_zero(); }

 private:
  double value_ = 0.0;
  double tol_ = kDefaultTolerance;
};

inline std::ostream& operator<<(std::ostream& os, const Approx& x) { return os << x.to_string(); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool is_zero(const Approx& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const QuadExt& x) { return x.to_string(); }
inline std::string to_string(const Approx& x) { return x.to_string(); }

/// quad_mul / quad_inv as free functions.
inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
inline QuadExt quad_inv(const QuadExt& x) { return x.inverse(); }

/// Per-backend hooks that generic code needs beyond ring arithmetic.
template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr std::string_view name = "rational";
  static Rational from_rational(const Rational& q) { return q; }
  static Rational sqrt(const Rational& q) {
    if (auto root = rational_is_square(q)) return *root;
    throw DomainError("sqrt(" + q.to_string() + ") is irrational; use the quadratic backend");
  }
};

template <>
struct ScalarTraits<QuadExt> {
  static constexpr std::string_view name = "quadratic";
  static QuadExt from_rational(const Rational& q) { return QuadExt(q); }
  static QuadExt sqrt(const Rational& q) { return QuadExt::sqrt_of(q); }
};

template <>
struct ScalarTraits<Approx> {
  static constexpr std::string_view name = "float";
  static Approx from_rational(const Rational& q) { return Approx(q.to_double()); }
  static Approx sqrt(const Rational& q) {
    if (q.sign() < 0) throw DomainError("square root of negative rational " + q.to_string());
    return Approx(std::sqrt(q.to_double()));
  }
};

template <class F>
concept Scalar = requires(const F& a, const F& b) {
  F(0);
  F(1);
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  { ScalarTraits<F>::from_rational(Rational(1)) } -> std::convertible_to<F>;
};

/// √(1 + θ²) in backend F.
template <Scalar F>
F sqrt_one_plus_square(const Rational& theta) {
  return ScalarTraits<F>::sqrt(Rational(1) + theta * theta);
}

}  // namespace skewhom
