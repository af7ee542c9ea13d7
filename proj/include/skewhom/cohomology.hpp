#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewhom/algebra.hpp"
#include "skewhom/representation.hpp"

namespace skewhom {

using IndexTuple = std::vector<std::size_t>;

/// Strictly increasing k-tuples from {0..n-1} in lexicographic order.
inline std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t pos = k;
    while (pos > 0 && t[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++t[pos - 1];
    for (std::size_t i = pos; i < k; ++i) t[i] = t[i - 1] + 1;
  }
  return out;
}

/// Alternating k-linear map from an n-dimensional algebra to an m-dimensional
/// space, stored by its values on increasing basis tuples.
template <Scalar F>
class Cochain {
 public:
  Cochain() = default;

  static Cochain zero(std::size_t n, std::size_t k, std::size_t m) {
    Cochain c;
    c.n_ = n;
    c.k_ = k;
    c.m_ = m;
    c.tuples_ = increasing_tuples(n, k);
    c.values_.assign(c.tuples_.size(), Vec<F>(m));
    for (std::size_t i = 0; i < c.tuples_.size(); ++i) c.index_.emplace(c.tuples_[i], i);
    return c;
  }

  /// The cochain sending e_{tuple} to the `component`-th basis vector of V and
  /// every other increasing tuple to zero.
  static Cochain basis(std::size_t n, std::size_t k, std::size_t m, std::size_t tuple_index, std::size_t component) {
    Cochain c = zero(n, k, m);
    c.values_.at(tuple_index) = Vec<F>::unit(m, component);
    return c;
  }

  std::size_t algebra_dim() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t value_dim() const { return m_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<IndexTuple>& tuples() const { return tuples_; }
  const Vec<F>& value(std::size_t idx) const { return values_[idx]; }
  Vec<F>& value(std::size_t idx) { return values_[idx]; }

  const Vec<F>& at(const IndexTuple& t) const { return values_[lookup(t)]; }
  void set(const IndexTuple& t, Vec<F> v) {
    if (v.size() != m_) throw DimensionMismatch("cochain value has wrong length");
    values_[lookup(t)] = std::move(v);
  }

  Cochain& operator+=(const Cochain& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  Cochain& operator*=(const F& c) {
    for (auto& v : values_) v *= c;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator*(const F& c, Cochain a) { return a *= c; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.m_ == b.m_ && a.values_ == b.values_;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::size_t lookup(const IndexTuple& t) const {
    const auto it = index_.find(t);
    if (it == index_.end()) throw DomainError("cochain key is not a strictly increasing in-range tuple");
    return it->second;
  }
  void check_same(const Cochain& o) const {
    if (o.n_ != n_ || o.k_ != k_ || o.m_ != m_) throw DimensionMismatch("cochains of different shape");
  }

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t m_ = 0;
  std::vector<IndexTuple> tuples_;
  std::vector<Vec<F>> values_;
  std::map<IndexTuple, std::size_t> index_;
};

/// η(v₁,…,v_k) = Σ_I det[v_a(I_b)] η(e_I), summing over increasing tuples I.
template <Scalar F>
Vec<F> cochain_eval(const Cochain<F>& eta, const std::vector<Vec<F>>& args) {
  const std::size_t k = eta.degree();
  if (args.size() != k)
    throw DimensionMismatch("cochain of degree " + std::to_string(k) + " given " + std::to_string(args.size()) +
                            " arguments");
  for (const auto& a : args)
    if (a.size() != eta.algebra_dim()) throw DimensionMismatch("cochain argument has wrong length");
  Vec<F> out(eta.value_dim());
  if (k == 0) return eta.value(0);
  for (std::size_t idx = 0; idx < eta.size(); ++idx) {
    const Vec<F>& value = eta.value(idx);
    if (value.is_zero()) continue;
    const IndexTuple& t = eta.tuples()[idx];
    Mat<F> minor(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) minor(a, b) = args[a][t[b]];
    const F d = det(minor);
    if (!is_zero(d)) out += d * value;
  }
  return out;
}

/// Memoized integer powers of an invertible matrix.
template <Scalar F>
class PhiPowers {
 public:
  explicit PhiPowers(Mat<F> phi) : phi_(std::move(phi)) {}

  const Mat<F>& operator()(long exponent) {
    if (auto it = cache_.find(exponent); it != cache_.end()) return it->second;
    Mat<F> value;
    if (exponent == 0) {
      value = Mat<F>::identity(phi_.rows());
    } else if (exponent > 0) {
      value = (*this)(exponent - 1) * phi_;
    } else {
      if (!inverse_) inverse_ = mat_inv(phi_);
      value = (*this)(exponent + 1) * *inverse_;
    }
    return cache_.emplace(exponent, std::move(value)).first->second;
  }

 private:
  Mat<F> phi_;
  std::optional<Mat<F>> inverse_;
  std::map<long, Mat<F>> cache_;
};

/// d^s η(x₁,…,x_{k+1})
///   = Σ_i (-1)^{i+1} φ^{k+1+s} ρ(x_i) φ^{-k-2-s} η(βx₁,…,x̂_i,…,βx_{k+1})
///   + Σ_{i<j} (-1)^{i+j} η([x_i,x_j], βx₁,…,x̂_i,…,x̂_j,…,βx_{k+1})
/// evaluated on increasing basis tuples (indices 1-based in the signs).
template <Scalar F>
Cochain<F> coboundary(const Cochain<F>& eta, const Representation<F>& rep, unsigned s, PhiPowers<F>& powers) {
  const auto& g = rep.algebra();
  const std::size_t n = g.dim();
  const std::size_t k = eta.degree();
  const std::size_t m = rep.dim();
  if (eta.algebra_dim() != n || eta.value_dim() != m) throw DimensionMismatch("cochain does not match representation");
  Cochain<F> out = Cochain<F>::zero(n, k + 1, m);
  if (k + 1 > n) return out;

  const long kk = static_cast<long>(k);
  const long ss = static_cast<long>(s);
  const Mat<F>& left = powers(kk + 1 + ss);
  const Mat<F>& right = powers(-kk - 2 - ss);
  std::vector<Vec<F>> twisted(n);
  for (std::size_t t = 0; t < n; ++t) twisted[t] = g.twist().column(t);

  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const IndexTuple& x = out.tuples()[idx];
    Vec<F> value(m);
    for (std::size_t i = 0; i <= k; ++i) {
      const Mat<F>& r = rep.rho(x[i]);
      if (r.is_zero()) continue;
      std::vector<Vec<F>> args;
      for (std::size_t l = 0; l <= k; ++l)
        if (l != i) args.push_back(twisted[x[l]]);
      const Vec<F> term = left * r * right * cochain_eval(eta, args);
      value += (i % 2 == 0) ? term : -term;
    }
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        const Vec<F>& b = g.bracket(x[i], x[j]);
        if (b.is_zero()) continue;
        std::vector<Vec<F>> args{b};
        for (std::size_t l = 0; l <= k; ++l)
          if (l != i && l != j) args.push_back(twisted[x[l]]);
        const Vec<F> term = cochain_eval(eta, args);
        value += ((i + j) % 2 == 0) ? term : -term;
      }
    out.value(idx) = std::move(value);
  }
  return out;
}

template <Scalar F>
Cochain<F> coboundary(const Cochain<F>& eta, const Representation<F>& rep, unsigned s) {
  PhiPowers<F> powers(rep.phi());
  return coboundary(eta, rep, s, powers);
}

/// One nonzero entry of d^s(d^s(η)) for a basis cochain η.
template <Scalar F>
struct DSquaredEntry {
  IndexTuple source;       // increasing tuple carrying η's value
  std::size_t component;   // η(e_source) = v_component
  IndexTuple target;       // output tuple of degree k+2
  Vec<F> residual;
};

/// Every nonzero entry of d^s∘d^s over the basis cochains of degree k.
template <Scalar F>
std::vector<DSquaredEntry<F>> d_squared_residuals(const Representation<F>& rep, std::size_t k, unsigned s,
                                                  bool stop_at_first = false) {
  std::vector<DSquaredEntry<F>> out;
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.dim();
  if (k + 2 > n) return out;
  PhiPowers<F> powers(rep.phi());
  const auto sources = increasing_tuples(n, k);
  for (std::size_t idx = 0; idx < sources.size(); ++idx)
    for (std::size_t c = 0; c < m; ++c) {
      const auto eta = Cochain<F>::basis(n, k, m, idx, c);
      const auto dd = coboundary(coboundary(eta, rep, s, powers), rep, s, powers);
      for (std::size_t t = 0; t < dd.size(); ++t)
        if (!dd.value(t).is_zero()) {
          out.push_back({sources[idx], c, dd.tuples()[t], dd.value(t)});
          if (stop_at_first) return out;
        }
    }
  return out;
}

/// d^s∘d^s = 0 on the spanning set of basis cochains of degree k.
/// Witness indices: source tuple, then the V-component, then the output tuple.
/// The algebra and φ are the ones carried by `rep`; whether rep is a genuine
/// representation is the caller's business.
template <Scalar F>
CheckReport check_d_squared(const Representation<F>& rep, std::size_t k, unsigned s) {
  if (k + 2 > rep.algebra().dim()) return CheckReport::pass("degenerate: no cochains of degree k+2");
  const auto bad = d_squared_residuals(rep, k, s, true);
  if (bad.empty()) return CheckReport::pass();
  const auto& e = bad.front();
  IndexTuple idx = e.source;
  idx.push_back(e.component);
  idx.insert(idx.end(), e.target.begin(), e.target.end());
  return CheckReport::fail({"d-squared", idx, e.residual.to_string()});
}

}  // namespace skewhom
