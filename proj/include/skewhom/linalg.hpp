#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "skewhom/errors.hpp"
#include "skewhom/scalar.hpp"

namespace skewhom {

template <Scalar F>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : entries_(n, F(0)) {}
  Vec(std::initializer_list<F> init) : entries_(init) {}
  explicit Vec(std::vector<F> entries) : entries_(std::move(entries)) {}

  static Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = F(1);
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  F& operator[](std::size_t i) { return entries_[i]; }
  const F& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<F>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (!skewhom::is_zero(x)) return false;
    return true;
  }

  Vec& operator+=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Vec& operator*=(const F& c) {
    for (auto& x : entries_) x *= c;
    return *this;
  }
  Vec operator-() const {
    Vec out(*this);
    for (auto& x : out.entries_) x = -x;
    return out;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const F& c, Vec v) { return v *= c; }
  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ", ";
      out += skewhom::to_string(entries_[i]);
    }
    return out + ")";
  }

 private:
  void check_same(const Vec& o) const {
    if (o.size() != size())
      throw DimensionMismatch("vector lengths " + std::to_string(size()) + " and " + std::to_string(o.size()));
  }

  std::vector<F> entries_;
};

/// Dense row-major matrix.
template <Scalar F>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Mat(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Mat from_columns(const std::vector<Vec<F>>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DimensionMismatch("columns of unequal length");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> column(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  /// Row-major flattening; the coordinate vector in the matrix-unit basis.
  Vec<F> flatten() const { return Vec<F>(data_); }

  static Mat unflatten(const Vec<F>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("flattened length does not match shape");
    Mat m(rows, cols);
    m.data_ = v.entries();
    return m;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!skewhom::is_zero(x)) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const F& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  Mat operator-() const {
    Mat out(*this);
    for (auto& x : out.data_) x = -x;
    return out;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const F& c, Mat m) { return m *= c; }
  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += skewhom::to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void check_shape(const Mat& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Scalar F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Mat<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <Scalar F>
Mat<F> operator*(const Mat<F>& a, const Mat<F>& b) {
  return mat_mul(a, b);
}

template <Scalar F>
Vec<F> operator*(const Mat<F>& a, const Vec<F>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: inner dimensions differ");
  Vec<F> y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_zero(x[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) y[i] += a(i, j) * x[j];
  }
  return y;
}

/// Non-negative integer power by repeated multiplication.
template <Scalar F>
Mat<F> mat_pow(const Mat<F>& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionMismatch("mat_pow of non-square matrix");
  Mat<F> out = Mat<F>::identity(a.rows());
  for (unsigned e = 0; e < exponent; ++e) out = out * a;
  return out;
}

/// Gaussian elimination taking the first nonzero entry as pivot.
template <Scalar F>
F det(const Mat<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("det of non-square matrix");
  const std::size_t n = a.rows();
  Mat<F> m = a;
  F result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      result = -result;
    }
    result *= m(col, col);
    const F inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return result;
}

template <Scalar F>
Mat<F> mat_inv(const Mat<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("mat_inv of non-square matrix");
  const std::size_t n = a.rows();
  Mat<F> m = a;
  Mat<F> inv = Mat<F>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular (no pivot in column " + std::to_string(col) + ")");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const F p = m(col, col).inverse();  // may throw ZeroDivisor in a degenerate ring
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

/// Ternary product on 4-vectors: the formal determinant of
///
///     | e1  -e2  e3  e4 |
///     |       u         |
///     |       v         |
///     |       w         |
///
/// expanded along the symbolic first row. This is not the Euclidean 4D cross
/// product: the e2 slot carries an extra minus sign.
template <Scalar F>
Vec<F> wedge3(const Vec<F>& u, const Vec<F>& v, const Vec<F>& w) {
  if (u.size() != 4 || v.size() != 4 || w.size() != 4) throw DimensionMismatch("wedge3 needs 4-vectors");
  static constexpr int row_sign[4] = {1, -1, 1, 1};
  Vec<F> out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t c[3];
    for (std::size_t j = 0, t = 0; j < 4; ++j)
      if (j != i) c[t++] = j;
    const F minor = u[c[0]] * (v[c[1]] * w[c[2]] - v[c[2]] * w[c[1]]) -
                    u[c[1]] * (v[c[0]] * w[c[2]] - v[c[2]] * w[c[0]]) +
                    u[c[2]] * (v[c[0]] * w[c[1]] - v[c[1]] * w[c[0]]);
    const int cofactor = (i % 2 == 0) ? 1 : -1;
    out[i] = (row_sign[i] * cofactor == 1) ? minor : -minor;
  }
  return out;
}

/// Euclidean cross product on R³.
template <Scalar F>
Vec<F> cross3(const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != 3 || y.size() != 3) throw DimensionMismatch("cross3 needs 3-vectors");
  return Vec<F>{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

template <Scalar F>
Mat<F> to_backend(const Mat<Rational>& m) {
  Mat<F> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ScalarTraits<F>::from_rational(m(i, j));
  return out;
}

template <Scalar F>
Vec<F> to_backend(const Vec<Rational>& v) {
  Vec<F> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ScalarTraits<F>::from_rational(v[i]);
  return out;
}

}  // namespace skewhom
