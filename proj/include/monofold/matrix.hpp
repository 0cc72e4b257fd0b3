#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "monofold/errors.hpp"

namespace monofold {

/// Column vector with a fixed dimension. Two scalar kinds are used
/// throughout the library: double (float64) and std::int64_t (exact
/// integer). The kinds never mix implicitly; convert with to_double().
template <class T>
using Vector = std::vector<T>;

/// Dense square matrix, row-major storage.
template <class T>
class Matrix {
  static_assert(std::is_arithmetic_v<T>, "scalar kind must be arithmetic");

 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, T{}) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix diagonal(const Vector<T>& entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  /// Builds a matrix from a row list; every row must have as many
  /// entries as there are rows.
  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Matrix m(rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != rows.size())
        throw DimensionMismatch("from_rows: matrix must be square");
      std::size_t c = 0;
      for (const T& v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  }

  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  Vector<T> row(std::size_t r) const {
    return Vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_));
  }

  Vector<T> column(std::size_t c) const {
    Vector<T> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("mat_mul: operand dimensions differ");
  const std::size_t n = a.dim();
  Matrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class T>
Vector<T> mat_vec(const Matrix<T>& m, const Vector<T>& x) {
  if (m.dim() != x.size())
    throw DimensionMismatch("mat_vec: matrix and vector dimensions differ");
  const std::size_t n = m.dim();
  Vector<T> out(n, T{});
  for (std::size_t i = 0; i < n; ++i) {
    T acc{};
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

template <class T>
Vector<T> vec_add(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vec_add: vector dimensions differ");
  Vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Matrix<double> to_double(const Matrix<std::int64_t>& m) {
  Matrix<double> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      out(r, c) = static_cast<double>(m(r, c));
  return out;
}

inline Vector<double> to_double(const Vector<std::int64_t>& v) {
  return Vector<double>(v.begin(), v.end());
}

namespace detail {

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrix
/// when |det| falls below the fixed threshold.
inline Matrix<double> invert_float(const Matrix<double>& m) {
  constexpr double kSingularDet = 1e-12;
  const std::size_t n = m.dim();
  if (n == 0) throw InvalidArgument("inverse: empty matrix");
  Matrix<double> a = m;
  Matrix<double> inv = Matrix<double>::identity(n);
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
      det = -det;
    }
    const double p = a(col, col);
    det *= p;
    if (std::abs(det) < kSingularDet)
      throw SingularMatrix("inverse: matrix is singular (|det| < 1e-12)");
    const double scale = 1.0 / p;
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Matrix inverse. The integer kind computes a float inverse, rounds
/// it, and verifies the product exactly; matrices without an exact
/// integer inverse are rejected rather than silently converted.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if constexpr (std::is_integral_v<T>) {
    const Matrix<double> approx = detail::invert_float(to_double(m));
    Matrix<T> rounded(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        rounded(r, c) = static_cast<T>(std::llround(approx(r, c)));
    if (mat_mul(m, rounded) != Matrix<T>::identity(m.dim()))
      throw SingularMatrix("inverse: no exact integer inverse");
    return rounded;
  } else {
    return detail::invert_float(m);
  }
}

/// m^p with m^0 = identity. Negative exponents invert the base first
/// and then multiply repeatedly.
template <class T>
Matrix<T> mat_pow(const Matrix<T>& m, long long p) {
  if (m.dim() == 0) throw InvalidArgument("mat_pow: empty matrix");
  if (p == 0) return Matrix<T>::identity(m.dim());
  if (p > 0) {
    Matrix<T> result = Matrix<T>::identity(m.dim());
    Matrix<T> base = m;
    unsigned long long e = static_cast<unsigned long long>(p);
    while (e > 0) {
      if (e & 1ULL) result = mat_mul(result, base);
      e >>= 1ULL;
      if (e > 0) base = mat_mul(base, base);
    }
    return result;
  }
  const Matrix<T> inv = inverse(m);
  Matrix<T> result = Matrix<T>::identity(m.dim());
  for (long long i = 0; i < -p; ++i) result = mat_mul(result, inv);
  return result;
}

/// Assembles diag(blocks[0], ..., blocks[k-1]); off-block entries are
/// exact zeros.
template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
  if (blocks.empty()) throw InvalidArgument("block_diag: empty block list");
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.dim();
  Matrix<T> out(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c)
        out(offset + r, offset + c) = b(r, c);
    offset += b.dim();
  }
  return out;
}

/// 2x2 rotation by `angle` radians.
inline Matrix<double> rotation_block(double angle) {
  Matrix<double> m(2);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return m;
}

/// Bijection on [0, n). image[i] names the source index that lands in
/// slot i, i.e. (P x)[i] = x[image[i]].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
      if (v >= image_.size() || seen[v])
        throw InvalidArgument("Permutation: image is not a bijection on [0, n)");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Matrix form of a permutation: row i has its single 1 at column
/// image[i], so mat_vec(perm_to_matrix(p), x) == permute(p, x).
template <class T>
Matrix<T> perm_to_matrix(const Permutation& p) {
  Matrix<T> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = T{1};
  return m;
}

template <class T>
Vector<T> permute(const Permutation& p, const Vector<T>& x) {
  if (p.size() != x.size())
    throw DimensionMismatch("apply: permutation and vector sizes differ");
  Vector<T> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[p[i]];
  return out;
}

template <class T>
double max_abs_diff(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("max_abs_diff: vector dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
    if (d > worst) worst = d;
  }
  return worst;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("max_abs_diff: matrix dimensions differ");
  return max_abs_diff(a.data(), b.data());
}

/// Entrywise comparison. The integer kind demands exact equality and
/// ignores the tolerance.
template <class T>
bool approx_eq(const Vector<T>& a, const Vector<T>& b, double tol) {
  if (a.size() != b.size())
    throw DimensionMismatch("approx_eq: vector dimensions differ");
  if constexpr (std::is_integral_v<T>) {
    (void)tol;
    return a == b;
  } else {
    return max_abs_diff(a, b) <= tol;
  }
}

template <class T>
bool approx_eq(const Matrix<T>& a, const Matrix<T>& b, double tol) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("approx_eq: matrix dimensions differ");
  return approx_eq(a.data(), b.data(), tol);
}

}  // namespace monofold
