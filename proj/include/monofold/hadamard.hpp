#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monofold/errors.hpp"
#include "monofold/matrix.hpp"
#include "monofold/monoid.hpp"

namespace monofold {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t log2_exact(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

/// Hadamard matrix of order n = 2^m by the doubling recursion
/// H_{2n} = [[H_n, H_n], [H_n, -H_n]], entries exactly +/-1.
inline Matrix<std::int64_t> sylvester(std::size_t n) {
  if (!is_power_of_two(n)) throw InvalidArgument("sylvester: n must be a power of two");
  Matrix<std::int64_t> h(1);
  h(0, 0) = 1;
  for (std::size_t m = 1; m < n; m *= 2) {
    Matrix<std::int64_t> next(2 * m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        const std::int64_t v = h(r, c);
        next(r, c) = v;
        next(r, c + m) = v;
        next(r + m, c) = v;
        next(r + m, c + m) = -v;
      }
    }
    h = std::move(next);
  }
  return h;
}

/// Fold realization of the Hadamard transform H_n x = sum R^{i-1} v_i
/// with R = diag(1, -1, 1, -1, ...). Everything here is exact integer
/// arithmetic; the identities hold bit for bit, not approximately.
struct HadamardPlan {
  std::size_t n = 0;
  Matrix<std::int64_t> sign;      // R, alternating signs; R^2 = I
  Matrix<std::int64_t> hadamard;  // H_n, the direct-product reference
};

inline HadamardPlan build_hadamard_plan(std::size_t n) {
  if (!is_power_of_two(n)) throw InvalidArgument("build_hadamard_plan: n must be a power of two");
  Vector<std::int64_t> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = (i % 2 == 0) ? 1 : -1;
  HadamardPlan plan{n, Matrix<std::int64_t>::diagonal(diag), sylvester(n)};
  if (mat_mul(plan.sign, plan.sign) != Matrix<std::int64_t>::identity(n))
    throw Error("build_hadamard_plan: R^2 != I");
  Matrix<std::int64_t> gram = mat_mul(plan.hadamard, plan.hadamard.transpose());
  Matrix<std::int64_t> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled(i, i) = static_cast<std::int64_t>(n);
  if (gram != scaled) throw Error("build_hadamard_plan: H H^T != n I");
  return plan;
}

namespace detail {

template <class T>
Matrix<T> cast_matrix(const Matrix<std::int64_t>& m) {
  Matrix<T> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = static_cast<T>(m(r, c));
  return out;
}

}  // namespace detail

/// Input vectors v_i = x_i (R^{i-1} h_i), h_i the i-th column of H_n.
/// Since R^2 = I this makes R^{i-1} v_i = x_i h_i, so the fold sums to
/// H_n x column by column. A 2-sparse rule (see build_v_two_sparse)
/// cannot do this for n >= 4: every column of H_n has n nonzero
/// entries, and sums of 2-sparse vectors hit by only {I, R} cannot
/// supply them.
template <class T>
std::vector<Vector<T>> build_v(const std::vector<T>& x, const HadamardPlan& plan) {
  if (x.size() != plan.n) throw DimensionMismatch("build_v: input length differs from plan");
  const std::size_t n = plan.n;
  std::vector<Vector<T>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector<std::int64_t> col = plan.hadamard.column(i);
    if (i % 2 == 1) col = mat_vec(plan.sign, col);  // R^i, using R^2 = I
    Vector<T> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = x[i] * static_cast<T>(col[r]);
    out.push_back(std::move(v));
  }
  return out;
}

/// The 2-sparse embedding rule
///
///   v_i = x_i (e_i + e_{i+n/2})      for 1 <= i <= n/2
///   v_i = x_i (e_{i-n/2} - e_i)      for n/2 <  i <= n
///
/// Folding these does NOT reproduce H_n x (already at n = 2 the second
/// output coordinate comes out as x_1 + x_2 instead of x_1 - x_2).
/// Kept so the failure mode stays pinned by a regression test; not
/// used by any transform path.
template <class T>
std::vector<Vector<T>> build_v_two_sparse(const std::vector<T>& x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n) || n < 2)
    throw InvalidArgument("build_v_two_sparse: length must be a power of two >= 2");
  std::vector<Vector<T>> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Vector<T> v(n, T{});
    if (i <= n / 2) {
      v[i - 1] = x[i - 1];
      v[i - 1 + n / 2] = x[i - 1];
    } else {
      v[i - 1 - n / 2] = x[i - 1];
      v[i - 1] = -x[i - 1];
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Hadamard transform as the shared-operator fold of the embedded
/// inputs. Exact for the integer kind.
template <class T>
std::vector<T> wht_embedding(const std::vector<T>& x, const HadamardPlan& plan,
                             std::size_t* scalar_ops = nullptr) {
  const std::vector<Vector<T>> vs = build_v(x, plan);
  const Matrix<T> op = detail::cast_matrix<T>(plan.sign);
  return fold_shared_operator(op, vs, scalar_ops);
}

template <class T>
std::vector<T> wht_embedding(const std::vector<T>& x) {
  return wht_embedding(x, build_hadamard_plan(x.size()));
}

/// Staged evaluation: log2(n) passes of 2-point butterflies, one per
/// bit axis, least-significant bit first. Each pass applies the
/// two-point construction along its axis, so the whole transform is
/// the n = 2^m axis-wise composition of the base case. O(n log n)
/// scalar operations versus Theta(n^2) for the embedding fold.
template <class T>
std::vector<T> wht_staged(const std::vector<T>& x, std::size_t* scalar_ops = nullptr) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) throw InvalidArgument("wht_staged: length must be a power of two");
  std::vector<T> out = x;
  for (std::size_t h = 1; h < n; h *= 2) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T a = out[j];
        const T b = out[j + h];
        out[j] = a + b;
        out[j + h] = a - b;
        if (scalar_ops) *scalar_ops += 2;
      }
    }
  }
  return out;
}

/// Reference evaluation sylvester(n) * x by direct matrix-vector
/// product; the path the fold results are checked against.
template <class T>
std::vector<T> hadamard_reference(const std::vector<T>& x, const HadamardPlan& plan,
                                  std::size_t* scalar_ops = nullptr) {
  if (x.size() != plan.n) throw DimensionMismatch("hadamard_reference: length differs from plan");
  const Matrix<T> h = detail::cast_matrix<T>(plan.hadamard);
  if (scalar_ops) *scalar_ops += 2 * plan.n * plan.n;
  return mat_vec(h, x);
}

}  // namespace monofold
