#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monofold/errors.hpp"
#include "monofold/hadamard.hpp"
#include "monofold/matrix.hpp"
#include "monofold/monoid.hpp"

namespace monofold {

inline std::uint64_t gray_code(std::uint64_t k) { return k ^ (k >> 1); }

inline std::uint64_t reverse_bits(std::uint64_t v, std::size_t bits) {
  std::uint64_t out = 0;
  for (std::size_t b = 0; b < bits; ++b)
    if (v & (std::uint64_t{1} << b)) out |= std::uint64_t{1} << (bits - 1 - b);
  return out;
}

/// Number of adjacent sign changes along a +/-1 row (its sequency).
inline std::size_t sequency_of_row(const Vector<std::int64_t>& row) {
  std::size_t changes = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 1 && row[i] != -1)
      throw InvalidArgument("sequency_of_row: entries must be +/-1");
    if (i > 0 && row[i] != row[i - 1]) ++changes;
  }
  return changes;
}

/// Permutation P whose row reordering sorts the rows of H_n by
/// increasing sequency: image[k] = bit-reverse(gray-code(k)) over
/// log2(n) bits. The formula is standard but never trusted on its own;
/// build_walsh_plan re-derives the ordering by counting sign changes
/// and the tests compare against brute-force sequency sorting.
inline Permutation sequency_permutation(std::size_t n) {
  if (!is_power_of_two(n))
    throw InvalidArgument("sequency_permutation: n must be a power of two");
  const std::size_t bits = log2_exact(n);
  std::vector<std::size_t> image(n);
  for (std::size_t k = 0; k < n; ++k)
    image[k] = static_cast<std::size_t>(reverse_bits(gray_code(k), bits));
  return Permutation(std::move(image));
}

/// Sequency-ordered Walsh transform, defined as the row reordering
/// W_n = P H_n. The fold realization conjugates the Hadamard fold by
/// the permutation: R' = P R P^-1 and v'_i = P v_i give
///
///   sum R'^{i-1} v'_i = P (sum R^{i-1} v_i) = P H_n x = W_n x
///
/// and walsh_embedding asserts that identity on every call.
struct WalshPlan {
  std::size_t n = 0;
  Permutation perm;               // sequency ordering P
  Matrix<std::int64_t> walsh;     // W = P H
  HadamardPlan hadamard;          // underlying Hadamard fold
  Matrix<std::int64_t> conj_sign; // R' = P R P^-1
};

inline Matrix<std::int64_t> walsh_matrix(std::size_t n) {
  if (!is_power_of_two(n)) throw InvalidArgument("walsh_matrix: n must be a power of two");
  const Permutation perm = sequency_permutation(n);
  const Matrix<std::int64_t> h = sylvester(n);
  Matrix<std::int64_t> w(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) w(r, c) = h(perm[r], c);
  return w;
}

inline WalshPlan build_walsh_plan(std::size_t n) {
  HadamardPlan hp = build_hadamard_plan(n);
  Permutation perm = sequency_permutation(n);
  Matrix<std::int64_t> w = walsh_matrix(n);
  // Validate the formula-built permutation against the sign-change
  // count: row k of W must have sequency exactly k.
  for (std::size_t r = 0; r < n; ++r) {
    if (sequency_of_row(w.row(r)) != r)
      throw Error("build_walsh_plan: rows are not in strict sequency order");
  }
  const Matrix<std::int64_t> p = perm_to_matrix<std::int64_t>(perm);
  Matrix<std::int64_t> conj = mat_mul(mat_mul(p, hp.sign), p.transpose());
  return WalshPlan{n, std::move(perm), std::move(w), std::move(hp), std::move(conj)};
}

/// Walsh transform evaluated as the conjugated fold. Also recomputes
/// P applied to the plain Hadamard fold and demands the two agree
/// (exactly in the integer kind) before returning.
template <class T>
std::vector<T> walsh_embedding(const std::vector<T>& x, const WalshPlan& plan,
                               std::size_t* scalar_ops = nullptr) {
  if (x.size() != plan.n)
    throw DimensionMismatch("walsh_embedding: input length differs from plan");
  const std::vector<Vector<T>> vs = build_v(x, plan.hadamard);
  std::vector<Vector<T>> permuted;
  permuted.reserve(vs.size());
  for (const auto& v : vs) permuted.push_back(permute(plan.perm, v));
  const Matrix<T> conj_op = detail::cast_matrix<T>(plan.conj_sign);
  std::vector<T> result = fold_shared_operator(conj_op, permuted, scalar_ops);

  // Conjugation identity: the fold with (R', v') must equal P applied
  // to the fold with (R, v).
  const Matrix<T> plain_op = detail::cast_matrix<T>(plan.hadamard.sign);
  const Vector<T> expected = permute(plan.perm, fold_shared_operator(plain_op, vs));
  const double tol = std::is_integral_v<T> ? 0.0 : 1e-9;
  if (!approx_eq(result, expected, tol))
    throw Error("walsh_embedding: conjugated fold disagrees with permuted fold");
  return result;
}

template <class T>
std::vector<T> walsh_embedding(const std::vector<T>& x) {
  return walsh_embedding(x, build_walsh_plan(x.size()));
}

/// Reference evaluation W_n * x by direct product.
template <class T>
std::vector<T> walsh_reference(const std::vector<T>& x, const WalshPlan& plan,
                               std::size_t* scalar_ops = nullptr) {
  if (x.size() != plan.n)
    throw DimensionMismatch("walsh_reference: length differs from plan");
  const Matrix<T> w = detail::cast_matrix<T>(plan.walsh);
  if (scalar_ops) *scalar_ops += 2 * plan.n * plan.n;
  return mat_vec(w, x);
}

}  // namespace monofold
