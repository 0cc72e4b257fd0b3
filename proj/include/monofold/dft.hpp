#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "monofold/errors.hpp"
#include "monofold/matrix.hpp"
#include "monofold/monoid.hpp"

namespace monofold {

using ComplexSpectrum = std::vector<std::complex<double>>;

/// Fold realization of the length-n discrete Fourier transform with
/// the positive-exponent kernel e^{+j 2 pi (i-1) k / n}. The operator
/// is a 2n x 2n block-diagonal matrix of n rotation blocks; block k
/// rotates by 2 pi k / n, i.e. multiplies by e^{j 2 pi k / n} in the
/// real plane. R^n is the identity, so a full-length fold leaves only
/// the vector part, whose k-th block carries (Re X_k, Im X_k).
struct DftPlan {
  std::size_t n = 0;
  Matrix<double> rotation;  // 2n x 2n
};

/// Verifies R^n = I at `tol`. The power of a block-diagonal matrix is
/// block-diagonal with powered blocks (structural zeros stay exact
/// zeros), so checking each 2x2 block is equivalent to the dense check
/// and stays cheap for large n. The dense equivalence itself is pinned
/// by the matrix tests.
inline double plan_unit_power_error(const DftPlan& plan) {
  double worst = 0.0;
  for (std::size_t k = 0; k < plan.n; ++k) {
    Matrix<double> block(2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) block(r, c) = plan.rotation(2 * k + r, 2 * k + c);
    Matrix<double> acc = Matrix<double>::identity(2);
    for (std::size_t i = 0; i < plan.n; ++i) acc = mat_mul(acc, block);
    const double err = max_abs_diff(acc, Matrix<double>::identity(2));
    if (err > worst) worst = err;
  }
  return worst;
}

inline DftPlan build_dft_plan(std::size_t n) {
  if (n == 0) throw InvalidArgument("build_dft_plan: n must be >= 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<Matrix<double>> blocks;
  blocks.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Angle reduced mod 2*pi before cos/sin (k < n keeps it there).
    const double angle = two_pi * static_cast<double>(k % n) / static_cast<double>(n);
    blocks.push_back(rotation_block(angle));
  }
  DftPlan plan{n, block_diag(blocks)};
  if (plan_unit_power_error(plan) > 1e-9)
    throw Error("build_dft_plan: R^n deviates from the identity");
  return plan;
}

/// Input embedding for real signals: v_i repeats the column (a_i, 0)
/// across all n blocks.
inline std::vector<Vector<double>> embed_input(const std::vector<double>& a, const DftPlan& plan) {
  if (a.size() != plan.n) throw DimensionMismatch("embed_input: signal length differs from plan");
  std::vector<Vector<double>> out;
  out.reserve(a.size());
  for (double value : a) {
    Vector<double> v(2 * plan.n);
    for (std::size_t k = 0; k < plan.n; ++k) {
      v[2 * k] = value;
      v[2 * k + 1] = 0.0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Embedding for complex inputs: each block holds (Re z_i, Im z_i), so
/// the rotation blocks implement complex multiplication directly. This
/// is what the second pass of the 2D transform feeds on.
inline std::vector<Vector<double>> embed_input(const std::vector<std::complex<double>>& a,
                                               const DftPlan& plan) {
  if (a.size() != plan.n) throw DimensionMismatch("embed_input: signal length differs from plan");
  std::vector<Vector<double>> out;
  out.reserve(a.size());
  for (const std::complex<double>& z : a) {
    Vector<double> v(2 * plan.n);
    for (std::size_t k = 0; k < plan.n; ++k) {
      v[2 * k] = z.real();
      v[2 * k + 1] = z.imag();
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace detail {

inline ComplexSpectrum decode_blocks(const Vector<double>& folded, std::size_t n) {
  ComplexSpectrum x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = {folded[2 * k], folded[2 * k + 1]};
  return x;
}

template <class Input>
ComplexSpectrum dft_fold(const std::vector<Input>& a, const DftPlan& plan,
                         std::size_t* scalar_ops = nullptr) {
  const std::vector<Vector<double>> embedded = embed_input(a, plan);
  const Vector<double> folded = fold_shared_operator(plan.rotation, embedded, scalar_ops);
  return decode_blocks(folded, plan.n);
}

}  // namespace detail

/// Length-n DFT (positive-exponent kernel) evaluated as the fold of
/// the embedded inputs, all sharing the plan operator.
inline ComplexSpectrum dft_1d(const std::vector<double>& a, const DftPlan& plan,
                              std::size_t* scalar_ops = nullptr) {
  return detail::dft_fold(a, plan, scalar_ops);
}

inline ComplexSpectrum dft_1d(const std::vector<double>& a) {
  return dft_1d(a, build_dft_plan(a.size()));
}

inline ComplexSpectrum dft_1d(const std::vector<std::complex<double>>& a, const DftPlan& plan) {
  return detail::dft_fold(a, plan);
}

inline ComplexSpectrum dft_1d(const std::vector<std::complex<double>>& a) {
  return dft_1d(a, build_dft_plan(a.size()));
}

/// 2D DFT of a square array via two compositional passes with one
/// shared plan: n row folds produce per-row spectra, then for each
/// frequency column the complex intermediates are folded down the
/// rows. Output is indexed [p][k]: p the row-direction frequency, k
/// the column-direction frequency.
inline std::vector<ComplexSpectrum> dft_2d(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidArgument("dft_2d: empty array");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("dft_2d: array is not square");
  const DftPlan plan = build_dft_plan(n);

  std::vector<ComplexSpectrum> row_spectra;
  row_spectra.reserve(n);
  for (const auto& row : a) row_spectra.push_back(dft_1d(row, plan));

  std::vector<ComplexSpectrum> out(n, ComplexSpectrum(n));
  for (std::size_t k = 0; k < n; ++k) {
    ComplexSpectrum column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = row_spectra[i][k];
    const ComplexSpectrum transformed = dft_1d(column, plan);
    for (std::size_t p = 0; p < n; ++p) out[p][k] = transformed[p];
  }
  return out;
}

}  // namespace monofold
