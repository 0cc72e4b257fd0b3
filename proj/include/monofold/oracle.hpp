#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "monofold/dft.hpp"
#include "monofold/generators.hpp"
#include "monofold/hadamard.hpp"
#include "monofold/matrix.hpp"
#include "monofold/monoid.hpp"
#include "monofold/multi_axis.hpp"
#include "monofold/report.hpp"
#include "monofold/rng.hpp"
#include "monofold/walsh.hpp"

namespace monofold::oracle {

/// Brute-force references. These evaluate the defining sums directly
/// and deliberately share no evaluation path with the compositional
/// folds they are used to check: no monoid composition, no axis
/// elements, no plan operators.

/// X_k = sum_i a_i e^{+j 2 pi (i-1) k / n} by direct summation, the
/// positive-exponent kernel. O(n^2).
inline ComplexSpectrum naive_dft(const std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidArgument("naive_dft: empty signal");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  ComplexSpectrum out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = two_pi * static_cast<double>((i * k) % n) / static_cast<double>(n);
      acc += a[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

inline ComplexSpectrum naive_dft(const std::vector<double>& a) {
  return naive_dft(ComplexSpectrum(a.begin(), a.end()));
}

/// Y_{p,k} = sum_{i,m} a_{i,m} e^{+j 2 pi ((m-1)k + (i-1)p) / n} by the
/// direct O(n^4) double sum. Output indexed [p][k].
inline std::vector<ComplexSpectrum> naive_dft2(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidArgument("naive_dft2: empty array");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("naive_dft2: array is not square");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<ComplexSpectrum> out(n, ComplexSpectrum(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < n; ++m) {
          const double angle =
              two_pi * static_cast<double>((m * k + i * p) % n) / static_cast<double>(n);
          acc += a[i][m] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
      }
      out[p][k] = acc;
    }
  }
  return out;
}

namespace detail {

inline double spectrum_diff(const ComplexSpectrum& a, const ComplexSpectrum& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i].real() - b[i].real()));
    worst = std::max(worst, std::abs(a[i].imag() - b[i].imag()));
  }
  return worst;
}

inline std::vector<double> flatten(const ComplexSpectrum& s) {
  std::vector<double> out;
  out.reserve(2 * s.size());
  for (const auto& z : s) {
    out.push_back(z.real());
    out.push_back(z.imag());
  }
  return out;
}

inline MonoidElement<double> random_element(Rng& rng, std::size_t d) {
  Vector<double> v(d);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  Matrix<double> m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
  return MonoidElement<double>(std::move(v), std::move(m));
}

inline Vector<double> random_vector(Rng& rng, std::size_t d) {
  Vector<double> v(d);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

/// Orthogonal commuting base: block-diagonal random rotations (plus a
/// trailing 1x1 identity when d is odd). Powers stay bounded, so
/// interchange errors reflect roundoff, not growth.
inline Matrix<double> random_rotation_base(Rng& rng, std::size_t d) {
  std::vector<Matrix<double>> blocks;
  for (std::size_t i = 0; i + 1 < d; i += 2)
    blocks.push_back(rotation_block(rng.uniform(0.0, 2.0 * std::numbers::pi)));
  if (d % 2 == 1) blocks.push_back(Matrix<double>::identity(1));
  return block_diag(blocks);
}

}  // namespace detail

/// The algebraic-law suite: associativity, identity neutrality, the
/// interchange law over commuting families, the fixed non-commuting
/// counterexample (which is expected to FAIL and carries its witness),
/// and grid reduction order independence. Deterministic per (seed,
/// cases).
inline std::vector<OracleReport> run_law_suite(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) throw InvalidArgument("run_law_suite: cases must be >= 1");
  std::vector<OracleReport> reports;

  {  // associativity of 1D composition
    Rng rng(mix_seed(seed, 1));
    double worst = 0.0;
    std::optional<Witness> witness;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t d = 1 + rng.index(6);
      const auto a = detail::random_element(rng, d);
      const auto b = detail::random_element(rng, d);
      const auto cc = detail::random_element(rng, d);
      const auto lhs = compose(compose(a, b), cc);
      const auto rhs = compose(a, compose(b, cc));
      const double err = max_abs_diff(lhs, rhs);
      if (err > worst) worst = err;
      if (err > 1e-9 && !witness)
        witness = Witness{"associativity case " + std::to_string(c), lhs.vec, rhs.vec};
    }
    reports.push_back(make_report("associativity", 1e-9, worst, cases, std::move(witness)));
  }

  {  // identity neutrality, exact
    Rng rng(mix_seed(seed, 2));
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t d = 1 + rng.index(6);
      const auto e = detail::random_element(rng, d);
      const auto id = identity_element<double>(d);
      worst = std::max(worst, max_abs_diff(compose(id, e), e));
      worst = std::max(worst, max_abs_diff(compose(e, id), e));
    }
    reports.push_back(make_report("identity-neutrality", 0.0, worst, cases));
  }

  {  // interchange over commuting families
    Rng rng(mix_seed(seed, 3));
    double worst = 0.0;
    std::optional<Witness> witness;
    for (std::size_t c = 0; c < cases; ++c) {
      FamilyPtr<double> family;
      std::size_t d;
      if (c % 2 == 0) {
        d = 1 + rng.index(8);
        family = family_diagonal_random(d, 2, rng.next());
      } else {
        d = 2 * (1 + rng.index(4));
        const auto base = detail::random_rotation_base(rng, d);
        family = family_from_powers(base, {static_cast<long long>(rng.index(4)),
                                           static_cast<long long>(rng.index(4))});
      }
      const long long n = rng.uniform_int(0, 6), m = rng.uniform_int(0, 6);
      const long long k = rng.uniform_int(0, 6), q = rng.uniform_int(0, 6);
      const AxisElement<double> a(detail::random_vector(rng, d), {n, m}, family);
      const AxisElement<double> b(detail::random_vector(rng, d), {k, m}, family);
      const AxisElement<double> cc(detail::random_vector(rng, d), {n, q}, family);
      const AxisElement<double> dd(detail::random_vector(rng, d), {k, q}, family);
      const OracleReport r = check_interchange(a, b, cc, dd, 0, 1);
      if (r.max_abs_error > worst) worst = r.max_abs_error;
      if (!r.pass && !witness) witness = r.witness;
    }
    reports.push_back(
        make_report("interchange-commuting", kInterchangeTol, worst, cases, std::move(witness)));
  }

  {  // fixed non-commuting fixture: the interchange law must observably break
    const auto family = GeneratorFamily<double>::create(
        {Matrix<double>::from_rows({{0, 1}, {1, 0}}), Matrix<double>::diagonal({1, 2})});
    const AxisElement<double> a({1.0, 2.0}, {1, 1}, family);
    const AxisElement<double> b({3.0, 4.0}, {1, 1}, family);
    const AxisElement<double> c({5.0, 6.0}, {1, 1}, family);
    const AxisElement<double> d({1.0, 0.0}, {1, 1}, family);
    OracleReport r = check_interchange(a, b, c, d, 0, 1);
    r.name = "interchange-noncommuting-counterexample";
    reports.push_back(std::move(r));
  }

  {  // grid folds agree across reduction orders
    Rng rng(mix_seed(seed, 4));
    double worst = 0.0;
    std::optional<Witness> witness;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t rows = 1 + rng.index(6), cols = 1 + rng.index(6);
      const std::size_t d = 1 + rng.index(4);
      const auto family = family_diagonal_random(d, 2, rng.next());
      std::vector<std::vector<Vector<double>>> grid(rows);
      for (auto& row : grid) {
        row.reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) row.push_back(detail::random_vector(rng, d));
      }
      const AxisElement<double> base = fold_grid(grid, family);
      std::vector<GridSchedule> schedules{rows_then_columns_schedule(rows, cols),
                                          columns_then_rows_schedule(rows, cols)};
      for (int s = 0; s < 3; ++s) schedules.push_back(random_schedule(rows, cols, rng));
      for (const auto& sched : schedules) {
        const AxisElement<double> alt = fold_grid_scheduled(grid, family, sched);
        const double err = max_abs_diff(base.vec, alt.vec);
        if (err > worst) worst = err;
        if (err > 1e-9 && !witness)
          witness = Witness{"grid case " + std::to_string(c),
                            std::vector<double>(base.vec.begin(), base.vec.end()),
                            std::vector<double>(alt.vec.begin(), alt.vec.end())};
      }
    }
    reports.push_back(
        make_report("grid-order-independence", 1e-9, worst, cases, std::move(witness)));
  }

  return reports;
}

/// Transform-vs-reference suite. Scaled-error reports divide the raw
/// max error by the transform size (or its square for the 2D case), so
/// one report covers every size at a single tolerance.
inline std::vector<OracleReport> run_transform_suite(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) throw InvalidArgument("run_transform_suite: cases must be >= 1");
  std::vector<OracleReport> reports;
  std::map<std::size_t, DftPlan> dft_plans;
  const auto plan_for = [&](std::size_t n) -> const DftPlan& {
    auto it = dft_plans.find(n);
    if (it == dft_plans.end()) it = dft_plans.emplace(n, build_dft_plan(n)).first;
    return it->second;
  };

  {  // 1D DFT fold vs direct sum, error scaled by n
    Rng rng(mix_seed(seed, 10));
    const std::size_t sizes[] = {1, 2, 3, 4, 8, 16, 64};
    double worst = 0.0;
    std::optional<Witness> witness;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      std::vector<double> signal(n);
      for (auto& x : signal) x = rng.uniform(-1.0, 1.0);
      const ComplexSpectrum got = dft_1d(signal, plan_for(n));
      const ComplexSpectrum want = naive_dft(signal);
      const double err = detail::spectrum_diff(got, want) / static_cast<double>(n);
      if (err > worst) worst = err;
      if (err > 1e-9 && !witness)
        witness = Witness{"dft1d n=" + std::to_string(n), detail::flatten(got),
                          detail::flatten(want)};
    }
    reports.push_back(make_report("dft1d-vs-naive", 1e-9, worst, cases, std::move(witness)));
  }

  {  // Parseval, positive kernel: sum |X_k|^2 = n sum a_i^2
    Rng rng(mix_seed(seed, 11));
    const std::size_t sizes[] = {1, 2, 3, 4, 8, 16, 64};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      std::vector<double> signal(n);
      for (auto& x : signal) x = rng.uniform(-1.0, 1.0);
      const ComplexSpectrum spectrum = dft_1d(signal, plan_for(n));
      double lhs = 0.0, rhs = 0.0;
      for (const auto& z : spectrum) lhs += std::norm(z);
      for (double x : signal) rhs += x * x;
      const double err = std::abs(lhs - static_cast<double>(n) * rhs) / static_cast<double>(n);
      if (err > worst) worst = err;
    }
    reports.push_back(make_report("dft1d-parseval", 1e-6, worst, cases));
  }

  {  // 2D DFT fold vs direct double sum, error scaled by n^2
    Rng rng(mix_seed(seed, 12));
    const std::size_t sizes[] = {1, 2, 4, 8};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      std::vector<std::vector<double>> a(n, std::vector<double>(n));
      for (auto& row : a)
        for (auto& x : row) x = rng.uniform(-1.0, 1.0);
      const auto got = dft_2d(a);
      const auto want = naive_dft2(a);
      double err = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        err = std::max(err, detail::spectrum_diff(got[p], want[p]));
      err /= static_cast<double>(n * n);
      if (err > worst) worst = err;
    }
    reports.push_back(make_report("dft2d-vs-naive", 1e-9, worst, cases));
  }

  {  // plan operator has unit n-th power (per-block check, all n <= 256)
    double worst = 0.0;
    for (std::size_t n = 1; n <= 256; ++n) {
      const DftPlan plan = build_dft_plan(n);
      worst = std::max(worst, plan_unit_power_error(plan));
    }
    reports.push_back(make_report("dft-plan-unit-power", 1e-9, worst, 256));
  }

  std::map<std::size_t, HadamardPlan> h_plans;
  const auto h_plan_for = [&](std::size_t n) -> const HadamardPlan& {
    auto it = h_plans.find(n);
    if (it == h_plans.end()) it = h_plans.emplace(n, build_hadamard_plan(n)).first;
    return it->second;
  };
  const auto random_int_vector = [](Rng& rng, std::size_t n) {
    std::vector<std::int64_t> x(n);
    for (auto& v : x) v = rng.uniform_int(-100, 100);
    return x;
  };

  {  // Hadamard fold vs direct product, exact
    Rng rng(mix_seed(seed, 13));
    const std::size_t sizes[] = {2, 4, 8, 16, 32, 64};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      const auto x = random_int_vector(rng, n);
      const auto got = wht_embedding(x, h_plan_for(n));
      const auto want = hadamard_reference(x, h_plan_for(n));
      worst = std::max(worst, max_abs_diff(got, want));
    }
    reports.push_back(make_report("hadamard-embedding-vs-reference", 0.0, worst, cases));
  }

  {  // staged butterflies vs direct product, exact
    Rng rng(mix_seed(seed, 14));
    const std::size_t sizes[] = {2, 4, 8, 16, 32, 64, 128, 256};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      const auto x = random_int_vector(rng, n);
      worst = std::max(worst, max_abs_diff(wht_staged(x), hadamard_reference(x, h_plan_for(n))));
    }
    reports.push_back(make_report("hadamard-staged-vs-reference", 0.0, worst, cases));
  }

  {  // applying the transform twice scales by n, exactly
    Rng rng(mix_seed(seed, 15));
    const std::size_t sizes[] = {2, 4, 8, 16, 32, 64};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      const auto x = random_int_vector(rng, n);
      const auto twice = wht_embedding(wht_embedding(x, h_plan_for(n)), h_plan_for(n));
      std::vector<std::int64_t> want(n);
      for (std::size_t i = 0; i < n; ++i) want[i] = static_cast<std::int64_t>(n) * x[i];
      worst = std::max(worst, max_abs_diff(twice, want));
    }
    reports.push_back(make_report("hadamard-involution", 0.0, worst, cases));
  }

  {  // staged op count within 4 n log2 n
    double worst_excess = 0.0;
    std::size_t sweep = 0;
    for (std::size_t n = 2; n <= 256; n *= 2, ++sweep) {
      std::vector<std::int64_t> x(n, 1);
      std::size_t ops = 0;
      (void)wht_staged(x, &ops);
      const double bound = 4.0 * static_cast<double>(n) * static_cast<double>(log2_exact(n));
      worst_excess = std::max(worst_excess, std::max(0.0, static_cast<double>(ops) - bound));
    }
    reports.push_back(make_report("hadamard-staged-op-count", 0.0, worst_excess, sweep));
  }

  std::map<std::size_t, WalshPlan> w_plans;
  const auto w_plan_for = [&](std::size_t n) -> const WalshPlan& {
    auto it = w_plans.find(n);
    if (it == w_plans.end()) it = w_plans.emplace(n, build_walsh_plan(n)).first;
    return it->second;
  };

  {  // Walsh fold vs direct product, exact
    Rng rng(mix_seed(seed, 16));
    const std::size_t sizes[] = {2, 4, 8, 16, 32, 64};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      const auto x = random_int_vector(rng, n);
      const auto& plan = w_plan_for(n);
      worst = std::max(worst, max_abs_diff(walsh_embedding(x, plan), walsh_reference(x, plan)));
    }
    reports.push_back(make_report("walsh-vs-reference", 0.0, worst, cases));
  }

  {  // conjugated fold equals permutation of the plain fold, exact
    Rng rng(mix_seed(seed, 17));
    const std::size_t sizes[] = {2, 4, 8, 16, 32, 64};
    double worst = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = sizes[c % std::size(sizes)];
      const auto x = random_int_vector(rng, n);
      const auto& plan = w_plan_for(n);
      const auto vs = build_v(x, plan.hadamard);
      std::vector<Vector<std::int64_t>> pvs;
      pvs.reserve(vs.size());
      for (const auto& v : vs) pvs.push_back(permute(plan.perm, v));
      const auto conj = fold_shared_operator(plan.conj_sign, pvs);
      const auto plain = permute(plan.perm, fold_shared_operator(plan.hadamard.sign, vs));
      worst = std::max(worst, max_abs_diff(conj, plain));
    }
    reports.push_back(make_report("walsh-conjugation-identity", 0.0, worst, cases));
  }

  {  // Walsh rows in strict sequency order for every n up to 256
    double violations = 0.0;
    std::size_t sweep = 0;
    for (std::size_t n = 2; n <= 256; n *= 2, ++sweep) {
      const Matrix<std::int64_t> w = walsh_matrix(n);
      for (std::size_t r = 0; r < n; ++r)
        if (sequency_of_row(w.row(r)) != r) violations += 1.0;
    }
    reports.push_back(make_report("walsh-sequency-order", 0.0, violations, sweep));
  }

  return reports;
}

/// Report names that demonstrate a failure on purpose; their pass flag
/// is expected to be false and the CLI treats that as success.
inline bool report_expected_to_fail(const std::string& name) {
  return name == "interchange-noncommuting-counterexample";
}

}  // namespace monofold::oracle
