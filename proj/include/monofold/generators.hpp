#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monofold/matrix.hpp"
#include "monofold/multi_axis.hpp"
#include "monofold/rng.hpp"

namespace monofold {

/// Outcome of the pairwise commutation check that backs the
/// interchange-law hypothesis.
struct CommutationReport {
  double max_commutator = 0.0;
  std::size_t pairs_checked = 0;
};

template <class T>
CommutationReport verify_commuting(const std::vector<Matrix<T>>& family) {
  CommutationReport r;
  r.max_commutator = max_pairwise_commutator(family);
  r.pairs_checked = family.size() < 2 ? 0 : family.size() * (family.size() - 1) / 2;
  return r;
}

/// Family [base^{e_1}, ..., base^{e_D}]. Powers of one matrix always
/// commute, which makes this the stock source of valid interchange
/// fixtures; the constructor still verifies the commutators
/// numerically rather than taking that on faith.
template <class T>
FamilyPtr<T> family_from_powers(const Matrix<T>& base, const std::vector<long long>& exps) {
  if (exps.empty()) throw InvalidArgument("family_from_powers: no exponents given");
  std::vector<Matrix<T>> axes;
  axes.reserve(exps.size());
  for (long long e : exps) axes.push_back(mat_pow(base, e));
  return GeneratorFamily<T>::create(std::move(axes));
}

/// D random diagonal matrices with entries in [0.5, 2.0], bounded away
/// from zero so powers up to the exponents used in tests stay well
/// conditioned. Deterministic per seed.
inline FamilyPtr<double> family_diagonal_random(std::size_t dim, std::size_t axes,
                                                std::uint64_t seed) {
  if (dim == 0 || axes == 0)
    throw InvalidArgument("family_diagonal_random: dim and axes must be >= 1");
  Rng rng(seed);
  std::vector<Matrix<double>> mats;
  mats.reserve(axes);
  for (std::size_t a = 0; a < axes; ++a) {
    Vector<double> diag(dim);
    for (std::size_t i = 0; i < dim; ++i) diag[i] = rng.uniform(0.5, 2.0);
    mats.push_back(Matrix<double>::diagonal(diag));
  }
  return GeneratorFamily<double>::create(std::move(mats));
}

}  // namespace monofold
