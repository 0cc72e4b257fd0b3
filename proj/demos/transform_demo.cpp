// Runs the three transforms on small inputs and prints each result
// next to its brute-force reference.

#include <cstdio>
#include <cstdint>
#include <vector>

#include "monofold/monofold.hpp"

using namespace monofold;

int main() {
  const std::vector<double> signal{1.0, 2.0, 3.0, 4.0};
  const ComplexSpectrum fold = dft_1d(signal);
  const ComplexSpectrum direct = oracle::naive_dft(signal);
  std::printf("dft of [1, 2, 3, 4] (positive-exponent kernel):\n");
  for (std::size_t k = 0; k < fold.size(); ++k)
    std::printf("  X_%zu  fold = (%+.4f, %+.4f)   direct = (%+.4f, %+.4f)\n", k,
                fold[k].real(), fold[k].imag(), direct[k].real(), direct[k].imag());

  const std::vector<std::int64_t> x{1, 2, 3, 4};
  const HadamardPlan hp = build_hadamard_plan(4);
  const auto h_fold = wht_embedding(x, hp);
  const auto h_staged = wht_staged(x);
  const auto h_direct = hadamard_reference(x, hp);
  std::printf("\nhadamard of [1, 2, 3, 4]:\n  fold = [");
  for (std::size_t i = 0; i < 4; ++i) std::printf("%s%lld", i ? ", " : "", (long long)h_fold[i]);
  std::printf("]  staged = [");
  for (std::size_t i = 0; i < 4; ++i) std::printf("%s%lld", i ? ", " : "", (long long)h_staged[i]);
  std::printf("]  direct = [");
  for (std::size_t i = 0; i < 4; ++i) std::printf("%s%lld", i ? ", " : "", (long long)h_direct[i]);
  std::printf("]\n");

  const WalshPlan wp = build_walsh_plan(4);
  const auto w_fold = walsh_embedding(x, wp);
  const auto w_direct = walsh_reference(x, wp);
  std::printf("\nwalsh (sequency-ordered) of [1, 2, 3, 4]:\n  fold = [");
  for (std::size_t i = 0; i < 4; ++i) std::printf("%s%lld", i ? ", " : "", (long long)w_fold[i]);
  std::printf("]  direct = [");
  for (std::size_t i = 0; i < 4; ++i) std::printf("%s%lld", i ? ", " : "", (long long)w_direct[i]);
  std::printf("]\n  row sequencies: ");
  for (std::size_t r = 0; r < 4; ++r) std::printf("%zu ", sequency_of_row(wp.walsh.row(r)));
  std::printf("\n");
  return 0;
}
