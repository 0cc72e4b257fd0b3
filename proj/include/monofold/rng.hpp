#pragma once

#include <cstdint>
#include <random>

namespace monofold {

/// Deterministic random source. mt19937_64 has a fully specified
/// sequence, and the uniform mappings below are hand-rolled so that a
/// given seed produces identical draws on every platform (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  /// Uniform integer in [lo, hi], inclusive. Modulo bias is irrelevant
  /// at the ranges used here and keeps the mapping reproducible.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Uniform index in [0, bound).
  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(next() % bound);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 step; used to derive independent sub-seeds from one
/// master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace monofold
