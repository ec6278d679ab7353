#pragma once

#include <cstdint>
#include <random>

#include "relaxfeas/model.hpp"

namespace relaxfeas {

/// Portable bounded sampling on top of std::mt19937_64, whose output sequence
/// is fixed by the standard. std::uniform_int_distribution is not, so seeded
/// instances would differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1).
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream seed for run `index` of a seeded experiment.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// A x = b, 0 <= x <= 1 with 1..n-1 random 0-1 rows (zero rows resampled) and
/// b uniform in {1..n}.
Instance gen_random01(int n, std::uint64_t seed);

/// Two-variable wedge |x2| <= 2^-alpha x1 anchored by x1 >= 1. Half-angle
/// halves (in tangent) with each increment of alpha. meta["start"] holds the
/// start point used by the benchmark protocol.
Instance gen_wedge(int alpha);

}  // namespace relaxfeas
