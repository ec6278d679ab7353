#include "relaxfeas/generators.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::PreconditionViolated, "empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  // Rejection sampling: discard the incomplete top bucket.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Instance gen_random01(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "random01 needs n >= 2");
  Rng rng(seed);
  const auto rows = static_cast<Index>(rng.uniform_int(1, n - 1));
  Matrix A(rows, n);
  for (Index i = 0; i < rows; ++i) {
    do {
      for (Index j = 0; j < n; ++j) A(i, j) = static_cast<double>(rng.uniform_int(0, 1));
    } while (A.row(i).isZero(0.0));
  }
  Vector b(rows);
  for (Index i = 0; i < rows; ++i) b(i) = static_cast<double>(rng.uniform_int(1, n));

  Instance inst;
  inst.name = "random01-n" + std::to_string(n) + "-s" + std::to_string(seed);
  inst.system = box_system(A, b, 1.0);
  inst.family = Family::Random01;
  inst.seed = seed;
  inst.meta["n"] = std::to_string(n);
  return inst;
}

Instance gen_wedge(int alpha) {
  if (alpha < 1) throw Error(ErrorCode::PreconditionViolated, "wedge needs alpha >= 1");
  const double k = std::ldexp(1.0, alpha);
  Matrix C(3, 2);
  C << -1.0, k,
       -1.0, -k,
       -1.0, 0.0;
  Vector d(3);
  d << 0.0, 0.0, -1.0;

  Instance inst;
  inst.name = "wedge-a" + std::to_string(alpha);
  inst.system = LinearSystem::inequalities(std::move(C), std::move(d));
  inst.family = Family::Wedge;
  inst.seed = static_cast<std::uint64_t>(alpha);
  inst.meta["alpha"] = std::to_string(alpha);
  inst.meta["start"] = "0 10";
  return inst;
}

}  // namespace relaxfeas
