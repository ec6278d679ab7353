#pragma once

#include <cstdint>
#include <functional>

#include "relaxfeas/solvers.hpp"

namespace relaxfeas {

enum class Selection { MaxViolation, RandomViolation };

struct RelaxConfig {
  double lambda = 1.9;
  double eps = 1e-6;
  Selection selection = Selection::MaxViolation;
  std::uint64_t seed = 0;  ///< RandomViolation only
  std::uint64_t max_iters = 10'000'000;
  double time_limit = 600.0;  ///< seconds
};

/// Called with the iterate after every step.
using RelaxObserver = std::function<void(std::uint64_t iteration, const Vector& z)>;

/// Projects towards one violated row per step, z += lambda (p(z) - z), until
/// every row is within eps in normalized distance. Equality rows count as
/// violated on either side. Returns Feasible(z) or BudgetExceeded; the
/// iteration count is 0 when z0 already satisfies the system.
SolveReport relax_solve(const LinearSystem& sys, const Vector& z0, const RelaxConfig& cfg,
                        const RelaxObserver& observer = {});

struct RelaxStats {
  double avg_iters = 0.0;
  double std_iters = 0.0;
  std::uint64_t min_iters = 0;
  std::uint64_t max_iters = 0;
  double avg_time = 0.0;
  double std_time = 0.0;
  int runs = 0;
  int budget_exceeded = 0;
};

/// Runs relax_solve `runs` times with seeds derive_seed(cfg.seed, i).
RelaxStats relax_random_stats(const LinearSystem& sys, const Vector& z0, const RelaxConfig& cfg,
                              int runs);

}  // namespace relaxfeas
