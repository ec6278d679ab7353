#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>

#include "relaxfeas/ep.hpp"

namespace relaxfeas {

using Clock = std::chrono::steady_clock;

struct DnCParams {
  /// Radius shrink factor is 1/(1+theta); 2/5 matches the 1/log2(7/5)
  /// exponent of the operation-count bound.
  double theta = 0.4;
  double eps = 1.0;
  /// Maximum number of elementary-procedure leaves; defaults to ceil(10 K).
  std::optional<std::uint64_t> node_budget;
  std::optional<Clock::time_point> deadline;
};

/// The two recursive branches returned h1 = -gamma h2: the system handed to
/// the recursion is infeasible.
struct Failure {
  Hyperplane h1;
  Hyperplane h2;
  double gamma = 0.0;
  Vector z0;
};

/// The leaf budget or the deadline ran out before a decision.
struct BudgetExceeded {
  bool timed_out = false;
};

using DnCOutcome = std::variant<ApproxSolution, Separator, Failure, BudgetExceeded>;

struct DnCCounters {
  std::uint64_t nodes = 0;     ///< recursive invocations, leaves included
  std::uint64_t ep_calls = 0;  ///< elementary-procedure leaves
  int max_depth = 0;
};

struct DnCResult {
  DnCOutcome outcome;
  DnCCounters counters;
  int depth = 0;               ///< planned recursion depth D
  std::uint64_t budget = 0;    ///< leaf budget in force
};

/// Runs the recursion on (sys, z, r). Separator outcomes separate the open
/// ball B(z, r) from P; ApproxSolution outcomes are eps-approximate.
DnCResult dnc(const LinearSystem& sys, const Vector& z, double r, const DnCParams& params = {});
DnCResult dnc(const ElementaryProcedure& ep, const Vector& z, double r, const DnCParams& params);

/// Smallest D with r / (1+theta)^D <= eps / (2 c_max), evaluated with the
/// same floating-point divisions as the recursion.
int dnc_depth(double r, double c_max, double eps, double theta);

/// 2^(D+1) with D = ceil(log_{1+theta}(2 r c_max / eps)).
double leaf_bound(double r, double c_max, double eps, double theta);

struct Combined {
  Hyperplane hyperplane;
  double alpha = 0.0;
};

struct Opposite {
  double gamma = 0.0;
};

/// Normals within this distance (as unit vectors) of antiparallel count as
/// h1 = -gamma h2.
inline constexpr double kOppositeTol = 1e-9;

/// Picks alpha in [0, 1] maximising the distance of z beyond
/// alpha*(h1, d1) + (1-alpha)*(h2, d2). Throws Error(CombinationFailed) if the
/// best distance is below r (less tolerance) and the normals are not opposite.
std::variant<Combined, Opposite> combine_separators(const Hyperplane& first,
                                                    const Hyperplane& second, const Vector& z,
                                                    double r);

struct ComplexityEstimate {
  double K = 0.0;
  double mu = 0.0;
  double rho = 0.0;
  Index N = 0;
  double predicted_ops = 0.0;
};

/// Operation-count estimate for one recursion with unit constants.
ComplexityEstimate complexity_estimate(const LinearSystem& sys, const Vector& z, double r,
                                       double eps);

/// ceil(10 K), saturated to the uint64 range.
std::uint64_t default_node_budget(const LinearSystem& sys, double r, double eps);

}  // namespace relaxfeas
