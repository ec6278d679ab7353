#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relaxfeas/dnc.hpp"
#include "relaxfeas/inference.hpp"

namespace relaxfeas {

enum class Decision { Feasible, Infeasible, NoIntegerSolutions, BudgetExceeded };

std::string to_string(Decision d);

struct TraceEntry {
  std::string outcome;      ///< "solution", "separator", "failure", "budget", "algebra"
  std::string conclusion;
  std::optional<Index> moved_row;  ///< original inequality index moved to the equalities
  std::uint64_t recursions = 0;
  std::uint64_t ep_calls = 0;
};

struct SolveReport {
  Decision decision = Decision::BudgetExceeded;
  std::optional<Vector> x;  ///< set iff decision == Feasible; verified on the input system
  std::uint64_t recursions = 0;
  std::uint64_t ep_calls = 0;
  std::uint64_t iterations = 0;  ///< relaxation steps or driver iterations
  double elapsed = 0.0;          ///< seconds
  bool timed_out = false;
  bool rounded = false;          ///< the returned point differs from the D&C point
  std::vector<TraceEntry> trace;
};

struct SolverLimits {
  double theta = 0.4;
  std::optional<std::uint64_t> node_budget;  ///< per D&C call
  std::optional<Clock::time_point> deadline;
};

/// A x = b, x >= 0 with every solution inside B(0, r); delta bounds the
/// largest absolute subdeterminant of A.
struct LFSInput {
  Matrix A;
  Vector b;
  double r = 1.0;
  double delta = 1.0;
};

/// 2 n delta sqrt(r^2 + 1).
double lfs_radius(Index n, double delta, double r);

/// Decides a standard-form system promised to be infeasible or strictly
/// feasible.
SolveReport lfs(const LFSInput& input, const SolverLimits& limits = {});

/// A x = b, 0 <= x <= lambda 1 via the 2n-variable standard form with
/// r = lambda sqrt(2n). Returns x in the original n variables.
SolveReport lfs_bounded(const Matrix& A, const Vector& b, double lambda, double delta,
                        const SolverLimits& limits = {});

/// lfs_bounded for totally unimodular A (delta = 1).
SolveReport lfs_tu(const Matrix& A, const Vector& b, double lambda,
                   const SolverLimits& limits = {});

/// n^(n/2) |a_max|^n, an upper bound on every subdeterminant of A.
double delta_bound(const Matrix& A);

/// Encoding length of an integer: sign bit plus binary digits.
int bit_size(double integer_value);

/// Largest encoding length of one row (coefficients and right-hand side) plus
/// one, at least n + 1. Equalities count as rows.
int facet_complexity(const LinearSystem& sys);

/// Encoding length of all coefficients of the system.
int bit_length(const LinearSystem& sys);

/// log2 of 2^(5 n^2 phi) sqrt(n).
double log2_containment_radius(Index n, int phi);

struct LFGOptions {
  std::optional<double> radius_override;
  std::optional<double> nu_override;
};

/// Throws Error(RadiusOverflow) when the containment radius exceeds 2^300 and
/// no override is given, Error(InvalidSystem) on non-integer data.
SolveReport lfg(const LinearSystem& sys, const LFGOptions& options = {},
                const SolverLimits& limits = {});

/// Turns x0 with A x0 = b, C x0 < d + nu into a solution of the system by
/// projecting onto the rows it violates or nearly meets. Returns x0 unchanged
/// when it already satisfies C x0 <= d. Throws Error(RoundingFailed).
Vector round_strict_solution(const LinearSystem& sys, const Vector& x0, double nu);

/// Repeatedly moves an inequality proven to be an implied equality for
/// integer points into the equality block. C and d must be integral and
/// r_star must bound |x| over P.
SolveReport chubanov_relaxation(const LinearSystem& sys, double r_star,
                                 const SolverLimits& limits = {});

}  // namespace relaxfeas
