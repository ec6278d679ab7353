#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "relaxfeas/model.hpp"

namespace relaxfeas {

/// Brute-force reference answers computed in exact rational arithmetic.
/// Every input double is converted exactly, so answers are exact for the
/// system as stored.

struct OracleLimits {
  Index max_continuous_dim = 14;
  Index max_binary_dim = 20;
  std::uint64_t max_subsets = 20'000'000;
};

/// Slack allowed when oracle points are checked in floating point.
inline constexpr double kOracleTol = 1e-9;

struct OracleVerdict {
  bool feasible = false;
  std::optional<Vector> witness;
  std::optional<std::vector<Vector>> vertices;
  std::optional<bool> strictly_feasible;
  std::optional<bool> integer_feasible;
};

/// Decides feasibility and, when requested, enumerates the vertices of P
/// (basic solutions: all equalities plus n - rank(A) inequality rows at
/// equality). Throws Error(OracleLimitExceeded).
OracleVerdict oracle_feasible(const LinearSystem& sys, bool with_vertices = true,
                              const OracleLimits& limits = {});

std::vector<Vector> oracle_vertices(const LinearSystem& sys, const OracleLimits& limits = {});

/// True iff some x in {0,1}^n satisfies the system exactly.
bool oracle_integer01(const LinearSystem& sys, const OracleLimits& limits = {});

/// Average over inequality rows of a vertex maximizing that row's slack,
/// returned when it satisfies every inequality strictly. For standard form
/// this averages the vertices maximizing each coordinate.
std::optional<Vector> oracle_strict(const LinearSystem& sys, const OracleLimits& limits = {});

struct OracleOptimum {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  std::optional<Vector> x;
  double value = 0.0;
};

/// min objective.x over P.
OracleOptimum oracle_minimize(const LinearSystem& sys, const Vector& objective,
                              const OracleLimits& limits = {});

/// Inequality rows with c_k x = d_k on all of a nonempty P.
std::vector<Index> oracle_implied_equalities(const LinearSystem& sys,
                                             const OracleLimits& limits = {});

/// (x, t) with A x - b t = 0, C x - d t <= -1, t >= 2.
struct StrengthenedFeasible {
  Vector witness;
};
struct StrengthenedInfeasible {};

/// Decides the strengthened homogenized system. The witness is the average
/// of per-row slack witnesses x_bar scaled as (x_bar, 1) / eta with
/// eta = min(1/2, min_k (d_k - c_k x_bar)).
std::variant<StrengthenedFeasible, StrengthenedInfeasible> check_equality_forcing(
    const LinearSystem& sys, const OracleLimits& limits = {});

}  // namespace relaxfeas
