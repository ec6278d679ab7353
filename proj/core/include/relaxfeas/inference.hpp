#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "relaxfeas/dnc.hpp"

namespace relaxfeas {

struct ExactSolution {
  Vector x;
};

/// P is empty.
struct Infeasible {};

/// Some inequality row holds with equality on all of P. `rows` lists every
/// row the certificate proves implied; index_hint is the strongest of them.
struct ImpliedEqualityExists {
  std::optional<Index> index_hint;
  std::vector<Index> rows;
};

/// Some inequality row k satisfies d_k - 1/2 <= c_k x on all of P, so every
/// integer solution has c_k x = d_k when C and d are integral.
struct IntegerImpliedEqualityExists {
  std::optional<Index> index_hint;
  std::vector<Index> rows;
};

/// The recursion stopped on its budget or deadline.
struct Undecided {
  bool timed_out = false;
};

using Conclusion = std::variant<ExactSolution, Infeasible, ImpliedEqualityExists,
                                IntegerImpliedEqualityExists, Undecided>;

/// Minimum radius for interpret: 2 l (r_star + 1).
double inference_radius(const LinearSystem& sys, double r_star);

/// Reads a dnc outcome computed on strengthen(homogenize(sys), 1) with z = 0
/// and radius r_used. r_star must bound |x| over P.
///
/// Throws Error(BadRadius) when r_used < 2 l (r_star + 1).
Conclusion interpret(const LinearSystem& sys, const DnCOutcome& outcome, double r_used,
                     double r_star);

}  // namespace relaxfeas
