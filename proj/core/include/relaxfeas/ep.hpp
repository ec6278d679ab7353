#pragma once

#include <limits>
#include <variant>

#include "relaxfeas/linalg.hpp"
#include "relaxfeas/model.hpp"

namespace relaxfeas {

/// A x = b exactly (up to rounding) and C x <= d + eps 1.
struct ApproxSolution {
  Vector x;
};

/// Induced inequality h.x <= delta, valid for P, with B(z, r) on the far side.
struct Separator {
  Hyperplane hyperplane;
};

using EPOutcome = std::variant<ApproxSolution, Separator>;

/// The base case of the divide-and-conquer recursion, valid for
/// r <= eps / (2 |c_max|). Owns the projector onto {Ax = b} so repeated calls
/// on one system share a single factorization.
class ElementaryProcedure {
 public:
  explicit ElementaryProcedure(LinearSystem sys);

  const LinearSystem& system() const noexcept { return sys_; }
  const AffineProjector& projector() const noexcept { return projector_; }
  double c_max() const noexcept { return c_max_; }

  /// Largest radius the procedure accepts for a given eps.
  double max_radius(double eps) const {
    return c_max_ > 0.0 ? eps / (2.0 * c_max_) : std::numeric_limits<double>::infinity();
  }

  /// Throws Error(PreconditionViolated) if r > max_radius(eps), r <= 0 or eps <= 0.
  EPOutcome operator()(const Vector& z, double r, double eps) const;

 private:
  LinearSystem sys_;
  AffineProjector projector_;
  Vector row_norms_;
  double c_max_;
};

EPOutcome elementary_procedure(const LinearSystem& sys, const Vector& z, double r, double eps);

}  // namespace relaxfeas
