#include "relaxfeas/ep.hpp"

#include <string>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

ElementaryProcedure::ElementaryProcedure(LinearSystem sys)
    : sys_(std::move(sys)),
      projector_(sys_.A(), sys_.b()),
      row_norms_(sys_.ineq_row_norms()),
      c_max_(sys_.c_max()) {}

EPOutcome ElementaryProcedure::operator()(const Vector& z, double r, double eps) const {
  if (!(eps > 0.0) || !(r > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "elementary procedure needs r > 0 and eps > 0");
  }
  if (r > max_radius(eps)) {
    throw Error(ErrorCode::PreconditionViolated,
                "radius " + std::to_string(r) + " exceeds eps/(2|c_max|) = " +
                    std::to_string(max_radius(eps)));
  }
  if (z.size() != sys_.n()) throw Error(ErrorCode::DimensionMismatch, "center dimension");

  const Index m = sys_.m(), l = sys_.l();
  const Vector y = projector_.multipliers(z);
  const Vector p = m ? Vector(z - sys_.A().transpose() * y) : z;
  const double gap = (z - p).norm();

  Index first_far = -1;
  if (l) {
    const Vector dist = (sys_.C() * z - sys_.d()).cwiseQuotient(row_norms_);
    for (Index k = 0; k < l; ++k) {
      if (dist(k) >= r) {
        first_far = k;
        break;
      }
    }
  }

  if (gap < r && first_far < 0) return ApproxSolution{p};

  if (gap >= r) {
    // h = z - p = A^T y. Building h and delta from y directly keeps the
    // certificate exact and avoids the cancellation in z - p when z is far
    // from the origin.
    Hyperplane hp;
    hp.h = sys_.A().transpose() * y;
    hp.delta = y.dot(sys_.b());
    hp.cert = Certificate::equality_only(y, l);
    return Separator{std::move(hp)};
  }

  Hyperplane hp;
  hp.h = sys_.C().row(first_far).transpose();
  hp.delta = sys_.d()(first_far);
  hp.cert = Certificate::unit_inequality(m, l, first_far);
  return Separator{std::move(hp)};
}

EPOutcome elementary_procedure(const LinearSystem& sys, const Vector& z, double r, double eps) {
  return ElementaryProcedure(sys)(z, r, eps);
}

}  // namespace relaxfeas
