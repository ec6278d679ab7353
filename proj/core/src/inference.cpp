#include "relaxfeas/inference.hpp"

#include <algorithm>
#include <string>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

namespace {

struct Split {
  Vector alpha;  // multipliers on the original inequality rows
  double beta;   // multiplier on the homogenization row
};

Split split(const Vector& ineq_mults, Index l) {
  if (ineq_mults.size() != l + 1) {
    throw Error(ErrorCode::DimensionMismatch, "certificate does not match the homogenized system");
  }
  return Split{ineq_mults.head(l), ineq_mults(l)};
}

std::optional<Index> argmax(const Vector& v) {
  if (v.size() == 0 || v.maxCoeff() <= 0.0) return std::nullopt;
  Index k = 0;
  v.maxCoeff(&k);
  return k;
}

std::vector<Index> strong_rows(const Vector& v) {
  std::vector<Index> rows;
  if (v.size() == 0) return rows;
  const double top = v.maxCoeff();
  if (top <= 0.0) return rows;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) > 0.5 * top) rows.push_back(k);
  }
  return rows;
}

Conclusion from_solution(const LinearSystem& sys, const Vector& xt) {
  const Index n = sys.n();
  if (xt.size() != n + 1) {
    throw Error(ErrorCode::DimensionMismatch, "solution does not match the homogenized system");
  }
  const double t = xt(n);
  if (!(t > 0.0)) throw Error(ErrorCode::PreconditionViolated, "homogenizing coordinate t <= 0");
  Vector x = xt.head(n) / t;
  if (!satisfies(sys, x)) {
    throw Error(ErrorCode::PreconditionViolated, "scaled approximate solution does not verify");
  }
  return ExactSolution{std::move(x)};
}

// For x in P, (x, 1) has norm at most r_star + 1 <= r / (2l), so a separator
// of B(0, r) with multipliers (alpha, beta) gives
//   sum_k alpha_k (d_k - c_k x) + beta <= (sum alpha + 2 beta) / (2l).
// The strongest row then lies in a strip of width 1/2, unless beta dominates,
// in which case no x in P can exist.
Conclusion from_separator(const LinearSystem& sys, const Hyperplane& hp) {
  const Index l = sys.l();
  const auto [alpha, beta] = split(hp.cert.ineq_mults, l);
  const double top = l ? alpha.maxCoeff() : 0.0;
  if (l >= 2 && beta > top * (1.0 + 1e-9)) return Infeasible{};
  if (l == 0) return Infeasible{};
  if (top >= beta || (l == 1 && top > 0.0)) {
    return IntegerImpliedEqualityExists{argmax(alpha), strong_rows(alpha)};
  }
  return IntegerImpliedEqualityExists{std::nullopt, {}};
}

// h1 + gamma h2 = 0: the combined multipliers give 0 = sum mu_k (c_k x - d_k)
// - mu_beta for x in P, a sum of nonpositive terms, so every row with a
// positive multiplier is tight on P and a positive mu_beta leaves P empty.
Conclusion from_failure(const LinearSystem& sys, const Failure& f) {
  const Index l = sys.l();
  const Certificate mu = Certificate::combine(1.0, f.h1.cert, f.gamma, f.h2.cert);
  const auto [alpha, beta] = split(mu.ineq_mults, l);
  const double top = l ? alpha.maxCoeff() : 0.0;
  if (l == 0 || beta > top * (1.0 + 1e-9)) return Infeasible{};
  return ImpliedEqualityExists{argmax(alpha), strong_rows(alpha)};
}

}  // namespace

double inference_radius(const LinearSystem& sys, double r_star) {
  return 2.0 * static_cast<double>(sys.l()) * (r_star + 1.0);
}

Conclusion interpret(const LinearSystem& sys, const DnCOutcome& outcome, double r_used,
                     double r_star) {
  const double needed = inference_radius(sys, r_star);
  if (r_used < needed - tol::cert(needed)) {
    throw Error(ErrorCode::BadRadius, "radius " + std::to_string(r_used) + " below 2l(r*+1) = " +
                                          std::to_string(needed));
  }
  if (auto* s = std::get_if<ApproxSolution>(&outcome)) return from_solution(sys, s->x);
  if (auto* s = std::get_if<Separator>(&outcome)) return from_separator(sys, s->hyperplane);
  if (auto* f = std::get_if<Failure>(&outcome)) return from_failure(sys, *f);
  return Undecided{std::get<BudgetExceeded>(outcome).timed_out};
}

}  // namespace relaxfeas
