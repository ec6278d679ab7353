#include "relaxfeas/dnc.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

namespace {

class Recursion {
 public:
  Recursion(const ElementaryProcedure& ep, const DnCParams& params, std::uint64_t budget)
      : ep_(ep), params_(params), budget_(budget), leaf_radius_(ep.max_radius(params.eps)) {}

  DnCOutcome run(const Vector& z, double r, int depth) {
    ++counters_.nodes;
    counters_.max_depth = std::max(counters_.max_depth, depth);

    if (r <= leaf_radius_) {
      if (counters_.ep_calls >= budget_) return BudgetExceeded{false};
      if (params_.deadline && (counters_.ep_calls & 1023u) == 0 &&
          Clock::now() >= *params_.deadline) {
        return BudgetExceeded{true};
      }
      ++counters_.ep_calls;
      EPOutcome leaf = ep_(z, r, params_.eps);
      if (auto* sol = std::get_if<ApproxSolution>(&leaf)) return std::move(*sol);
      return std::get<Separator>(std::move(leaf));
    }

    const double child_r = r / (1.0 + params_.theta);
    DnCOutcome first = run(z, child_r, depth + 1);
    auto* s1 = std::get_if<Separator>(&first);
    if (!s1) return first;

    const Hyperplane& h1 = s1->hyperplane;
    Vector z0 = project_hyperplane(h1.h, h1.delta, z);
    DnCOutcome second = run(z0, child_r, depth + 1);
    auto* s2 = std::get_if<Separator>(&second);
    if (!s2) return second;

    auto merged = combine_separators(h1, s2->hyperplane, z, r);
    if (auto* opp = std::get_if<Opposite>(&merged)) {
      return Failure{h1, std::move(s2->hyperplane), opp->gamma, std::move(z0)};
    }
    return Separator{std::move(std::get<Combined>(merged).hyperplane)};
  }

  const DnCCounters& counters() const { return counters_; }

 private:
  const ElementaryProcedure& ep_;
  const DnCParams& params_;
  std::uint64_t budget_;
  double leaf_radius_;
  DnCCounters counters_;
};

double distance_for(const Hyperplane& a, const Hyperplane& b, double alpha, const Vector& z) {
  const Vector h = alpha * a.h + (1.0 - alpha) * b.h;
  const double norm = h.norm();
  if (norm <= tol::kZero) return -std::numeric_limits<double>::infinity();
  const double delta = alpha * a.delta + (1.0 - alpha) * b.delta;
  return (h.dot(z) - delta) / norm;
}

}  // namespace

int dnc_depth(double r, double c_max, double eps, double theta) {
  if (c_max <= 0.0) return 0;
  const double leaf = eps / (2.0 * c_max);
  int depth = 0;
  while (r > leaf) {
    r /= (1.0 + theta);
    ++depth;
  }
  return depth;
}

double leaf_bound(double r, double c_max, double eps, double theta) {
  if (c_max <= 0.0) return 2.0;
  const double ratio = 2.0 * r * c_max / eps;
  const double D = ratio <= 1.0 ? 0.0 : std::ceil(std::log(ratio) / std::log1p(theta));
  return std::exp2(D + 1.0);
}

std::variant<Combined, Opposite> combine_separators(const Hyperplane& first,
                                                    const Hyperplane& second, const Vector& z,
                                                    double r) {
  const double n1 = first.h.norm(), n2 = second.h.norm();
  if (n1 <= tol::kZero || n2 <= tol::kZero) {
    throw Error(ErrorCode::ZeroNormal, "separator with zero normal");
  }
  if ((first.h / n1 + second.h / n2).norm() <= kOppositeTol) return Opposite{n1 / n2};

  // f(alpha) = g(alpha) / sqrt(q(alpha)) with g linear and q quadratic; the
  // stationarity condition g' q = g q' / 2 reduces to a linear equation.
  const double g1 = first.h.dot(z) - first.delta;
  const double g2 = second.h.dot(z) - second.delta;
  const double s = g1 - g2;
  const Vector diff = first.h - second.h;
  const double qa = diff.squaredNorm();
  const double qb = second.h.dot(diff);
  const double qc = second.h.squaredNorm();

  double best_alpha = 1.0;
  double best = distance_for(first, second, 1.0, z);
  auto consider = [&](double alpha) {
    const double f = distance_for(first, second, alpha, z);
    if (f > best) {
      best = f;
      best_alpha = alpha;
    }
  };
  consider(0.0);
  const double denom = s * qb - g2 * qa;
  if (denom != 0.0) {
    const double alpha = (g2 * qb - s * qc) / denom;
    if (alpha > 0.0 && alpha < 1.0) consider(alpha);
  }

  if (best < r - tol::cert(r)) {
    throw Error(ErrorCode::CombinationFailed,
                "best combined distance " + std::to_string(best) + " < r = " + std::to_string(r));
  }
  Combined out;
  out.alpha = best_alpha;
  out.hyperplane.h = best_alpha * first.h + (1.0 - best_alpha) * second.h;
  out.hyperplane.delta = best_alpha * first.delta + (1.0 - best_alpha) * second.delta;
  out.hyperplane.cert = Certificate::combine(best_alpha, first.cert, 1.0 - best_alpha, second.cert);
  return out;
}

ComplexityEstimate complexity_estimate(const LinearSystem& sys, const Vector& z, double r,
                                       double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
  ComplexityEstimate est;
  const double n = static_cast<double>(sys.n());
  const double m = static_cast<double>(sys.m());
  const double c = sys.c_max();
  est.N = sys.l() ? static_cast<Index>((sys.C().array() != 0.0).count()) : 0;
  est.rho = z.size() ? z.lpNorm<Eigen::Infinity>() : 0.0;
  const double setup = m * m * m + m * m * n + n * n * m;
  if (c <= 0.0) {
    est.K = 1.0;
    est.mu = std::numeric_limits<double>::infinity();
    est.predicted_ops = setup + n * n;
    return est;
  }
  est.K = std::pow(r * c / eps, 1.0 / std::log2(1.4));
  est.mu = 2.0 * eps / (28.0 * n * c * c);
  const double inner =
      (est.rho + std::log(std::max(est.K, 1.0)) * (r + n * est.mu)) / est.mu;
  est.predicted_ops =
      setup + est.K * (n * std::log(std::max(inner, 1.0)) + n * n + static_cast<double>(est.N));
  return est;
}

std::uint64_t default_node_budget(const LinearSystem& sys, double r, double eps) {
  const double K = complexity_estimate(sys, Vector::Zero(sys.n()), r, eps).K;
  const double budget = std::ceil(10.0 * K);
  if (!(budget < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(budget));
}

DnCResult dnc(const ElementaryProcedure& ep, const Vector& z, double r, const DnCParams& params) {
  if (!(r > 0.0)) throw Error(ErrorCode::PreconditionViolated, "radius must be positive");
  if (!(params.theta > 0.0)) throw Error(ErrorCode::PreconditionViolated, "theta must be positive");
  if (!(params.eps > 0.0)) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
  if (z.size() != ep.system().n()) throw Error(ErrorCode::DimensionMismatch, "center dimension");
  const std::uint64_t budget =
      params.node_budget ? *params.node_budget : default_node_budget(ep.system(), r, params.eps);
  if (budget < 1) throw Error(ErrorCode::PreconditionViolated, "node budget must be >= 1");

  Recursion rec(ep, params, budget);
  DnCResult result{rec.run(z, r, 0), {}, 0, budget};
  result.counters = rec.counters();
  result.depth = dnc_depth(r, ep.c_max(), params.eps, params.theta);
  return result;
}

DnCResult dnc(const LinearSystem& sys, const Vector& z, double r, const DnCParams& params) {
  ElementaryProcedure ep(sys);
  return dnc(ep, z, r, params);
}

}  // namespace relaxfeas
