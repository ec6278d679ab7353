#include "relaxfeas/classical.hpp"

#include <cmath>
#include <vector>

#include "relaxfeas/errors.hpp"
#include "relaxfeas/generators.hpp"

namespace relaxfeas {

namespace {

/// Row r < m is equality row r, otherwise inequality row r - m.
class RowSet {
 public:
  explicit RowSet(const LinearSystem& sys)
      : sys_(sys), m_(sys.m()), eq_norms_(sys.A().rowwise().norm()),
        ineq_norms_(sys.ineq_row_norms()) {}

  Index size() const { return m_ + sys_.l(); }

  /// Normalized violation; negative values mean satisfied.
  void violations(const Vector& z, Vector& out) const {
    out.resize(size());
    if (m_) out.head(m_) = ((sys_.A() * z - sys_.b()).cwiseAbs()).cwiseQuotient(eq_norms_);
    if (sys_.l()) out.tail(sys_.l()) = (sys_.C() * z - sys_.d()).cwiseQuotient(ineq_norms_);
  }

  void step(Index r, double lambda, Vector& z) const {
    if (r < m_) {
      const auto a = sys_.A().row(r);
      z -= lambda * ((a.dot(z) - sys_.b()(r)) / (eq_norms_(r) * eq_norms_(r))) * a.transpose();
    } else {
      const Index k = r - m_;
      const auto c = sys_.C().row(k);
      z -= lambda * ((c.dot(z) - sys_.d()(k)) / (ineq_norms_(k) * ineq_norms_(k))) * c.transpose();
    }
  }

 private:
  const LinearSystem& sys_;
  Index m_;
  Vector eq_norms_;
  Vector ineq_norms_;
};

}  // namespace

SolveReport relax_solve(const LinearSystem& sys, const Vector& z0, const RelaxConfig& cfg,
                        const RelaxObserver& observer) {
  if (!(cfg.lambda > 0.0 && cfg.lambda <= 2.0)) {
    throw Error(ErrorCode::PreconditionViolated, "lambda must lie in (0, 2]");
  }
  if (!(cfg.eps > 0.0)) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
  if (z0.size() != sys.n()) throw Error(ErrorCode::DimensionMismatch, "start point dimension");

  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.time_limit));
  const RowSet rows(sys);
  Rng rng(cfg.seed);
  std::vector<Index> candidates;
  Vector z = z0, viol;
  SolveReport report;

  while (true) {
    rows.violations(z, viol);
    Index pick = -1;
    if (cfg.selection == Selection::MaxViolation) {
      double worst = cfg.eps;
      for (Index r = 0; r < viol.size(); ++r) {
        if (viol(r) >= worst && (pick < 0 || viol(r) > worst)) {
          worst = viol(r);
          pick = r;
        }
      }
    } else {
      candidates.clear();
      for (Index r = 0; r < viol.size(); ++r) {
        if (viol(r) >= cfg.eps) candidates.push_back(r);
      }
      if (!candidates.empty()) {
        const auto i = rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1);
        pick = candidates[static_cast<std::size_t>(i)];
      }
    }
    if (pick < 0) {
      report.decision = Decision::Feasible;
      report.x = z;
      break;
    }
    if (report.iterations >= cfg.max_iters) {
      report.decision = Decision::BudgetExceeded;
      break;
    }
    if ((report.iterations & 1023u) == 1023u && Clock::now() >= deadline) {
      report.decision = Decision::BudgetExceeded;
      report.timed_out = true;
      break;
    }
    rows.step(pick, cfg.lambda, z);
    ++report.iterations;
    if (observer) observer(report.iterations, z);
  }
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

RelaxStats relax_random_stats(const LinearSystem& sys, const Vector& z0, const RelaxConfig& cfg,
                              int runs) {
  if (runs < 1) throw Error(ErrorCode::PreconditionViolated, "runs must be >= 1");
  RelaxStats s;
  s.runs = runs;
  std::vector<double> iters, times;
  for (int i = 0; i < runs; ++i) {
    RelaxConfig run_cfg = cfg;
    run_cfg.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    const SolveReport r = relax_solve(sys, z0, run_cfg);
    if (r.decision == Decision::BudgetExceeded) ++s.budget_exceeded;
    iters.push_back(static_cast<double>(r.iterations));
    times.push_back(r.elapsed);
    s.min_iters = i == 0 ? r.iterations : std::min(s.min_iters, r.iterations);
    s.max_iters = std::max(s.max_iters, r.iterations);
  }
  auto mean_std = [runs](const std::vector<double>& v, double& mean, double& sd) {
    double sum = 0.0;
    for (double x : v) sum += x;
    mean = sum / runs;
    double sq = 0.0;
    for (double x : v) sq += (x - mean) * (x - mean);
    sd = std::sqrt(sq / runs);
  };
  mean_std(iters, s.avg_iters, s.std_iters);
  mean_std(times, s.avg_time, s.std_time);
  return s;
}

}  // namespace relaxfeas
