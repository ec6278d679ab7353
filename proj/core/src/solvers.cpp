#include "relaxfeas/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(Clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
};

DnCParams dnc_params(const SolverLimits& limits) {
  DnCParams p;
  p.theta = limits.theta;
  p.eps = 1.0;
  p.node_budget = limits.node_budget;
  p.deadline = limits.deadline;
  return p;
}

const char* outcome_name(const DnCOutcome& o) {
  switch (o.index()) {
    case 0: return "solution";
    case 1: return "separator";
    case 2: return "failure";
    default: return "budget";
  }
}

void account(SolveReport& report, const DnCResult& res, TraceEntry entry) {
  report.recursions += res.counters.nodes;
  report.ep_calls += res.counters.ep_calls;
  entry.recursions = res.counters.nodes;
  entry.ep_calls = res.counters.ep_calls;
  report.trace.push_back(std::move(entry));
}

void finish(SolveReport& report, Decision d, const Stopwatch& clock) {
  report.decision = d;
  report.elapsed = clock.seconds();
}

void finish_budget(SolveReport& report, const BudgetExceeded& b, const Stopwatch& clock) {
  report.timed_out = b.timed_out;
  finish(report, Decision::BudgetExceeded, clock);
}

/// x / t from a homogenized point, checked against sys.
Vector dehomogenize(const LinearSystem& sys, const Vector& xt, Index n) {
  const double t = xt(n);
  if (!(t > 0.0)) throw Error(ErrorCode::PreconditionViolated, "homogenizing coordinate t <= 0");
  Vector x = xt.head(n) / t;
  if (!satisfies(sys, x)) {
    throw Error(ErrorCode::PreconditionViolated, "D&C point does not satisfy the input system");
  }
  return x;
}

bool is_integral(const Matrix& M) { return (M.array() == M.array().round()).all(); }
bool is_integral(const Vector& v) { return (v.array() == v.array().round()).all(); }

}  // namespace

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Feasible: return "feasible";
    case Decision::Infeasible: return "infeasible";
    case Decision::NoIntegerSolutions: return "no-integer-solutions";
    case Decision::BudgetExceeded: return "budget-exceeded";
  }
  return "budget-exceeded";
}

// ---------------------------------------------------------------------------
// LFS

double lfs_radius(Index n, double delta, double r) {
  return 2.0 * static_cast<double>(n) * delta * std::sqrt(r * r + 1.0);
}

SolveReport lfs(const LFSInput& in, const SolverLimits& limits) {
  Stopwatch clock;
  if (in.A.rows() != in.b.size()) throw Error(ErrorCode::DimensionMismatch, "A and b differ");
  if (!(in.r > 0.0)) throw Error(ErrorCode::PreconditionViolated, "r must be positive");
  if (!(in.delta >= 1.0)) throw Error(ErrorCode::PreconditionViolated, "delta must be >= 1");
  const Index n = in.A.cols();
  const Matrix C = -Matrix::Identity(n, n);
  const LinearSystem sys(in.A, in.b, C, Vector::Zero(n));

  SolveReport report;
  report.iterations = 1;
  const RowReduction red = independent_rows(in.A, in.b);
  if (!red.consistent) {
    report.trace.push_back({"algebra", "inconsistent equalities", std::nullopt, 0, 0});
    finish(report, Decision::Infeasible, clock);
    return report;
  }
  const LinearSystem reduced(select_rows(in.A, red.rows), select_rows(in.b, red.rows), C,
                             Vector::Zero(n));
  const double rhat = lfs_radius(n, in.delta, in.r);
  const DnCResult res =
      dnc(strengthen(homogenize(reduced), 1.0), Vector::Zero(n + 1), rhat, dnc_params(limits));
  account(report, res, {outcome_name(res.outcome), "", std::nullopt, 0, 0});

  if (auto* s = std::get_if<ApproxSolution>(&res.outcome)) {
    report.x = dehomogenize(sys, s->x, n);
    finish(report, Decision::Feasible, clock);
  } else if (auto* b = std::get_if<BudgetExceeded>(&res.outcome)) {
    finish_budget(report, *b, clock);
  } else {
    finish(report, Decision::Infeasible, clock);
  }
  return report;
}

SolveReport lfs_bounded(const Matrix& A, const Vector& b, double lambda, double delta,
                        const SolverLimits& limits) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::PreconditionViolated, "lambda must be positive");
  const Index n = A.cols();
  const LinearSystem standard = standardize_bounded(A, b, lambda);
  LFSInput in{standard.A(), standard.b(), lambda * std::sqrt(2.0 * static_cast<double>(n)),
              delta};
  SolveReport report = lfs(in, limits);
  if (report.x) {
    Vector x = report.x->head(n);
    if (!satisfies(box_system(A, b, lambda), x)) {
      throw Error(ErrorCode::PreconditionViolated, "mapped point violates the bounded system");
    }
    report.x = std::move(x);
  }
  return report;
}

SolveReport lfs_tu(const Matrix& A, const Vector& b, double lambda, const SolverLimits& limits) {
  return lfs_bounded(A, b, lambda, 1.0, limits);
}

double delta_bound(const Matrix& A) {
  const double n = static_cast<double>(std::min(A.rows(), A.cols()));
  const double amax = A.size() ? A.cwiseAbs().maxCoeff() : 0.0;
  return std::max(1.0, std::pow(n, n / 2.0) * std::pow(amax, n));
}

// ---------------------------------------------------------------------------
// LFG

int bit_size(double v) {
  const double a = std::fabs(v);
  return 1 + static_cast<int>(std::ceil(std::log2(a + 1.0)));
}

int facet_complexity(const LinearSystem& sys) {
  int phi = 0;
  auto row_bits = [](const auto& row, double rhs) {
    int bits = bit_size(rhs);
    for (Index j = 0; j < row.size(); ++j) bits += bit_size(row(j));
    return bits + 1;
  };
  for (Index i = 0; i < sys.m(); ++i) phi = std::max(phi, row_bits(sys.A().row(i), sys.b()(i)));
  for (Index k = 0; k < sys.l(); ++k) phi = std::max(phi, row_bits(sys.C().row(k), sys.d()(k)));
  return std::max(phi, static_cast<int>(sys.n()) + 1);
}

int bit_length(const LinearSystem& sys) {
  int total = 0;
  auto add = [&total](const auto& block) {
    for (Index i = 0; i < block.size(); ++i) total += bit_size(block.data()[i]);
  };
  add(sys.A());
  add(sys.b());
  add(sys.C());
  add(sys.d());
  return total;
}

double log2_containment_radius(Index n, int phi) {
  const double dn = static_cast<double>(n);
  return 5.0 * dn * dn * static_cast<double>(phi) + 0.5 * std::log2(dn);
}

Vector round_strict_solution(const LinearSystem& sys, const Vector& x0, double nu) {
  if (x0.size() != sys.n()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  if (sys.l() == 0) return x0;
  const Vector excess = sys.C() * x0 - sys.d();
  if (excess.maxCoeff() <= 0.0) return x0;

  const double scale = std::max({x0.lpNorm<Eigen::Infinity>(), sys.d().lpNorm<Eigen::Infinity>(),
                                 sys.m() ? sys.b().lpNorm<Eigen::Infinity>() : 0.0});
  const double window = std::max(nu, 1e-9 * (1.0 + scale));
  std::vector<Index> tight;
  for (Index k = 0; k < sys.l(); ++k) {
    if (excess(k) >= -window) tight.push_back(k);
  }
  const Index m = sys.m(), t = static_cast<Index>(tight.size());
  Matrix M(m + t, sys.n());
  Vector rhs(m + t);
  M.topRows(m) = sys.A();
  rhs.head(m) = sys.b();
  M.bottomRows(t) = select_rows(sys.C(), tight);
  rhs.tail(t) = select_rows(sys.d(), tight);

  Vector x = x0 + least_norm_solution(M, rhs - M * x0);
  if (!satisfies(sys, x)) {
    throw Error(ErrorCode::RoundingFailed, "projection onto the tight rows leaves the system");
  }
  return x;
}

SolveReport lfg(const LinearSystem& sys, const LFGOptions& opt, const SolverLimits& limits) {
  Stopwatch clock;
  if (!is_integral(sys.A()) || !is_integral(sys.b()) || !is_integral(sys.C()) ||
      !is_integral(sys.d())) {
    throw Error(ErrorCode::InvalidSystem, "lfg expects integer data");
  }
  const Index n = sys.n();
  const double nu = opt.nu_override ? *opt.nu_override : std::exp2(-2.0 * bit_length(sys));
  double radius;
  if (opt.radius_override) {
    radius = *opt.radius_override;
  } else {
    const double log2r = log2_containment_radius(n, facet_complexity(sys));
    if (log2r > 300.0) {
      throw Error(ErrorCode::RadiusOverflow,
                  "containment radius 2^" + std::to_string(log2r) + " exceeds 2^300");
    }
    radius = std::exp2(log2r);
  }
  if (!(radius > 0.0)) throw Error(ErrorCode::PreconditionViolated, "radius must be positive");

  SolveReport report;
  report.iterations = 1;
  const RowReduction red = independent_rows(sys.A(), sys.b());
  if (!red.consistent) {
    report.trace.push_back({"algebra", "inconsistent equalities", std::nullopt, 0, 0});
    finish(report, Decision::Infeasible, clock);
    return report;
  }
  const LinearSystem relaxed(select_rows(sys.A(), red.rows), select_rows(sys.b(), red.rows),
                             sys.C(), (sys.d().array() + nu / 2.0).matrix());
  const DnCResult res =
      dnc(strengthen(homogenize(relaxed), 1.0), Vector::Zero(n + 1), radius, dnc_params(limits));
  account(report, res, {outcome_name(res.outcome), "", std::nullopt, 0, 0});

  if (auto* s = std::get_if<ApproxSolution>(&res.outcome)) {
    const Vector x0 = s->x.head(n) / s->x(n);
    Vector x = round_strict_solution(sys, x0, nu);
    report.rounded = x != x0;
    if (!satisfies(sys, x)) throw Error(ErrorCode::RoundingFailed, "rounded point does not verify");
    report.x = std::move(x);
    finish(report, Decision::Feasible, clock);
  } else if (auto* b = std::get_if<BudgetExceeded>(&res.outcome)) {
    finish_budget(report, *b, clock);
  } else {
    finish(report, Decision::Infeasible, clock);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Chubanov relaxation

namespace {

struct Block {
  Matrix E;
  Vector f;
};

Vector least_norm_or_zero(const Block& eq, Index n) {
  return eq.E.rows() ? least_norm_solution(eq.E, eq.f) : Vector::Zero(n);
}

/// Decides {E x = f, c x <= d} exactly: the value of c x is either constant
/// on the affine set or unbounded below along the component of c orthogonal
/// to the rows of E.
std::optional<Vector> decide_single_row(const Block& eq, const Vector& c, double d, Index n) {
  Vector x = least_norm_or_zero(eq, n);
  Vector c_perp = c;
  if (eq.E.rows()) c_perp = AffineProjector(eq.E, Vector::Zero(eq.E.rows())).project(c);
  const double excess = c.dot(x) - d;
  if (c_perp.norm() <= 1e-9 * c.norm()) {
    if (excess > tol::cert(std::fabs(d) + c.cwiseAbs().dot(x.cwiseAbs()))) return std::nullopt;
    return x;
  }
  if (excess > 0.0) x -= (excess / c_perp.squaredNorm()) * c_perp;
  return x;
}

}  // namespace

SolveReport chubanov_relaxation(const LinearSystem& sys, double r_star,
                                const SolverLimits& limits) {
  Stopwatch clock;
  if (!(r_star > 0.0)) throw Error(ErrorCode::PreconditionViolated, "r_star must be positive");
  const Index n = sys.n();
  SolveReport report;
  Block eq{sys.A(), sys.b()};
  std::vector<Index> ineq(static_cast<std::size_t>(sys.l()));
  for (Index k = 0; k < sys.l(); ++k) ineq[static_cast<std::size_t>(k)] = k;

  // An empty P is only reported as Infeasible before any row has been fixed;
  // afterwards the rows moved so far hold only for integer points.
  auto empty_decision = [&]() {
    return report.iterations <= 1 ? Decision::Infeasible : Decision::NoIntegerSolutions;
  };
  auto accept = [&](Vector x, const char* how) {
    if (!satisfies(sys, x)) return false;
    report.x = std::move(x);
    report.trace.push_back({"algebra", how, std::nullopt, 0, 0});
    finish(report, Decision::Feasible, clock);
    return true;
  };

  while (true) {
    ++report.iterations;
    if (limits.deadline && Clock::now() >= *limits.deadline) {
      finish_budget(report, BudgetExceeded{true}, clock);
      return report;
    }
    if (eq.E.rows()) {
      const RowReduction red = independent_rows(eq.E, eq.f);
      if (!red.consistent) {
        report.trace.push_back({"algebra", "inconsistent equalities", std::nullopt, 0, 0});
        finish(report, empty_decision(), clock);
        return report;
      }
      eq = Block{select_rows(eq.E, red.rows), select_rows(eq.f, red.rows)};
    }

    if (ineq.empty() || eq.E.rows() == n) {
      if (accept(least_norm_or_zero(eq, n), "equality solution")) return report;
      report.trace.push_back({"algebra", "equality solution violates inequalities", std::nullopt,
                              0, 0});
      finish(report, empty_decision(), clock);
      return report;
    }
    if (ineq.size() == 1) {
      const Index k = ineq.front();
      auto x = decide_single_row(eq, sys.C().row(k).transpose(), sys.d()(k), n);
      if (x && accept(std::move(*x), "single inequality")) return report;
      if (x) throw Error(ErrorCode::PreconditionViolated, "single-row solution does not verify");
      report.trace.push_back({"algebra", "single inequality unsatisfiable", std::nullopt, 0, 0});
      finish(report, empty_decision(), clock);
      return report;
    }

    const LinearSystem current(eq.E, eq.f, select_rows(sys.C(), ineq), select_rows(sys.d(), ineq));
    const double r = inference_radius(current, r_star);
    const DnCResult res = dnc(strengthen(homogenize(current), 1.0), Vector::Zero(n + 1), r,
                              dnc_params(limits));
    const Conclusion c = interpret(current, res.outcome, r, r_star);
    TraceEntry entry{outcome_name(res.outcome), "", std::nullopt, 0, 0};

    if (auto* s = std::get_if<ExactSolution>(&c)) {
      entry.conclusion = "solution";
      account(report, res, std::move(entry));
      if (!satisfies(sys, s->x)) {
        throw Error(ErrorCode::PreconditionViolated, "D&C point does not satisfy the input system");
      }
      report.x = s->x;
      finish(report, Decision::Feasible, clock);
      return report;
    }
    if (std::holds_alternative<Infeasible>(c)) {
      entry.conclusion = "empty";
      account(report, res, std::move(entry));
      finish(report, empty_decision(), clock);
      return report;
    }
    if (auto* u = std::get_if<Undecided>(&c)) {
      entry.conclusion = "undecided";
      account(report, res, std::move(entry));
      finish_budget(report, BudgetExceeded{u->timed_out}, clock);
      return report;
    }

    std::optional<Index> hint;
    if (auto* ie = std::get_if<ImpliedEqualityExists>(&c)) {
      entry.conclusion = "implied equality";
      hint = ie->index_hint;
    } else {
      entry.conclusion = "integer implied equality";
      hint = std::get<IntegerImpliedEqualityExists>(c).index_hint;
    }
    if (!hint || *hint < 0 || *hint >= static_cast<Index>(ineq.size())) {
      entry.conclusion += ", hint rejected";
      account(report, res, std::move(entry));
      finish(report, Decision::NoIntegerSolutions, clock);
      return report;
    }
    const Index row = ineq[static_cast<std::size_t>(*hint)];
    entry.moved_row = row;
    account(report, res, std::move(entry));

    const Index m = eq.E.rows();
    Matrix E(m + 1, n);
    E << eq.E, sys.C().row(row);
    Vector f(m + 1);
    f << eq.f, sys.d()(row);
    eq = Block{std::move(E), std::move(f)};
    ineq.erase(ineq.begin() + *hint);
  }
}

}  // namespace relaxfeas
