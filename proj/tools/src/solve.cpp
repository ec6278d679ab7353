#include <cmath>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "relaxfeas/classical.hpp"
#include "relaxfeas/errors.hpp"
#include "relaxfeas/instance_io.hpp"

namespace relaxfeas::cli {

namespace {

Clock::time_point deadline_after(double seconds) {
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

SolverLimits limits_from(const SolveOptions& opt) {
  SolverLimits l;
  l.theta = opt.theta;
  l.node_budget = opt.budget;
  l.deadline = deadline_after(opt.timeout);
  return l;
}

Vector start_or_zero(const Instance& inst) {
  if (auto z = start_point(inst)) return *z;
  return Vector::Zero(inst.system.n());
}

/// ep and dnc run on C x <= d - eps so an eps-approximate point is exact.
SolveReport run_ep(const Instance& inst, const SolveOptions& opt) {
  const auto start = Clock::now();
  const double eps = opt.eps.value_or(1.0);
  const LinearSystem tight = tighten(inst.system, eps);
  const ElementaryProcedure ep(tight);
  double r = opt.radius.value_or(ep.max_radius(eps));
  if (std::isinf(r)) r = 1.0;
  SolveReport report;
  report.iterations = 1;
  report.ep_calls = 1;
  report.recursions = 1;
  const EPOutcome out = ep(start_or_zero(inst), r, eps);
  if (auto* s = std::get_if<ApproxSolution>(&out)) {
    if (!satisfies(inst.system, s->x)) {
      throw Error(ErrorCode::PreconditionViolated, "approximate point does not verify");
    }
    report.decision = Decision::Feasible;
    report.x = s->x;
  } else {
    report.decision = Decision::Infeasible;
  }
  report.trace.push_back({out.index() == 0 ? "solution" : "separator", "", std::nullopt, 1, 1});
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SolveReport run_dnc(const Instance& inst, const SolveOptions& opt) {
  if (!opt.radius) throw UsageError("--algo dnc needs --radius");
  const auto start = Clock::now();
  const double eps = opt.eps.value_or(1.0);
  DnCParams p;
  p.theta = opt.theta;
  p.eps = eps;
  p.node_budget = opt.budget;
  p.deadline = deadline_after(opt.timeout);
  const DnCResult res = dnc(tighten(inst.system, eps), start_or_zero(inst), *opt.radius, p);
  SolveReport report;
  report.iterations = 1;
  report.recursions = res.counters.nodes;
  report.ep_calls = res.counters.ep_calls;
  static const char* names[] = {"solution", "separator", "failure", "budget"};
  report.trace.push_back({names[res.outcome.index()], "", std::nullopt, res.counters.nodes,
                          res.counters.ep_calls});
  if (auto* s = std::get_if<ApproxSolution>(&res.outcome)) {
    if (!satisfies(inst.system, s->x)) {
      throw Error(ErrorCode::PreconditionViolated, "approximate point does not verify");
    }
    report.decision = Decision::Feasible;
    report.x = s->x;
  } else if (auto* b = std::get_if<BudgetExceeded>(&res.outcome)) {
    report.decision = Decision::BudgetExceeded;
    report.timed_out = b->timed_out;
  } else {
    report.decision = Decision::Infeasible;
  }
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SolveReport run_lfs(const Instance& inst, const SolveOptions& opt, double delta) {
  const LinearSystem& sys = inst.system;
  if (auto lambda = box_bound(sys)) {
    return lfs_bounded(sys.A(), sys.b(), *lambda, delta, limits_from(opt));
  }
  if (is_standard_form(sys)) {
    if (!opt.radius) throw UsageError("standard-form lfs needs --radius");
    return lfs({sys.A(), sys.b(), *opt.radius, delta}, limits_from(opt));
  }
  throw Error(ErrorCode::InvalidSystem,
              "lfs expects inequalities -x <= 0 or 0 <= x <= lambda in [I; -I] layout");
}

SolveReport run_relax(const Instance& inst, const SolveOptions& opt, Selection sel) {
  RelaxConfig cfg;
  cfg.lambda = opt.lambda;
  cfg.eps = opt.eps.value_or(1e-6);
  cfg.selection = sel;
  cfg.seed = opt.seed;
  if (opt.budget) cfg.max_iters = *opt.budget;
  cfg.time_limit = opt.timeout;
  return relax_solve(inst.system, start_or_zero(inst), cfg);
}

void print_human(const Instance& inst, const SolveOptions& opt, const SolveReport& r) {
  std::cout << "instance: " << inst.name << '\n'
            << "algorithm: " << opt.algo << '\n'
            << "decision: " << to_string(r.decision) << '\n';
  if (r.x) {
    std::cout << "x:";
    for (Index j = 0; j < r.x->size(); ++j) std::cout << ' ' << format_number((*r.x)(j));
    std::cout << '\n';
  }
  std::cout << "recursions: " << r.recursions << '\n'
            << "ep_calls: " << r.ep_calls << '\n'
            << "iterations: " << r.iterations << '\n';
  if (r.timed_out) std::cout << "timed_out: true\n";
  if (r.rounded) std::cout << "rounded: true\n";
  for (const auto& t : r.trace) {
    std::cout << "trace: " << t.outcome;
    if (!t.conclusion.empty()) std::cout << " (" << t.conclusion << ")";
    if (t.moved_row) std::cout << " moved row " << *t.moved_row;
    std::cout << '\n';
  }
  std::cout << "elapsed: " << std::fixed << std::setprecision(6) << r.elapsed << " s\n";
}

void print_json(const Instance& inst, const SolveOptions& opt, const SolveReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "relaxfeas.solve/1";
  j["instance"] = inst.name;
  j["algorithm"] = opt.algo;
  j["decision"] = to_string(r.decision);
  if (r.x) {
    std::vector<double> x(r.x->data(), r.x->data() + r.x->size());
    j["x"] = x;
  } else {
    j["x"] = nullptr;
  }
  j["recursions"] = r.recursions;
  j["ep_calls"] = r.ep_calls;
  j["iterations"] = r.iterations;
  j["timed_out"] = r.timed_out;
  j["rounded"] = r.rounded;
  auto trace = nlohmann::ordered_json::array();
  for (const auto& t : r.trace) {
    nlohmann::ordered_json e;
    e["outcome"] = t.outcome;
    e["conclusion"] = t.conclusion;
    e["moved_row"] = t.moved_row ? nlohmann::ordered_json(*t.moved_row) : nullptr;
    e["recursions"] = t.recursions;
    e["ep_calls"] = t.ep_calls;
    trace.push_back(std::move(e));
  }
  j["trace"] = std::move(trace);
  j["elapsed"] = r.elapsed;
  std::cout << j.dump(2) << '\n';
}

}  // namespace

SolveReport run_algorithm(const Instance& inst, const SolveOptions& opt) {
  const std::string& a = opt.algo;
  if (a == "ep") return run_ep(inst, opt);
  if (a == "dnc") return run_dnc(inst, opt);
  if (a == "lfs") {
    if (!opt.delta) throw UsageError("--algo lfs needs --delta");
    return run_lfs(inst, opt, *opt.delta);
  }
  if (a == "lfs-tu") return run_lfs(inst, opt, 1.0);
  if (a == "lfg") return lfg(inst.system, {opt.radius, opt.nu}, limits_from(opt));
  if (a == "chubanov") {
    double r_star;
    if (opt.radius) {
      r_star = *opt.radius;
    } else if (auto lambda = box_bound(inst.system)) {
      r_star = *lambda * std::sqrt(static_cast<double>(inst.system.n()) + 1.0);
    } else {
      throw UsageError("--algo chubanov needs --radius unless the instance is box bounded");
    }
    return chubanov_relaxation(inst.system, r_star, limits_from(opt));
  }
  if (a == "relax") return run_relax(inst, opt, Selection::MaxViolation);
  if (a == "relax-rand") return run_relax(inst, opt, Selection::RandomViolation);
  throw UsageError("unknown algorithm " + a);
}

int exit_code(const SolveReport& report) {
  switch (report.decision) {
    case Decision::Feasible: return kFeasible;
    case Decision::Infeasible:
    case Decision::NoIntegerSolutions: return kInfeasible;
    case Decision::BudgetExceeded: return kBudget;
  }
  return kError;
}

int run_solve(const SolveOptions& opt) {
  const Instance inst = read_instance(opt.instance);
  const SolveReport report = run_algorithm(inst, opt);
  if (opt.json) {
    print_json(inst, opt, report);
  } else {
    print_human(inst, opt, report);
  }
  return exit_code(report);
}

}  // namespace relaxfeas::cli
