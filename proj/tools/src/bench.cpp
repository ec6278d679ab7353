#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "relaxfeas/classical.hpp"
#include "relaxfeas/errors.hpp"
#include "relaxfeas/generators.hpp"
#include "relaxfeas/instance_io.hpp"

namespace relaxfeas::cli {

namespace {

struct Row {
  std::string experiment;
  std::string algo;
  std::string metric;
  double avg = 0, sd = 0, min = 0, max = 0;
  double time_avg = 0, time_sd = 0;
  bool timed_out = false;
};

struct Experiment {
  std::string name;
  std::vector<Instance> instances;
};

struct Sample {
  double value = 0.0;
  double time = 0.0;
  bool timed_out = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string seconds(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::vector<Experiment> build_suite(const BenchOptions& opt) {
  std::vector<Experiment> out;
  if (opt.suite == "random01") {
    for (int n : parse_int_list(opt.dims)) {
      if (n < 2) throw UsageError("random01 dimensions must be >= 2");
      Experiment e{"random-" + std::to_string(n) + "d", {}};
      for (int i = 0; i < opt.per_dim; ++i) {
        e.instances.push_back(gen_random01(n, opt.seed + static_cast<std::uint64_t>(i)));
      }
      out.push_back(std::move(e));
    }
  } else if (opt.suite == "wedge") {
    for (int a : parse_int_list(opt.alphas)) {
      if (a < 1) throw UsageError("wedge parameters must be >= 1");
      out.push_back({"wedge-a" + std::to_string(a), {gen_wedge(a)}});
    }
  } else {
    namespace fs = std::filesystem;
    if (opt.dir.empty()) throw UsageError("--suite files needs --dir");
    if (!fs::is_directory(opt.dir)) {
      throw Error(ErrorCode::IoError, "instance directory " + opt.dir + " does not exist");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back({f.stem().string(), {read_instance(f)}});
  }
  return out;
}

std::vector<std::string> default_algos(const std::string& suite) {
  if (suite == "random01") return {"relax", "relax-rand", "chubanov"};
  return {"relax", "relax-rand"};
}

std::string metric_for(const std::string& algo) {
  return algo == "relax" || algo == "relax-rand" ? "iterations" : "recursions";
}

Sample run_one(const Instance& inst, const std::string& algo, const BenchOptions& opt) {
  SolveOptions so;
  so.algo = algo;
  so.timeout = opt.timeout;
  so.budget = opt.budget;
  so.seed = opt.seed;
  if (algo == "relax-rand") {
    RelaxConfig cfg;
    cfg.selection = Selection::RandomViolation;
    cfg.seed = opt.seed;
    cfg.time_limit = opt.timeout;
    if (opt.budget) cfg.max_iters = *opt.budget;
    const Vector z0 = start_point(inst).value_or(Vector::Zero(inst.system.n()));
    const RelaxStats s = relax_random_stats(inst.system, z0, cfg, opt.runs);
    return {s.avg_iters, s.avg_time, s.budget_exceeded > 0};
  }
  const SolveReport r = run_algorithm(inst, so);
  const double value = static_cast<double>(metric_for(algo) == "iterations" ? r.iterations
                                                                              : r.recursions);
  return {value, r.elapsed, r.decision == Decision::BudgetExceeded};
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RELAXFEAS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

void mean_sd(const std::vector<double>& v, double& mean, double& sd) {
  double sum = 0.0;
  for (double x : v) sum += x;
  mean = sum / static_cast<double>(v.size());
  double sq = 0.0;
  for (double x : v) sq += (x - mean) * (x - mean);
  sd = std::sqrt(sq / static_cast<double>(v.size()));
}

std::vector<Row> run_suite(const std::vector<Experiment>& suite,
                           const std::vector<std::string>& algos, const BenchOptions& opt) {
  struct Job {
    std::size_t exp, algo, inst;
  };
  std::vector<Job> jobs;
  for (std::size_t e = 0; e < suite.size(); ++e) {
    for (std::size_t a = 0; a < algos.size(); ++a) {
      for (std::size_t i = 0; i < suite[e].instances.size(); ++i) jobs.push_back({e, a, i});
    }
  }
  std::vector<Sample> samples(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      try {
        const Job& job = jobs[j];
        samples[j] = run_one(suite[job.exp].instances[job.inst], algos[job.algo], opt);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = worker_count(jobs.size());
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Row> rows;
  std::size_t j = 0;
  for (const auto& exp : suite) {
    for (const auto& algo : algos) {
      Row row{exp.name, algo, metric_for(algo)};
      std::vector<double> values, times;
      for (std::size_t i = 0; i < exp.instances.size(); ++i, ++j) {
        values.push_back(samples[j].value);
        times.push_back(samples[j].time);
        row.timed_out = row.timed_out || samples[j].timed_out;
      }
      if (!values.empty()) {
        mean_sd(values, row.avg, row.sd);
        mean_sd(times, row.time_avg, row.time_sd);
        row.min = *std::min_element(values.begin(), values.end());
        row.max = *std::max_element(values.begin(), values.end());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

const char* kHeader = "experiment,algo,metric,avg,std,min,max,time_avg,time_std,timed_out";

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kHeader << '\n';
  for (const auto& r : rows) {
    os << r.experiment << ',' << r.algo << ',' << r.metric << ',' << num(r.avg) << ','
       << num(r.sd) << ',' << num(r.min) << ',' << num(r.max) << ',' << seconds(r.time_avg) << ','
       << seconds(r.time_sd) << ',' << (r.timed_out ? "true" : "false") << '\n';
  }
}

std::vector<Row> read_csv(std::istream& is) {
  std::vector<Row> rows;
  std::string line;
  if (!std::getline(is, line) || line != kHeader) {
    throw Error(ErrorCode::ParseError, "bench CSV header mismatch");
  }
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 10 fields");
    }
    try {
      rows.push_back({f[0], f[1], f[2], std::stod(f[3]), std::stod(f[4]), std::stod(f[5]),
                      std::stod(f[6]), std::stod(f[7]), std::stod(f[8]), f[9] == "true"});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad number");
    }
  }
  return rows;
}

void render_table(std::ostream& os, const std::vector<Row>& rows) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"experiment", "algo", "metric", "avg/std", "min/max", "time avg/std (s)"});
  for (const auto& r : rows) {
    if (r.timed_out) {
      cells.push_back({r.experiment, r.algo, r.metric, "--", "--", "--"});
    } else {
      cells.push_back({r.experiment, r.algo, r.metric, num(r.avg) + " / " + num(r.sd),
                       num(r.min) + " / " + num(r.max),
                       seconds(r.time_avg) + " / " + seconds(r.time_sd)});
    }
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      os << (c + 1 < row.size() ? "  " : "\n");
    }
  }
}

}  // namespace

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  try {
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(spec.substr(0, dots));
      const int hi = std::stoi(spec.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      for (const auto& part : split(spec, ',')) out.push_back(std::stoi(part));
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad integer list '" + spec + "'");
  }
  if (out.empty()) throw UsageError("empty integer list '" + spec + "'");
  return out;
}

int run_bench(const BenchOptions& opt) {
  if (opt.per_dim < 1) throw UsageError("--per-dim must be >= 1");
  if (opt.runs < 1) throw UsageError("--runs must be >= 1");
  const std::vector<std::string> algos =
      opt.algos.empty() ? default_algos(opt.suite) : split(opt.algos, ',');
  for (const auto& a : algos) {
    if (a != "relax" && a != "relax-rand" && a != "chubanov" && a != "lfs-tu" && a != "lfg") {
      throw UsageError("algorithm '" + a + "' is not available in bench");
    }
  }
  const std::vector<Row> rows = run_suite(build_suite(opt), algos, opt);
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + opt.out);
    write_csv(f, rows);
  }
  render_table(std::cout, rows);
  return kFeasible;
}

int run_table(const TableOptions& opt) {
  std::ifstream f(opt.csv);
  if (!f) throw Error(ErrorCode::IoError, "cannot read " + opt.csv);
  render_table(std::cout, read_csv(f));
  return kFeasible;
}

}  // namespace relaxfeas::cli
