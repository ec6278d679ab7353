#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaxfeas/solvers.hpp"

namespace CLI {
class App;
}

namespace relaxfeas::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kFeasible = 0,
  kInfeasible = 1,
  kBudget = 2,
  kError = 3,
  kUsage = 64,
};

/// Bad or missing flags detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  std::string algo;
  std::string instance;
  std::optional<double> radius;
  std::optional<double> delta;
  std::optional<double> nu;
  double lambda = 1.9;
  std::optional<double> eps;
  double theta = 0.4;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  double timeout = 600.0;
  bool json = false;
};

struct BenchOptions {
  std::string suite = "random01";
  std::string dir;
  std::string dims = "2..10";
  std::string alphas = "1..5";
  int per_dim = 10;
  int runs = 100;
  double timeout = 600.0;
  std::optional<std::uint64_t> budget;
  std::string out;
  std::string algos;
  std::uint64_t seed = 0;
};

struct GenOptions {
  std::string family;
  int n = 4;
  int alpha = 1;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out;
  std::string format = "txt";
};

struct TableOptions {
  std::string csv;
};

/// Runs one algorithm on an instance with the solve flags.
SolveReport run_algorithm(const Instance& inst, const SolveOptions& opt);

int exit_code(const SolveReport& report);

int run_solve(const SolveOptions& opt);
int run_bench(const BenchOptions& opt);
int run_gen(const GenOptions& opt);
int run_table(const TableOptions& opt);

/// "a..b" or "a,b,c" into a list of integers.
std::vector<int> parse_int_list(const std::string& spec);

}  // namespace relaxfeas::cli
