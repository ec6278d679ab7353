#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "relaxfeas/errors.hpp"

using namespace relaxfeas::cli;

int main(int argc, char** argv) {
  CLI::App app{"Linear feasibility by relaxation and divide-and-conquer"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Solve one instance");
  s->add_option("--algo", solve.algo, "ep|dnc|lfs|lfs-tu|lfg|chubanov|relax|relax-rand")
      ->required()
      ->check(CLI::IsMember({"ep", "dnc", "lfs", "lfs-tu", "lfg", "chubanov", "relax",
                             "relax-rand"}));
  s->add_option("--instance", solve.instance, "Instance file (text or JSON)")->required();
  s->add_option("--radius", solve.radius, "Ball radius (dnc, lfs, lfg, chubanov)");
  s->add_option("--delta", solve.delta, "Subdeterminant bound (lfs)");
  s->add_option("--nu", solve.nu, "Perturbation override (lfg)");
  s->add_option("--lambda", solve.lambda, "Relaxation step multiplier");
  s->add_option("--eps", solve.eps, "Tolerance (relax: 1e-6, ep/dnc: 1)");
  s->add_option("--theta", solve.theta, "D&C radius shrink parameter");
  s->add_option("--seed", solve.seed, "Seed for relax-rand");
  s->add_option("--budget", solve.budget, "Leaf budget (D&C) or iteration cap (relax)");
  s->add_option("--timeout", solve.timeout, "Seconds");
  s->add_flag("--json", solve.json, "Print JSON");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Run a benchmark suite");
  b->add_option("--suite", bench.suite, "random01|wedge|files")
      ->check(CLI::IsMember({"random01", "wedge", "files"}));
  b->add_option("--dir", bench.dir, "Instance directory for --suite files");
  b->add_option("--dims", bench.dims, "Dimensions, e.g. 2..10");
  b->add_option("--alphas", bench.alphas, "Wedge parameters, e.g. 1..5");
  b->add_option("--per-dim", bench.per_dim, "Instances per dimension");
  b->add_option("--runs", bench.runs, "Runs of relax-rand per instance");
  b->add_option("--timeout", bench.timeout, "Seconds per run");
  b->add_option("--budget", bench.budget, "Leaf budget (D&C) or iteration cap (relax)");
  b->add_option("--out", bench.out, "CSV output path");
  b->add_option("--algos", bench.algos, "Comma-separated algorithms");
  b->add_option("--seed", bench.seed, "Base seed");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate instance files");
  g->add_option("--family", gen.family, "random01|wedge")
      ->required()
      ->check(CLI::IsMember({"random01", "wedge"}));
  g->add_option("--n", gen.n, "Number of variables (random01)");
  g->add_option("--alpha", gen.alpha, "Wedge parameter");
  g->add_option("--seed", gen.seed, "Seed (random01)");
  g->add_option("--count", gen.count, "Instances with consecutive seeds");
  g->add_option("--out", gen.out, "Output directory")->required();
  g->add_option("--format", gen.format, "txt|json")->check(CLI::IsMember({"txt", "json"}));

  TableOptions table;
  auto* t = app.add_subcommand("table", "Render a bench CSV as a table");
  t->add_option("--csv", table.csv, "CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*s) return run_solve(solve);
    if (*b) return run_bench(bench);
    if (*g) return run_gen(gen);
    return run_table(table);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const relaxfeas::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
