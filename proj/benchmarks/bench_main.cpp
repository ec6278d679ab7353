#include <benchmark/benchmark.h>

#include <cmath>

#include "relaxfeas/classical.hpp"
#include "relaxfeas/dnc.hpp"
#include "relaxfeas/ep.hpp"
#include "relaxfeas/generators.hpp"
#include "relaxfeas/linalg.hpp"
#include "relaxfeas/model.hpp"
#include "relaxfeas/solvers.hpp"

namespace {

using namespace relaxfeas;

void BM_Projector(benchmark::State& state) {
  const Index n = state.range(0);
  const LinearSystem sys = gen_random01(static_cast<int>(n), 1).system;
  const AffineProjector proj(sys.A(), sys.b());
  const Vector z = Vector::LinSpaced(n, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(proj.project(z));
}
BENCHMARK(BM_Projector)->DenseRange(2, 6);

void BM_ElementaryProcedure(benchmark::State& state) {
  const Index n = state.range(0);
  const ElementaryProcedure ep(gen_random01(static_cast<int>(n), 1).system);
  const Vector z = Vector::LinSpaced(n, -1.0, 1.0);
  const double r = ep.max_radius(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ep(z, r, 1.0));
}
BENCHMARK(BM_ElementaryProcedure)->DenseRange(2, 6);

void BM_DivideAndConquer(benchmark::State& state) {
  const Index n = state.range(0);
  const ElementaryProcedure ep(gen_random01(static_cast<int>(n), 1).system);
  const Vector z = Vector::Zero(n);
  const double r = std::sqrt(static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(dnc(ep, z, r, DnCParams{}));
}
BENCHMARK(BM_DivideAndConquer)->DenseRange(2, 6);

void BM_ClassicalWedge(benchmark::State& state) {
  const LinearSystem sys = gen_wedge(static_cast<int>(state.range(0))).system;
  const Vector z0 = (Vector(2) << 0.0, 10.0).finished();
  for (auto _ : state) benchmark::DoNotOptimize(relax_solve(sys, z0, {}));
}
BENCHMARK(BM_ClassicalWedge)->DenseRange(1, 5);

void BM_ChubanovRelaxation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LinearSystem sys = gen_random01(n, 1).system;
  SolverLimits limits;
  limits.node_budget = 2'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chubanov_relaxation(sys, std::sqrt(n + 1.0), limits));
  }
}
BENCHMARK(BM_ChubanovRelaxation)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
