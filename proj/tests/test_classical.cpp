#include <gtest/gtest.h>

#include <sstream>

#include "relaxfeas/classical.hpp"
#include "relaxfeas/errors.hpp"
#include "relaxfeas/oracle.hpp"
#include "support.hpp"

namespace relaxfeas {
namespace {

using testing::mat;
using testing::vec;

Vector wedge_start(const Instance& inst) {
  std::istringstream in(inst.meta.at("start"));
  double a = 0, b = 0;
  in >> a >> b;
  return vec({a, b});
}

TEST(Relax, SingleConstraintOneStep) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{-1, 0}}), vec({-1}));
  std::vector<Vector> seen;
  const SolveReport rep = relax_solve(sys, vec({0, 0}), {},
                                      [&](std::uint64_t, const Vector& z) { seen.push_back(z); });
  ASSERT_EQ(rep.decision, Decision::Feasible);
  EXPECT_EQ(rep.iterations, 1u);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_TRUE(seen[0].isApprox(vec({1.9, 0})));
}

TEST(Relax, UnitLambdaProjectsOntoHyperplane) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1, 1}}), vec({1}));
  RelaxConfig cfg;
  cfg.lambda = 1.0;
  std::vector<Vector> seen;
  relax_solve(sys, vec({3, 3}), cfg, [&](std::uint64_t, const Vector& z) { seen.push_back(z); });
  ASSERT_FALSE(seen.empty());
  EXPECT_TRUE(seen[0].isApprox(vec({0.5, 0.5})));
}

TEST(Relax, FeasibleStartTakesZeroIterations) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1, 0}}), vec({1}));
  const SolveReport rep = relax_solve(sys, vec({0, 0}), {});
  EXPECT_EQ(rep.decision, Decision::Feasible);
  EXPECT_EQ(rep.iterations, 0u);
}

TEST(Relax, EqualitiesViolatedOnEitherSide) {
  const LinearSystem sys(mat({{1, 1}}), vec({1}), mat({{-1, 0}}), vec({0}));
  RelaxConfig cfg;
  cfg.lambda = 1.0;
  const SolveReport below = relax_solve(sys, vec({0, 0}), cfg);
  const SolveReport above = relax_solve(sys, vec({2, 2}), cfg);
  ASSERT_EQ(below.decision, Decision::Feasible);
  ASSERT_EQ(above.decision, Decision::Feasible);
  EXPECT_NEAR(below.x->sum(), 1.0, 1e-6);
  EXPECT_NEAR(above.x->sum(), 1.0, 1e-6);
}

TEST(Relax, TieGoesToLowestRow) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{-1, 0}, {0, -1}}), vec({-1, -1}));
  RelaxConfig cfg;
  cfg.lambda = 1.0;
  std::vector<Vector> seen;
  relax_solve(sys, vec({0, 0}), cfg, [&](std::uint64_t, const Vector& z) { seen.push_back(z); });
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_TRUE(seen[0].isApprox(vec({1, 0})));
}

TEST(Relax, BudgetOnInfeasibleSystem) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}, {-1}}), vec({-1, 0}));
  RelaxConfig cfg;
  cfg.max_iters = 50;
  const SolveReport rep = relax_solve(sys, vec({0}), cfg);
  EXPECT_EQ(rep.decision, Decision::BudgetExceeded);
  EXPECT_EQ(rep.iterations, 50u);
  EXPECT_FALSE(rep.x.has_value());
}

TEST(Relax, RejectsBadConfig) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}}), vec({0}));
  RelaxConfig cfg;
  cfg.lambda = 2.5;
  EXPECT_THROW(relax_solve(sys, vec({0}), cfg), Error);
  cfg.lambda = 1.0;
  cfg.eps = 0.0;
  EXPECT_THROW(relax_solve(sys, vec({0}), cfg), Error);
  EXPECT_THROW(relax_solve(sys, vec({0, 0}), {}), Error);
}

TEST(Relax, WedgeCountsGrowWithAlpha) {
  // Independent reimplementation of the max-violation rule gives these counts.
  const std::uint64_t expected[] = {2, 3, 6, 10, 17};
  std::uint64_t previous = 0;
  for (int alpha = 1; alpha <= 5; ++alpha) {
    const Instance inst = gen_wedge(alpha);
    const SolveReport rep = relax_solve(inst.system, wedge_start(inst), {});
    ASSERT_EQ(rep.decision, Decision::Feasible);
    EXPECT_EQ(rep.iterations, expected[alpha - 1]) << inst.name;
    EXPECT_GE(rep.iterations, previous);
    previous = rep.iterations;
  }
}

TEST(Relax, MaxViolationIsDeterministic) {
  const Instance inst = gen_random01(6, 3);
  RelaxConfig cfg;
  cfg.max_iters = 5000;
  std::vector<Vector> first, second;
  relax_solve(inst.system, Vector::Zero(6), cfg,
              [&](std::uint64_t, const Vector& z) { first.push_back(z); });
  relax_solve(inst.system, Vector::Zero(6), cfg,
              [&](std::uint64_t, const Vector& z) { second.push_back(z); });
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(first[i], second[i]);
}

class Fejer : public ::testing::TestWithParam<int> {};

TEST_P(Fejer, DistanceToFeasiblePointNeverGrows) {
  Rng rng(900 + static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 5; ++trial) {
    const Index n = rng.uniform_int(2, 4);
    const LinearSystem sys = testing::random_system(rng, n, n - 1, 5, -3, 3);
    const OracleVerdict verdict = oracle_feasible(sys, false);
    if (!verdict.feasible) continue;
    const Vector& xhat = *verdict.witness;
    RelaxConfig cfg;
    cfg.lambda = rng.uniform(0.2, 1.99);
    cfg.max_iters = 20000;
    Vector prev = testing::random_int_vector(rng, n, -10, 10);
    double prev_dist = (prev - xhat).norm();
    relax_solve(sys, prev, cfg, [&](std::uint64_t, const Vector& z) {
      const double dist = (z - xhat).norm();
      EXPECT_LE(dist, prev_dist * (1 + 1e-10) + 1e-12);
      prev_dist = dist;
    });
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Fejer, ::testing::Range(0, 10));

TEST(RelaxStats, DeterministicInstanceHasZeroSpread) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{-1, 0}}), vec({-1}));
  RelaxConfig cfg;
  cfg.selection = Selection::RandomViolation;
  const RelaxStats s = relax_random_stats(sys, vec({0, 0}), cfg, 20);
  EXPECT_EQ(s.runs, 20);
  EXPECT_DOUBLE_EQ(s.avg_iters, 1.0);
  EXPECT_DOUBLE_EQ(s.std_iters, 0.0);
  EXPECT_EQ(s.min_iters, 1u);
  EXPECT_EQ(s.max_iters, 1u);
}

TEST(RelaxStats, SingleRun) {
  const Instance inst = gen_random01(4, 1);
  RelaxConfig cfg;
  cfg.selection = Selection::RandomViolation;
  cfg.seed = 11;
  cfg.max_iters = 5000;
  const RelaxStats s = relax_random_stats(inst.system, Vector::Zero(4), cfg, 1);
  RelaxConfig direct = cfg;
  direct.seed = derive_seed(11, 0);
  const SolveReport rep = relax_solve(inst.system, Vector::Zero(4), direct);
  EXPECT_DOUBLE_EQ(s.avg_iters, static_cast<double>(rep.iterations));
  EXPECT_DOUBLE_EQ(s.std_iters, 0.0);
  EXPECT_THROW(relax_random_stats(inst.system, Vector::Zero(4), cfg, 0), Error);
}

TEST(RelaxStats, SeededRunsRepeat) {
  const Instance inst = gen_random01(5, 2);
  RelaxConfig cfg;
  cfg.selection = Selection::RandomViolation;
  cfg.seed = 5;
  const RelaxStats a = relax_random_stats(inst.system, Vector::Zero(5), cfg, 30);
  const RelaxStats b = relax_random_stats(inst.system, Vector::Zero(5), cfg, 30);
  EXPECT_EQ(a.avg_iters, b.avg_iters);
  EXPECT_EQ(a.std_iters, b.std_iters);
  EXPECT_LE(static_cast<double>(a.min_iters), a.avg_iters);
  EXPECT_GE(static_cast<double>(a.max_iters), a.avg_iters);
}

}  // namespace
}  // namespace relaxfeas
