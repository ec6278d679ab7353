#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "relaxfeas/errors.hpp"
#include "relaxfeas/inference.hpp"
#include "relaxfeas/oracle.hpp"
#include "support.hpp"

namespace relaxfeas {
namespace {

using testing::mat;
using testing::none;
using testing::vec;

DnCOutcome run_on_strengthened(const LinearSystem& sys, double r) {
  return dnc(strengthen(homogenize(sys), 1.0), Vector::Zero(sys.n() + 1), r).outcome;
}

double max_vertex_norm(const LinearSystem& sys) {
  double r = 0.0;
  for (const Vector& v : oracle_vertices(sys)) r = std::max(r, v.norm());
  return r;
}

TEST(InferenceRadius, Formula) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}, {-1}, {2}}), vec({1, 1, 1}));
  EXPECT_DOUBLE_EQ(inference_radius(sys, 2.0), 18.0);
}

TEST(Interpret, ForcedZeroGivesImpliedEquality) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}, {-1}}), vec({0, 0}));
  const auto verdict = oracle_feasible(sys);
  ASSERT_TRUE(verdict.feasible);
  EXPECT_EQ(oracle_implied_equalities(sys), (std::vector<Index>{0, 1}));

  const double r = inference_radius(sys, 0.0);
  const DnCOutcome out = run_on_strengthened(sys, r);
  ASSERT_TRUE(std::holds_alternative<Separator>(out) || std::holds_alternative<Failure>(out));
  const Conclusion c = interpret(sys, out, r, 0.0);
  if (auto* e = std::get_if<ImpliedEqualityExists>(&c)) {
    ASSERT_TRUE(e->index_hint.has_value());
    EXPECT_LT(*e->index_hint, 2);
  } else {
    ASSERT_TRUE(std::holds_alternative<IntegerImpliedEqualityExists>(c));
    EXPECT_LT(*std::get<IntegerImpliedEqualityExists>(c).index_hint, 2);
  }
}

TEST(Interpret, InteriorGivesExactSolution) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{-1}, {1}}), vec({0, 2}));
  const double r = inference_radius(sys, 2.0);
  const Conclusion c = interpret(sys, run_on_strengthened(sys, r), r, 2.0);
  ASSERT_TRUE(std::holds_alternative<ExactSolution>(c));
  const double x = std::get<ExactSolution>(c).x(0);
  EXPECT_GE(x, 0.0);
  EXPECT_LE(x, 2.0);
}

TEST(Interpret, ScalesByT) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}}), vec({3}));
  const Conclusion c = interpret(sys, ApproxSolution{vec({4, 2})}, 8.0, 3.0);
  ASSERT_TRUE(std::holds_alternative<ExactSolution>(c));
  EXPECT_DOUBLE_EQ(std::get<ExactSolution>(c).x(0), 2.0);
}

TEST(Interpret, RejectsSmallRadius) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}}), vec({3}));
  try {
    interpret(sys, ApproxSolution{vec({4, 2})}, 1.0, 3.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRadius);
  }
}

TEST(Interpret, BudgetIsUndecided) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{1}}), vec({3}));
  const Conclusion c = interpret(sys, BudgetExceeded{true}, 8.0, 3.0);
  ASSERT_TRUE(std::holds_alternative<Undecided>(c));
  EXPECT_TRUE(std::get<Undecided>(c).timed_out);
}

// ---------------------------------------------------------------------------

TEST(EqualityForcing, InteriorWitnessFollowsConstruction) {
  const LinearSystem sys = LinearSystem::inequalities(mat({{-1}, {1}}), vec({0, 2}));
  const auto out = check_equality_forcing(sys);
  ASSERT_TRUE(std::holds_alternative<StrengthenedFeasible>(out));
  // Slack witnesses 2 and 0 average to 1, slacks (1, 1), eta = 1/2.
  EXPECT_TRUE(std::get<StrengthenedFeasible>(out).witness.isApprox(vec({2, 2})));
  EXPECT_TRUE(satisfies(strengthen(homogenize(sys), 1.0), std::get<StrengthenedFeasible>(out).witness));
}

TEST(EqualityForcing, ForcedAndEmptySystems) {
  const LinearSystem forced = LinearSystem::inequalities(mat({{1}, {-1}}), vec({0, 0}));
  EXPECT_TRUE(std::holds_alternative<StrengthenedInfeasible>(check_equality_forcing(forced)));
  const LinearSystem empty = LinearSystem::inequalities(mat({{1}, {-1}}), vec({-1, 0}));
  EXPECT_TRUE(std::holds_alternative<StrengthenedInfeasible>(check_equality_forcing(empty)));
}

TEST(EqualityForcing, AgreesWithDirectOracle) {
  Rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = rng.uniform_int(1, 3);
    const LinearSystem sys = testing::random_system(rng, n, n - 1, 4, -3, 3);
    const bool direct = oracle_feasible(strengthen(homogenize(sys), 1.0), false).feasible;
    const auto out = check_equality_forcing(sys);
    EXPECT_EQ(direct, std::holds_alternative<StrengthenedFeasible>(out));
    if (auto* f = std::get_if<StrengthenedFeasible>(&out)) {
      EXPECT_TRUE(satisfies(strengthen(homogenize(sys), 1.0), f->witness));
    }
  }
}

// ---------------------------------------------------------------------------

/// Random system with 0 <= x <= 2 appended so that P is bounded.
LinearSystem bounded_system(Rng& rng, Index n) {
  const LinearSystem base = testing::random_system(rng, n, n - 1, 2, -3, 3);
  Matrix C(base.l() + 2 * n, n);
  Vector d(base.l() + 2 * n);
  C << base.C(), Matrix::Identity(n, n), -Matrix::Identity(n, n);
  d << base.d(), Vector::Constant(n, 2.0), Vector::Zero(n);
  return LinearSystem(base.A(), base.b(), C, d);
}

class InferenceProperties : public ::testing::TestWithParam<int> {};

TEST_P(InferenceProperties, ConclusionsAgreeWithOracle) {
  Rng rng(7000 + static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 5; ++trial) {
    const Index n = rng.uniform_int(1, 2);
    const LinearSystem sys = bounded_system(rng, n);
    const OracleVerdict verdict = oracle_feasible(sys);
    const double r_star = verdict.feasible ? max_vertex_norm(sys) : 0.0;
    const double r = inference_radius(sys, r_star);
    const LinearSystem strong = strengthen(homogenize(sys), 1.0);
    const DnCOutcome out = run_on_strengthened(sys, r);

    if (std::holds_alternative<Failure>(out)) {
      EXPECT_FALSE(oracle_feasible(strong, false).feasible);
    }
    const Conclusion c = interpret(sys, out, r, r_star);
    if (auto* s = std::get_if<ExactSolution>(&c)) {
      EXPECT_TRUE(satisfies(sys, s->x));
    } else if (std::holds_alternative<Infeasible>(c)) {
      EXPECT_FALSE(verdict.feasible);
    } else if (auto* e = std::get_if<ImpliedEqualityExists>(&c)) {
      ASSERT_TRUE(e->index_hint.has_value());
      for (const Vector& v : *verdict.vertices) {
        for (Index k : e->rows) {
          EXPECT_NEAR(sys.C().row(k).dot(v), sys.d()(k), 1e-8);
        }
      }
    } else if (auto* e = std::get_if<IntegerImpliedEqualityExists>(&c)) {
      ASSERT_TRUE(e->index_hint.has_value());
      for (const Vector& v : *verdict.vertices) {
        for (Index k : e->rows) {
          EXPECT_LE(sys.d()(k) - sys.C().row(k).dot(v), 0.5 + 1e-8);
        }
      }
    } else {
      ADD_FAILURE() << "undecided within the default budget";
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, InferenceProperties, ::testing::Range(0, 10));

}  // namespace
}  // namespace relaxfeas
