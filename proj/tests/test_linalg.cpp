#include <gtest/gtest.h>

#include "relaxfeas/errors.hpp"
#include "relaxfeas/linalg.hpp"
#include "support.hpp"

namespace relaxfeas {
namespace {

using testing::mat;
using testing::vec;

TEST(Projector, SingleCoordinateRow) {
  const AffineProjector P(mat({{1, 0}}), vec({1}));
  EXPECT_EQ(P.rows(), 1);
  EXPECT_TRUE(P.project(vec({0, 0})).isApprox(vec({1, 0})));
}

TEST(Projector, TwoRowsSolveNormalEquations) {
  const AffineProjector P = build_projector(mat({{1, 1}, {1, -1}}), vec({2, 0}));
  EXPECT_TRUE(project_affine(P, vec({0, 0})).isApprox(vec({1, 1})));
}

TEST(Projector, DuplicateDirectionIsRankDeficient) {
  try {
    build_projector(mat({{1, 1}, {2, 2}}), vec({1, 2}));
    FAIL() << "expected RankDeficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
}

TEST(Projector, MoreRowsThanColumnsIsRankDeficient) {
  EXPECT_THROW(build_projector(mat({{1}, {2}}), vec({1, 2})), Error);
}

TEST(Projector, FixedPointAndHalfPlane) {
  const AffineProjector P(mat({{1, 1}}), vec({2}));
  EXPECT_TRUE(P.project(vec({0, 0})).isApprox(vec({1, 1})));
  const Vector on = vec({0.5, 1.5});
  EXPECT_LE((P.project(on) - on).norm(), 1e-15);
}

TEST(Projector, NoRowsIsIdentity) {
  const AffineProjector P(Matrix(0, 3), Vector(0));
  const Vector z = vec({1, -2, 3});
  EXPECT_EQ(P.project(z), z);
  EXPECT_EQ(P.multipliers(z).size(), 0);
}

TEST(Projector, MultipliersReconstructDisplacement) {
  const Matrix A = mat({{1, 2, 0}, {0, 1, -1}});
  const AffineProjector P(A, vec({1, 2}));
  const Vector z = vec({3, -1, 4});
  EXPECT_LE((z - P.project(z) - A.transpose() * P.multipliers(z)).norm(), 1e-12);
}

TEST(Hyperplane, ProjectionExamples) {
  EXPECT_TRUE(project_hyperplane(vec({1, 0}), 0, vec({3, 5})).isApprox(vec({0, 5})));
  EXPECT_EQ(project_hyperplane(vec({1, 1}), 2, vec({1, 1})), vec({1, 1}));
  const Vector via_affine = AffineProjector(mat({{1, 1}}), vec({2})).project(vec({0, 0}));
  EXPECT_TRUE(project_hyperplane(vec({1, 1}), 2, vec({0, 0})).isApprox(via_affine));
  EXPECT_THROW(project_hyperplane(vec({0, 0}), 1, vec({1, 1})), Error);
}

TEST(SignedDistance, Examples) {
  EXPECT_NEAR(signed_distance(vec({3, 4}), 10, vec({2, 2})), 0.8, 1e-15);
  EXPECT_EQ(signed_distance(vec({1, 1}), 2, vec({1, 1})), 0.0);
  EXPECT_EQ(signed_distance(vec({1, 0}), 0, vec({-2, 0})), -2.0);
  EXPECT_THROW(signed_distance(vec({0, 0}), 0, vec({1, 1})), Error);
}

TEST(SignedDistance, SignInvariantUnderPositiveScaling) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector c = testing::random_int_vector(rng, 3, -3, 3);
    if (c.norm() == 0.0) continue;
    const double d = static_cast<double>(rng.uniform_int(-3, 3));
    const Vector z = testing::random_int_vector(rng, 3, -3, 3);
    const double kappa = rng.uniform(0.1, 10.0);
    const double s1 = signed_distance(c, d, z), s2 = signed_distance(kappa * c, kappa * d, z);
    EXPECT_EQ(s1 > 0, s2 > 0);
    EXPECT_EQ(s1 == 0, std::abs(s2) < 1e-12);
  }
}

class ProjectorProperties : public ::testing::TestWithParam<int> {};

TEST_P(ProjectorProperties, IdempotentOrthogonalContracting) {
  Rng rng(static_cast<std::uint64_t>(GetParam()));
  const Index n = rng.uniform_int(2, 7);
  const Index m = rng.uniform_int(1, n - 1);
  Matrix A(m, n);
  for (Index i = 0; i < A.size(); ++i) A.data()[i] = rng.uniform(-3, 3);
  const Vector x_feasible = testing::random_int_vector(rng, n, -3, 3);
  const Vector b = A * x_feasible;
  const AffineProjector P(A, b);
  const double tau = P.tolerance();

  Vector z(n);
  for (Index j = 0; j < n; ++j) z(j) = rng.uniform(-10, 10);
  const Vector p = P.project(z);
  EXPECT_LE((A * p - b).lpNorm<Eigen::Infinity>(), tau);
  EXPECT_LE((P.project(p) - p).norm(), 2 * tau);

  // Random null-space samples of A.
  const Eigen::FullPivLU<Matrix> lu(A);
  const Matrix N = lu.kernel();
  for (Index k = 0; k < N.cols(); ++k) {
    const Vector v = N.col(k);
    EXPECT_LE(std::abs((z - p).dot(v)), tau * v.norm() * std::max(1.0, (z - p).norm()));
  }
  EXPECT_LE((p - x_feasible).norm(), (z - x_feasible).norm() + tau);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ProjectorProperties, ::testing::Range(0, 50));

TEST(IndependentRows, DropsDuplicatesAndChecksConsistency) {
  const Matrix A = mat({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
  const RowReduction ok = independent_rows(A, vec({1, 2, 3}));
  EXPECT_EQ(ok.rows, (std::vector<Index>{0, 2}));
  EXPECT_TRUE(ok.consistent);
  const RowReduction bad = independent_rows(A, vec({1, 3, 3}));
  EXPECT_FALSE(bad.consistent);
}

TEST(LeastNorm, RankDeficientConsistentSystem) {
  const Matrix A = mat({{1, 1}, {2, 2}});
  const Vector x = least_norm_solution(A, vec({2, 4}));
  EXPECT_TRUE(x.isApprox(vec({1, 1})));
  EXPECT_EQ(numerical_rank(A), 1);
}

TEST(SelectRows, PicksInOrder) {
  const Matrix M = mat({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(select_rows(M, {2, 0}), mat({{5, 6}, {1, 2}}));
  EXPECT_EQ(select_rows(vec({7, 8, 9}), {1}), vec({8}));
}

}  // namespace
}  // namespace relaxfeas
