#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <variant>
#include <vector>

namespace relaxfeas {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

namespace tol {
/// Norm below which a normal vector counts as zero.
inline constexpr double kZero = 1e-12;
/// Smallest accepted reciprocal condition estimate of A*A^T.
inline constexpr double kMinRcond = 1e-14;
/// Residual tolerance for Ax = b, scaled by the right-hand side.
inline double linear(const Vector& b) {
  return 1e-9 * (1.0 + (b.size() ? b.lpNorm<Eigen::Infinity>() : 0.0));
}
}  // namespace tol

/// Orthogonal projection onto {x : Ax = b} for a full-row-rank A.
///
/// The Gram matrix A*A^T is factored once on construction; each projection
/// then costs two matrix-vector products and one triangular solve pair. With
/// zero rows the projector is the identity map.
class AffineProjector {
 public:
  /// Throws Error(RankDeficient) when A*A^T is numerically singular and
  /// Error(DimensionMismatch) when b does not match A.
  AffineProjector(Matrix A, Vector b);

  /// p = z - A^T (A A^T)^{-1} (A z - b).
  Vector project(const Vector& z) const;

  /// y = (A A^T)^{-1} (A z - b); z - project(z) = A^T y.
  Vector multipliers(const Vector& z) const;

  const Matrix& A() const noexcept { return A_; }
  const Vector& b() const noexcept { return b_; }
  Index rows() const noexcept { return A_.rows(); }
  Index cols() const noexcept { return A_.cols(); }
  double rcond() const noexcept { return rcond_; }
  double tolerance() const { return tol::linear(b_); }

 private:
  Vector solve_gram(const Vector& rhs) const;

  Matrix A_;
  Vector b_;
  std::variant<std::monostate, Eigen::LLT<Matrix>, Eigen::LDLT<Matrix>> gram_;
  double rcond_ = 1.0;
};

AffineProjector build_projector(const Matrix& A, const Vector& b);

Vector project_affine(const AffineProjector& projector, const Vector& z);

/// Nearest point to z on {x : h.x = delta}. Throws Error(ZeroNormal).
Vector project_hyperplane(const Vector& h, double delta, const Vector& z);

/// (c.z - d) / |c|: negative iff z strictly satisfies c.x <= d.
double signed_distance(const Vector& c, double d, const Vector& z);

/// Linearly independent subset of the rows of A (in increasing order) and
/// whether the dropped rows agree with b, i.e. whether Ax = b is solvable.
struct RowReduction {
  std::vector<Index> rows;
  bool consistent = true;
};

RowReduction independent_rows(const Matrix& A, const Vector& b);

Index numerical_rank(const Matrix& A);

/// Minimum-norm solution of a consistent Ax = b (any shape, any rank).
Vector least_norm_solution(const Matrix& A, const Vector& b);

Matrix select_rows(const Matrix& M, const std::vector<Index>& rows);
Vector select_rows(const Vector& v, const std::vector<Index>& rows);

}  // namespace relaxfeas
