#include "relaxfeas/linalg.hpp"

#include <Eigen/QR>
#include <cmath>
#include <string>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

namespace {

// Relative pivot threshold for rank decisions.
double rank_threshold(const Matrix& A) {
  return 1e-10 * static_cast<double>(std::max<Index>(1, std::max(A.rows(), A.cols())));
}

}  // namespace

AffineProjector::AffineProjector(Matrix A, Vector b) : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != b_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "A has " + std::to_string(A_.rows()) + " rows but b has " +
                    std::to_string(b_.size()) + " entries");
  }
  if (A_.rows() == 0) return;
  if (A_.rows() > A_.cols()) {
    throw Error(ErrorCode::RankDeficient, "more equality rows than variables");
  }
  if (numerical_rank(A_) < A_.rows()) {
    throw Error(ErrorCode::RankDeficient, "equality rows are linearly dependent");
  }

  const Matrix gram = A_ * A_.transpose();
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() == Eigen::Success) {
    rcond_ = llt.rcond();
    if (rcond_ >= tol::kMinRcond) {
      gram_ = std::move(llt);
      return;
    }
  }
  Eigen::LDLT<Matrix> ldlt(gram);
  rcond_ = ldlt.info() == Eigen::Success ? ldlt.rcond() : 0.0;
  if (!(rcond_ >= tol::kMinRcond) || !ldlt.isPositive()) {
    throw Error(ErrorCode::RankDeficient,
                "A*A^T is numerically singular (rcond " + std::to_string(rcond_) + ")");
  }
  gram_ = std::move(ldlt);
}

Vector AffineProjector::solve_gram(const Vector& rhs) const {
  if (const auto* llt = std::get_if<Eigen::LLT<Matrix>>(&gram_)) return llt->solve(rhs);
  if (const auto* ldlt = std::get_if<Eigen::LDLT<Matrix>>(&gram_)) return ldlt->solve(rhs);
  return Vector::Zero(rhs.size());
}

Vector AffineProjector::multipliers(const Vector& z) const {
  if (A_.rows() == 0) return Vector::Zero(0);
  return solve_gram(A_ * z - b_);
}

Vector AffineProjector::project(const Vector& z) const {
  if (z.size() != A_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match projector");
  }
  if (A_.rows() == 0) return z;
  return z - A_.transpose() * multipliers(z);
}

AffineProjector build_projector(const Matrix& A, const Vector& b) { return AffineProjector(A, b); }

Vector project_affine(const AffineProjector& projector, const Vector& z) {
  return projector.project(z);
}

Vector project_hyperplane(const Vector& h, double delta, const Vector& z) {
  const double hh = h.squaredNorm();
  if (std::sqrt(hh) <= tol::kZero) throw Error(ErrorCode::ZeroNormal, "hyperplane normal is zero");
  if (h.size() != z.size()) throw Error(ErrorCode::DimensionMismatch, "hyperplane/point size");
  return z - ((h.dot(z) - delta) / hh) * h;
}

double signed_distance(const Vector& c, double d, const Vector& z) {
  const double norm = c.norm();
  if (norm <= tol::kZero) throw Error(ErrorCode::ZeroNormal, "constraint normal is zero");
  if (c.size() != z.size()) throw Error(ErrorCode::DimensionMismatch, "constraint/point size");
  return (c.dot(z) - d) / norm;
}

Index numerical_rank(const Matrix& A) {
  if (A.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(A.rows(), A.cols());
  qr.setThreshold(rank_threshold(A));
  qr.compute(A);
  return qr.rank();
}

RowReduction independent_rows(const Matrix& A, const Vector& b) {
  RowReduction out;
  if (A.rows() == 0) return out;
  // Greedy scan keeps the first occurrence of each independent direction so
  // row order (and therefore certificates) stays stable.
  Matrix kept(0, A.cols());
  for (Index i = 0; i < A.rows(); ++i) {
    Matrix trial(kept.rows() + 1, A.cols());
    trial << kept, A.row(i);
    if (numerical_rank(trial) > kept.rows()) {
      kept = std::move(trial);
      out.rows.push_back(i);
    }
  }
  if (static_cast<Index>(out.rows.size()) < A.rows()) {
    const Vector x = least_norm_solution(select_rows(A, out.rows), select_rows(b, out.rows));
    const Vector residual = A * x - b;
    out.consistent = residual.lpNorm<Eigen::Infinity>() <= tol::linear(b) * (1.0 + x.norm());
  }
  return out;
}

Vector least_norm_solution(const Matrix& A, const Vector& b) {
  if (A.rows() == 0) return Vector::Zero(A.cols());
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A.rows(), A.cols());
  cod.setThreshold(rank_threshold(A));
  cod.compute(A);
  return cod.solve(b);
}

Matrix select_rows(const Matrix& M, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), M.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = M.row(rows[i]);
  return out;
}

Vector select_rows(const Vector& v, const std::vector<Index>& rows) {
  Vector out(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) out(static_cast<Index>(i)) = v(rows[i]);
  return out;
}

}  // namespace relaxfeas
