#include "relaxfeas/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

LinearSystem::LinearSystem(Matrix A, Vector b, Matrix C, Vector d)
    : A_(std::move(A)), b_(std::move(b)), C_(std::move(C)), d_(std::move(d)) {
  // An empty block may come in as 0x0; give it the width of the other block.
  if (A_.rows() == 0 && A_.cols() != C_.cols()) A_.resize(0, C_.cols());
  if (C_.rows() == 0 && C_.cols() != A_.cols()) C_.resize(0, A_.cols());
  validate();
}

LinearSystem LinearSystem::inequalities(Matrix C, Vector d) {
  const Index n = C.cols();
  return LinearSystem(Matrix(0, n), Vector(0), std::move(C), std::move(d));
}

void LinearSystem::validate() const {
  if (A_.rows() != b_.size() || C_.rows() != d_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "row counts of A/b or C/d differ");
  }
  if (A_.cols() != C_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "A and C have different column counts");
  }
  for (Index i = 0; i < A_.rows(); ++i) {
    if (A_.row(i).norm() <= tol::kZero) {
      throw Error(ErrorCode::InvalidSystem, "equality row " + std::to_string(i) + " is zero");
    }
  }
  for (Index k = 0; k < C_.rows(); ++k) {
    if (C_.row(k).norm() <= tol::kZero) {
      throw Error(ErrorCode::InvalidSystem, "inequality row " + std::to_string(k) + " is zero");
    }
  }
  if (!A_.allFinite() || !b_.allFinite() || !C_.allFinite() || !d_.allFinite()) {
    throw Error(ErrorCode::InvalidSystem, "non-finite coefficient");
  }
}

void LinearSystem::set_names(std::vector<std::string> eq, std::vector<std::string> ineq) {
  if ((!eq.empty() && static_cast<Index>(eq.size()) != m()) ||
      (!ineq.empty() && static_cast<Index>(ineq.size()) != l())) {
    throw Error(ErrorCode::DimensionMismatch, "row label count does not match the system");
  }
  eq_names_ = std::move(eq);
  ineq_names_ = std::move(ineq);
}

void LinearSystem::mark_homogenization_row(Index row) {
  if (row < 0 || row >= l()) throw Error(ErrorCode::DimensionMismatch, "marker row out of range");
  homog_row_ = row;
}

double LinearSystem::c_max() const {
  return l() ? C_.rowwise().norm().maxCoeff() : 0.0;
}

Vector LinearSystem::ineq_row_norms() const { return C_.rowwise().norm(); }

bool LinearSystem::operator==(const LinearSystem& o) const {
  return A_ == o.A_ && b_ == o.b_ && C_ == o.C_ && d_ == o.d_ && homog_row_ == o.homog_row_;
}

// ---------------------------------------------------------------------------

Certificate Certificate::equality_only(Vector eq_mults, Index l) {
  return Certificate{std::move(eq_mults), Vector::Zero(l)};
}

Certificate Certificate::unit_inequality(Index m, Index l, Index row) {
  Certificate c{Vector::Zero(m), Vector::Zero(l)};
  c.ineq_mults(row) = 1.0;
  return c;
}

Certificate Certificate::combine(double a, const Certificate& first, double b,
                                 const Certificate& second) {
  return Certificate{a * first.eq_mults + b * second.eq_mults,
                     a * first.ineq_mults + b * second.ineq_mults};
}

Vector Certificate::normal(const LinearSystem& sys) const {
  Vector h = Vector::Zero(sys.n());
  if (sys.m()) h += sys.A().transpose() * eq_mults;
  if (sys.l()) h += sys.C().transpose() * ineq_mults;
  return h;
}

double Certificate::rhs(const LinearSystem& sys) const {
  double delta = 0.0;
  if (sys.m()) delta += eq_mults.dot(sys.b());
  if (sys.l()) delta += ineq_mults.dot(sys.d());
  return delta;
}

double Certificate::extra_mult(const LinearSystem& sys) const {
  const auto row = sys.homogenization_row();
  return row ? ineq_mults(*row) : 0.0;
}

double Hyperplane::distance_from(const Vector& z) const { return signed_distance(h, delta, z); }

Ball::Ball(Vector c, double r) : center(std::move(c)), radius(r) {
  if (!(r > 0.0)) throw Error(ErrorCode::PreconditionViolated, "ball radius must be positive");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Random01: return "random01";
    case Family::Wedge: return "wedge";
    case Family::File: return "file";
  }
  return "file";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "random01") return Family::Random01;
  if (s == "wedge") return Family::Wedge;
  if (s == "file") return Family::File;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

LinearSystem homogenize(const LinearSystem& sys) {
  const Index n = sys.n(), m = sys.m(), l = sys.l();
  Matrix A(m, n + 1);
  A << sys.A(), -sys.b();
  Matrix C = Matrix::Zero(l + 1, n + 1);
  C.topLeftCorner(l, n) = sys.C();
  C.topRightCorner(l, 1) = -sys.d();
  C(l, n) = -1.0;
  Vector d = Vector::Zero(l + 1);
  d(l) = -1.0;
  LinearSystem out(std::move(A), Vector::Zero(m), std::move(C), std::move(d));
  out.mark_homogenization_row(l);
  return out;
}

LinearSystem strengthen(const LinearSystem& sys, double eps) {
  const auto row = sys.homogenization_row();
  if (!row) throw Error(ErrorCode::NotHomogenized, "strengthen expects a homogenized system");
  LinearSystem out(sys.A(), sys.b(), sys.C(), sys.d() - Vector::Constant(sys.l(), eps));
  out.mark_homogenization_row(*row);
  return out;
}

LinearSystem tighten(const LinearSystem& sys, double eps) {
  return LinearSystem(sys.A(), sys.b(), sys.C(), sys.d() - Vector::Constant(sys.l(), eps));
}

LinearSystem standardize_bounded(const Matrix& A, const Vector& b, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::PreconditionViolated, "lambda must be positive");
  const Index m = A.rows(), n = A.cols();
  Matrix At = Matrix::Zero(m + n, 2 * n);
  At.topLeftCorner(m, n) = A;
  At.bottomLeftCorner(n, n).setIdentity();
  At.bottomRightCorner(n, n).setIdentity();
  Vector bt(m + n);
  bt << b, Vector::Constant(n, lambda);
  return LinearSystem(std::move(At), std::move(bt), -Matrix::Identity(2 * n, 2 * n),
                      Vector::Zero(2 * n));
}

LinearSystem box_system(const Matrix& A, const Vector& b, double lambda) {
  const Index n = A.cols();
  Matrix C(2 * n, n);
  C << Matrix::Identity(n, n), -Matrix::Identity(n, n);
  Vector d(2 * n);
  d << Vector::Constant(n, lambda), Vector::Zero(n);
  return LinearSystem(A, b, std::move(C), std::move(d));
}

std::optional<double> box_bound(const LinearSystem& sys) {
  const Index n = sys.n();
  if (sys.l() != 2 * n || n == 0) return std::nullopt;
  Matrix expected(2 * n, n);
  expected << Matrix::Identity(n, n), -Matrix::Identity(n, n);
  if (sys.C() != expected) return std::nullopt;
  const double lambda = sys.d()(0);
  if (!(lambda > 0.0)) return std::nullopt;
  for (Index i = 0; i < n; ++i) {
    if (sys.d()(i) != lambda || sys.d()(n + i) != 0.0) return std::nullopt;
  }
  return lambda;
}

bool is_standard_form(const LinearSystem& sys) {
  const Index n = sys.n();
  return sys.l() == n && n > 0 && sys.C() == -Matrix::Identity(n, n) && sys.d().isZero(0.0);
}

CertificateCheck validate_certificate(const LinearSystem& sys, const Hyperplane& hp) {
  CertificateCheck out;
  if (hp.cert.eq_mults.size() != sys.m() || hp.cert.ineq_mults.size() != sys.l() ||
      hp.h.size() != sys.n()) {
    throw Error(ErrorCode::DimensionMismatch, "certificate does not match the system");
  }
  const Vector h = hp.cert.normal(sys);
  const double delta = hp.cert.rhs(sys);
  out.normal_residual = (h - hp.h).norm();
  out.rhs_residual = std::abs(delta - hp.delta);
  out.min_ineq_mult = sys.l() ? hp.cert.ineq_mults.minCoeff() : 0.0;
  // Reconstruction error grows with the magnitude of the summed terms, not
  // with |h| (terms may cancel), so both tolerances carry the multiplier mass.
  double normal_mass = 0.0, rhs_mass = 0.0;
  for (Index i = 0; i < sys.m(); ++i) {
    normal_mass += std::abs(hp.cert.eq_mults(i)) * sys.A().row(i).norm();
    rhs_mass += std::abs(hp.cert.eq_mults(i) * sys.b()(i));
  }
  for (Index k = 0; k < sys.l(); ++k) {
    normal_mass += std::abs(hp.cert.ineq_mults(k)) * sys.C().row(k).norm();
    rhs_mass += std::abs(hp.cert.ineq_mults(k) * sys.d()(k));
  }
  out.valid = out.normal_residual <= tol::cert(hp.h.norm() + normal_mass) &&
              out.rhs_residual <= tol::cert(std::abs(hp.delta) + rhs_mass) &&
              out.min_ineq_mult >= -tol::kCert && hp.h.norm() > tol::kZero;
  return out;
}

// ---------------------------------------------------------------------------

Violation violation(const LinearSystem& sys, const Vector& x) {
  Violation v;
  if (sys.m()) v.equality = (sys.A() * x - sys.b()).lpNorm<Eigen::Infinity>();
  if (sys.l()) v.inequality = std::max(0.0, (sys.C() * x - sys.d()).maxCoeff());
  return v;
}

double solution_tolerance(const LinearSystem& sys, const Vector& x) {
  double scale = x.size() ? x.lpNorm<Eigen::Infinity>() : 0.0;
  double coeff = 1.0;
  if (sys.m()) {
    scale = std::max(scale, sys.b().lpNorm<Eigen::Infinity>());
    coeff = std::max(coeff, sys.A().cwiseAbs().rowwise().sum().maxCoeff());
  }
  if (sys.l()) {
    scale = std::max(scale, sys.d().lpNorm<Eigen::Infinity>());
    coeff = std::max(coeff, sys.C().cwiseAbs().rowwise().sum().maxCoeff());
  }
  return tol::cert(scale * coeff);
}

bool satisfies(const LinearSystem& sys, const Vector& x, double slack) {
  if (x.size() != sys.n()) return false;
  const double t = solution_tolerance(sys, x);
  const Violation v = violation(sys, x);
  if (v.equality > t) return false;
  if (sys.l() && (sys.C() * x - sys.d()).maxCoeff() > slack + t) return false;
  return true;
}

}  // namespace relaxfeas
