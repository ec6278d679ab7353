#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relaxfeas/linalg.hpp"

namespace relaxfeas {

namespace tol {
/// Relative slack for certificate reconstruction and solution checks.
inline constexpr double kCert = 1e-8;
inline double cert(double scale) { return kCert * (1.0 + scale); }
}  // namespace tol

/// The system  A x = b,  C x <= d.
///
/// Rows of A and C must be nonzero. A homogenized system additionally records
/// which inequality row is the `-t <= -1` row so that strengthening and the
/// inference step can treat it separately.
class LinearSystem {
 public:
  LinearSystem() = default;
  LinearSystem(Matrix A, Vector b, Matrix C, Vector d);

  /// Inequalities only.
  static LinearSystem inequalities(Matrix C, Vector d);

  const Matrix& A() const noexcept { return A_; }
  const Vector& b() const noexcept { return b_; }
  const Matrix& C() const noexcept { return C_; }
  const Vector& d() const noexcept { return d_; }

  Index n() const noexcept { return std::max(A_.cols(), C_.cols()); }
  Index m() const noexcept { return A_.rows(); }
  Index l() const noexcept { return C_.rows(); }

  const std::vector<std::string>& eq_names() const noexcept { return eq_names_; }
  const std::vector<std::string>& ineq_names() const noexcept { return ineq_names_; }
  void set_names(std::vector<std::string> eq, std::vector<std::string> ineq);

  std::optional<Index> homogenization_row() const noexcept { return homog_row_; }
  bool is_homogenized() const noexcept { return homog_row_.has_value(); }
  void mark_homogenization_row(Index row);

  /// max_k |c_k|; zero when there are no inequalities.
  double c_max() const;
  Vector ineq_row_norms() const;

  bool operator==(const LinearSystem& other) const;

 private:
  void validate() const;

  Matrix A_{0, 0};
  Vector b_{0};
  Matrix C_{0, 0};
  Vector d_{0};
  std::vector<std::string> eq_names_;
  std::vector<std::string> ineq_names_;
  std::optional<Index> homog_row_;
};

/// Multipliers proving h.x <= delta valid for a system: free signs on the
/// equality rows, nonnegative on the inequality rows. The homogenization row,
/// when present, is one of the inequality rows.
struct Certificate {
  Vector eq_mults;
  Vector ineq_mults;

  static Certificate equality_only(Vector eq_mults, Index l);
  static Certificate unit_inequality(Index m, Index l, Index row);

  /// a*first + b*second.
  static Certificate combine(double a, const Certificate& first, double b,
                             const Certificate& second);

  Vector normal(const LinearSystem& sys) const;
  double rhs(const LinearSystem& sys) const;

  /// Multiplier on the homogenization row (0 when the system has none).
  double extra_mult(const LinearSystem& sys) const;
};

/// h.x <= delta together with the proof of its validity.
struct Hyperplane {
  Vector h;
  double delta = 0.0;
  Certificate cert;

  /// (h.z - delta) / |h|.
  double distance_from(const Vector& z) const;
};

struct Ball {
  Vector center;
  double radius;

  Ball(Vector center, double radius);
  bool contains(const Vector& x) const { return (x - center).norm() < radius; }
};

enum class Family { Random01, Wedge, File };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct Instance {
  std::string name;
  LinearSystem system;
  Family family = Family::File;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> meta;
};

// ---------------------------------------------------------------------------
// Transforms

/// A x - b t = 0,  C x - d t <= 0,  -t <= -1  in the variables (x, t).
LinearSystem homogenize(const LinearSystem& sys);

/// Subtract eps from every inequality right-hand side of a homogenized system.
/// Throws Error(NotHomogenized) when the marker is missing.
LinearSystem strengthen(const LinearSystem& sys, double eps);

/// A x = b, C x <= d - eps 1. Any eps-approximate solution of the result is an
/// exact solution of sys.
LinearSystem tighten(const LinearSystem& sys, double eps);

/// A x = b, x + y = lambda 1, -x <= 0, -y <= 0 in 2n variables.
LinearSystem standardize_bounded(const Matrix& A, const Vector& b, double lambda);

/// A x = b, 0 <= x <= lambda 1 with the bounds stored as C = [I; -I].
LinearSystem box_system(const Matrix& A, const Vector& b, double lambda);

/// Lambda when sys's inequality block is exactly 0 <= x <= lambda 1 in the
/// [I; -I] layout produced by box_system.
std::optional<double> box_bound(const LinearSystem& sys);

/// True when sys's inequality block is exactly -x <= 0.
bool is_standard_form(const LinearSystem& sys);

struct CertificateCheck {
  bool valid = false;
  double normal_residual = 0.0;
  double rhs_residual = 0.0;
  double min_ineq_mult = 0.0;
};

CertificateCheck validate_certificate(const LinearSystem& sys, const Hyperplane& hp);

// ---------------------------------------------------------------------------
// Point checks

struct Violation {
  double equality = 0.0;    ///< max_i |a_i x - b_i|
  double inequality = 0.0;  ///< max(0, max_k c_k x - d_k)
};

Violation violation(const LinearSystem& sys, const Vector& x);

/// Absolute tolerance used when a point is accepted as a solution of sys.
double solution_tolerance(const LinearSystem& sys, const Vector& x);

/// A x = b and C x <= d + slack, both within solution_tolerance.
bool satisfies(const LinearSystem& sys, const Vector& x, double slack = 0.0);

}  // namespace relaxfeas
