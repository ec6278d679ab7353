#include "relaxfeas/oracle.hpp"

#include <set>
#include <string>

#include "exact.hpp"
#include "oracle_detail.hpp"
#include "relaxfeas/errors.hpp"

namespace relaxfeas {

using exact::Q;
using exact::QVec;

namespace detail {

void check_dim(const LinearSystem& sys, const OracleLimits& limits) {
  if (sys.n() > limits.max_continuous_dim) {
    throw Error(ErrorCode::OracleLimitExceeded,
                "oracle dimension " + std::to_string(sys.n()) + " exceeds " +
                    std::to_string(limits.max_continuous_dim));
  }
}

std::optional<QVec> slack_witness(const exact::QSystem& q, std::size_t k, bool cap) {
  if (!cap) {
    const exact::LPResult r = exact::minimize(q, q.C.row(k));
    if (r.status == exact::LPStatus::Infeasible) return std::nullopt;
    if (r.status == exact::LPStatus::Optimal) return r.x;
  }
  // Cap the slack at max(1, slack of some feasible point) so the LP is
  // bounded and still feasible.
  const exact::LPResult start = exact::minimize(q, {});
  if (start.status == exact::LPStatus::Infeasible) return std::nullopt;
  Q limit = q.d[k] - exact::row_dot(q.C, k, start.x);
  if (limit < 1) limit = 1;
  exact::QSystem sys = q;
  QVec row = q.C.row(k);
  for (auto& v : row) v = -v;
  sys.C.append_row(row);
  sys.d.push_back(limit - q.d[k]);
  return exact::minimize(sys, q.C.row(k)).x;
}

std::optional<QVec> average_slack_witness(const exact::QSystem& q, bool cap) {
  const std::size_t l = q.C.rows();
  if (l == 0) {
    const exact::LPResult r = exact::minimize(q, {});
    if (r.status == exact::LPStatus::Infeasible) return std::nullopt;
    return r.x;
  }
  QVec avg(q.n, Q(0));
  for (std::size_t k = 0; k < l; ++k) {
    auto w = slack_witness(q, k, cap);
    if (!w) return std::nullopt;
    for (std::size_t j = 0; j < q.n; ++j) avg[j] += (*w)[j];
  }
  for (auto& v : avg) v /= Q(static_cast<long>(l));
  return avg;
}

bool strictly_inside(const exact::QSystem& q, const QVec& x) {
  for (std::size_t k = 0; k < q.C.rows(); ++k) {
    if (exact::row_dot(q.C, k, x) >= q.d[k]) return false;
  }
  return true;
}

}  // namespace detail

std::vector<Vector> oracle_vertices(const LinearSystem& sys, const OracleLimits& limits) {
  detail::check_dim(sys, limits);
  const exact::QSystem q = exact::to_exact(sys);
  const std::vector<std::size_t> eq = exact::independent_rows(q.A);
  const std::size_t n = q.n, l = q.C.rows();
  if (eq.size() > n) return {};
  const std::size_t k = n - eq.size();
  if (k > l) return {};

  // C(l, k) with overflow guard.
  double subsets = 1.0;
  for (std::size_t i = 0; i < k; ++i) subsets = subsets * static_cast<double>(l - i) / (i + 1);
  if (subsets > static_cast<double>(limits.max_subsets)) {
    throw Error(ErrorCode::OracleLimitExceeded,
                "vertex enumeration needs " + std::to_string(subsets) + " basis subsets");
  }

  std::set<QVec> found;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    exact::QMat M(n, n);
    QVec rhs(n);
    std::size_t r = 0;
    for (std::size_t i : eq) {
      for (std::size_t j = 0; j < n; ++j) M(r, j) = q.A(i, j);
      rhs[r++] = q.b[i];
    }
    for (std::size_t i : pick) {
      for (std::size_t j = 0; j < n; ++j) M(r, j) = q.C(i, j);
      rhs[r++] = q.d[i];
    }
    if (auto x = exact::solve_square(std::move(M), std::move(rhs))) {
      if (exact::satisfies(q, *x)) found.insert(std::move(*x));
    }
    // Next k-combination of {0..l-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == l - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<Vector> out;
  out.reserve(found.size());
  for (const auto& v : found) out.push_back(exact::to_double(v));
  return out;
}

OracleVerdict oracle_feasible(const LinearSystem& sys, bool with_vertices,
                              const OracleLimits& limits) {
  detail::check_dim(sys, limits);
  const exact::QSystem q = exact::to_exact(sys);
  const exact::LPResult r = exact::minimize(q, {});
  OracleVerdict v;
  v.feasible = r.status != exact::LPStatus::Infeasible;
  if (v.feasible) v.witness = exact::to_double(r.x);
  if (with_vertices) v.vertices = oracle_vertices(sys, limits);
  if (v.feasible) {
    auto avg = detail::average_slack_witness(q, false);
    v.strictly_feasible = avg && detail::strictly_inside(q, *avg);
  } else {
    v.strictly_feasible = false;
  }
  return v;
}

bool oracle_integer01(const LinearSystem& sys, const OracleLimits& limits) {
  const Index n = sys.n();
  if (n > limits.max_binary_dim) {
    throw Error(ErrorCode::OracleLimitExceeded,
                "binary enumeration over " + std::to_string(n) + " variables");
  }
  auto integral = [](const auto& M) { return (M.array() == M.array().round()).all(); };
  const bool small_ints = integral(sys.A()) && integral(sys.b()) && integral(sys.C()) &&
                          integral(sys.d()) &&
                          (sys.A().size() == 0 || sys.A().cwiseAbs().maxCoeff() < 1e6) &&
                          (sys.C().size() == 0 || sys.C().cwiseAbs().maxCoeff() < 1e6);
  const std::uint64_t count = std::uint64_t{1} << n;
  if (small_ints) {
    // Sums of at most 20 integers below 1e6 are exact in double.
    Vector x(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      for (Index j = 0; j < n; ++j) x(j) = static_cast<double>((mask >> j) & 1u);
      if (sys.m() && ((sys.A() * x - sys.b()).array() != 0.0).any()) continue;
      if (sys.l() && ((sys.C() * x - sys.d()).array() > 0.0).any()) continue;
      return true;
    }
    return false;
  }
  const exact::QSystem q = exact::to_exact(sys);
  QVec x(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (Index j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
    if (exact::satisfies(q, x)) return true;
  }
  return false;
}

std::optional<Vector> oracle_strict(const LinearSystem& sys, const OracleLimits& limits) {
  detail::check_dim(sys, limits);
  const exact::QSystem q = exact::to_exact(sys);
  auto avg = detail::average_slack_witness(q, false);
  if (!avg || !detail::strictly_inside(q, *avg)) return std::nullopt;
  return exact::to_double(*avg);
}

OracleOptimum oracle_minimize(const LinearSystem& sys, const Vector& objective,
                              const OracleLimits& limits) {
  detail::check_dim(sys, limits);
  if (objective.size() != sys.n()) throw Error(ErrorCode::DimensionMismatch, "objective size");
  const exact::LPResult r = exact::minimize(exact::to_exact(sys), exact::to_exact(objective));
  OracleOptimum out;
  switch (r.status) {
    case exact::LPStatus::Infeasible: out.status = OracleOptimum::Status::Infeasible; break;
    case exact::LPStatus::Unbounded: out.status = OracleOptimum::Status::Unbounded; break;
    case exact::LPStatus::Optimal:
      out.status = OracleOptimum::Status::Optimal;
      out.x = exact::to_double(r.x);
      out.value = r.value.convert_to<double>();
      break;
  }
  return out;
}

std::vector<Index> oracle_implied_equalities(const LinearSystem& sys, const OracleLimits& limits) {
  detail::check_dim(sys, limits);
  const exact::QSystem q = exact::to_exact(sys);
  std::vector<Index> rows;
  for (std::size_t k = 0; k < q.C.rows(); ++k) {
    auto w = detail::slack_witness(q, k, true);
    if (!w) return {};
    if (exact::row_dot(q.C, k, *w) == q.d[k]) rows.push_back(static_cast<Index>(k));
  }
  return rows;
}

}  // namespace relaxfeas
