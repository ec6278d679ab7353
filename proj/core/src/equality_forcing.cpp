#include "exact.hpp"
#include "oracle_detail.hpp"
#include "relaxfeas/oracle.hpp"

namespace relaxfeas {

std::variant<StrengthenedFeasible, StrengthenedInfeasible> check_equality_forcing(
    const LinearSystem& sys, const OracleLimits& limits) {
  detail::check_dim(sys, limits);
  const exact::QSystem q = exact::to_exact(sys);
  const auto avg = detail::average_slack_witness(q, false);
  if (!avg || !detail::strictly_inside(q, *avg)) return StrengthenedInfeasible{};

  exact::Q eta(1, 2);
  for (std::size_t k = 0; k < q.C.rows(); ++k) {
    const exact::Q slack = q.d[k] - exact::row_dot(q.C, k, *avg);
    if (slack < eta) eta = slack;
  }
  exact::QVec w(q.n + 1);
  for (std::size_t j = 0; j < q.n; ++j) w[j] = (*avg)[j] / eta;
  w[q.n] = 1 / eta;
  return StrengthenedFeasible{exact::to_double(w)};
}

}  // namespace relaxfeas
