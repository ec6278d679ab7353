#pragma once

#include <optional>

#include "exact.hpp"
#include "relaxfeas/oracle.hpp"

namespace relaxfeas::detail {

void check_dim(const LinearSystem& sys, const OracleLimits& limits);

/// A point of P minimizing c_k x. With `cap`, or when that LP is unbounded,
/// the slack d_k - c_k x is capped at max(1, slack of a feasible point).
/// nullopt iff P is empty.
std::optional<exact::QVec> slack_witness(const exact::QSystem& q, std::size_t k, bool cap);

/// Mean of slack_witness over all inequality rows (any point of P when there
/// are none). nullopt iff P is empty.
std::optional<exact::QVec> average_slack_witness(const exact::QSystem& q, bool cap);

bool strictly_inside(const exact::QSystem& q, const exact::QVec& x);

}  // namespace relaxfeas::detail
