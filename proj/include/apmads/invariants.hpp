#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apmads/estimation.hpp"
#include "apmads/precision.hpp"
#include "apmads/solver.hpp"

namespace apmads {

struct LogCheckOptions {
  /// When set, every non-Barrier transition r^k -> r^{k+1} is checked against
  /// C_MP / C_DP, and MP logs must have nondecreasing r.
  std::optional<PrecisionPolicy> policy;
};

/// Structural checks that need only the log: consecutive k, nondecreasing
/// draws, delta_m = min(delta_p, delta_p^2), power-of-two frame moves,
/// status/p consistency. Returns one message per violation.
std::vector<std::string> check_log(const std::vector<IterationRecord>& log,
                                   const LogCheckOptions& options = {});

/// Every cached point lies on the mesh of size `delta_min` anchored at
/// `origin`, up to the rounding of the coordinate arithmetic.
std::vector<std::string> check_mesh_membership(const EvaluationCache& cache, const Point& origin,
                                               double delta_min);

/// Sum over all feasible cached observations of 1/sigma^2.
double ledger_from_cache(const EvaluationCache& cache);

/// Post-poll precision: each feasible polled point has sigma^k(x) <= target,
/// unless its observation was clamped at sigma_max.
std::vector<std::string> check_poll_precision(const PollReport& report);

}  // namespace apmads
