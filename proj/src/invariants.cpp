#include "apmads/invariants.hpp"

#include <cmath>
#include <limits>

#include "apmads/mesh.hpp"
#include "apmads/run_log.hpp"

namespace apmads {

namespace {

std::string at(std::size_t k) { return "k=" + std::to_string(k) + ": "; }

}  // namespace

std::vector<std::string> check_log(const std::vector<IterationRecord>& log,
                                   const LogCheckOptions& options) {
  std::vector<std::string> issues;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto& rec = log[i];
    if (rec.k != i + 1) issues.push_back(at(rec.k) + "iteration counter out of sequence");
    if (rec.delta_m != mesh_size(rec.delta_p))
      issues.push_back(at(rec.k) + "delta_m " + format_double(rec.delta_m) + " != min(delta_p, delta_p^2)");
    if (!(rec.p >= 0.0 && rec.p <= 1.0)) issues.push_back(at(rec.k) + "p outside [0, 1]");
    switch (rec.status) {
      case IterationStatus::Success:
        if (rec.p < 0.5) issues.push_back(at(rec.k) + "success with p < 0.5");
        break;
      case IterationStatus::Failure:
        if (rec.p > 0.5) issues.push_back(at(rec.k) + "failure with p > 0.5");
        break;
      case IterationStatus::Barrier:
        if (rec.p != 0.0) issues.push_back(at(rec.k) + "barrier with p != 0");
        break;
    }
    if (i == 0) continue;

    const auto& prev = log[i - 1];
    if (rec.draws < prev.draws) issues.push_back(at(rec.k) + "cumulative draws decreased");
    const double ratio = rec.delta_p / prev.delta_p;
    if (ratio != 0.5 && ratio != 1.0 && ratio != 2.0)
      issues.push_back(at(rec.k) + "frame size changed by a factor other than 1/2, 1, 2");
    if (prev.status == IterationStatus::Barrier && ratio != 0.5)
      issues.push_back(at(rec.k) + "frame not halved after a barrier iteration");
    if (prev.status == IterationStatus::Barrier && rec.r != prev.r)
      issues.push_back(at(rec.k) + "precision index changed after a barrier iteration");

    if (options.policy) {
      const auto& pol = *options.policy;
      if (pol.variant == Variant::MP && rec.r < prev.r)
        issues.push_back(at(rec.k) + "MP precision index decreased");
      if (prev.status != IterationStatus::Barrier && !check_condition(pol, prev.r, rec.r, prev.p))
        issues.push_back(at(rec.k) + "precision update violates C_" +
                         (pol.variant == Variant::MP ? "MP" : "DP"));
    }
  }
  return issues;
}

std::vector<std::string> check_mesh_membership(const EvaluationCache& cache, const Point& origin,
                                               double delta_min) {
  std::vector<std::string> issues;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (const auto& entry : cache.entries()) {
    const Point& x = entry.point;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
      const double offset = x[i] - origin[i];
      const double steps = std::round(offset / delta_min);
      const double residual = std::abs(offset - steps * delta_min);
      // a few ulps of accumulated rounding
      const double slack = 64.0 * eps * (std::abs(x[i]) + std::abs(origin[i]) + 1.0);
      if (residual > slack) {
        issues.push_back("point off mesh in coordinate " + std::to_string(i) + ": offset " +
                         format_double(offset) + " vs step " + format_double(delta_min));
        break;
      }
    }
  }
  return issues;
}

double ledger_from_cache(const EvaluationCache& cache) {
  double total = 0.0;
  for (const auto& entry : cache.entries())
    for (const auto& obs : entry.history.observations())
      if (obs.feasible) total += 1.0 / (obs.sigma * obs.sigma);
  return total;
}

std::vector<std::string> check_poll_precision(const PollReport& report) {
  std::vector<std::string> issues;
  auto check = [&](const PollReport::Item& item) {
    if (!item.feasible || item.clamped) return;
    if (item.sigma_after > report.target_sigma * (1.0 + 1e-9))
      issues.push_back("sigma " + format_double(item.sigma_after) + " above target " +
                       format_double(report.target_sigma));
  };
  check(report.center);
  for (const auto& c : report.candidates) check(c);
  return issues;
}

}  // namespace apmads
