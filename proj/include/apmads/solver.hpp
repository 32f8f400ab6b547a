#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "apmads/estimation.hpp"
#include "apmads/mesh.hpp"
#include "apmads/noisy_blackbox.hpp"
#include "apmads/precision.hpp"

namespace apmads {

struct SolverConfig {
  RhoParams rho;
  PrecisionPolicy policy;
  bool search_enabled = true;
  double r_s = -5.0;  ///< search observations use sigma_s = rho(r - r_s)
  double tau = 0.25;  ///< search re-estimates points with p-value >= tau
  double r_init = 0.0;
  double delta_p0 = 1.0;
  double stop_delta_p = 1e-10;
  double stop_draws = std::numeric_limits<double>::infinity();
  std::size_t max_iterations = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<Point> start;  ///< overrides the problem's start point

  /// MP: no search, (beta_l, beta_u) = (0.0003, 0.997). DP: search on,
  /// (0.15, 0.85). Stopping frame size taken from the problem.
  static SolverConfig defaults(Variant v, const Problem& problem);

  Variant variant() const { return policy.variant; }

  /// Forces rho.sigma_min to 0 when the search is disabled (the poll alone
  /// cannot tighten estimates below sigma_min). Returns true if it changed.
  bool enforce_sigma_min_rule();

  /// Throws InvalidInput on inconsistent parameters, including a positive
  /// sigma_min with the search disabled.
  void validate() const;
};

struct IterationRecord {
  std::size_t k = 0;
  double draws = 0.0;  ///< cumulative, after the iteration
  Point incumbent;     ///< x_*^k after the iteration
  double f_inc = kInf;
  double sig_inc = kInf;
  double delta_p = 0.0;  ///< frame size used by the iteration's poll
  double delta_m = 0.0;
  double r = 0.0;  ///< precision index used by the iteration's poll
  double p = 0.0;
  IterationStatus status = IterationStatus::Failure;
  std::size_t cache_size = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

/// What one poll did to each of its points; consumed by invariant checks.
struct PollReport {
  struct Item {
    Point point;
    bool feasible = false;
    bool observed = false;
    bool clamped = false;  ///< the single observation hit sigma_max
    double sigma_after = kInf;
  };
  double target_sigma = 0.0;
  Item center;
  std::vector<Item> candidates;
};

struct PollOutcome {
  std::optional<Point> best;  ///< empty on Barrier
  IterationStatus status = IterationStatus::Barrier;
  PollReport report;
};

/// Bring the center and every feasible candidate to
/// sigma^k(x) <= rho(r) (one observation per point, clamped at sigma_max),
/// then classify the iteration.
PollOutcome poll_step(const Point& center, double delta_p, double r, const RhoParams& rho_params,
                      EvaluationCache& cache, NoisyBlackbox& blackbox, RandomSource& poll_rng);

/// Optional search: one observation at rho(r - r_s) for every cached feasible
/// point, the incumbent included, whose p-value against the incumbent reaches
/// tau, then the cache minimiser. Returns the incumbent untouched when disabled.
Point search_step(EvaluationCache& cache, const Point& incumbent, double r,
                  const SolverConfig& config, NoisyBlackbox& blackbox);

struct RunObserver {
  std::function<void(const PollReport&)> on_poll;
  std::function<void(const IterationRecord&)> on_iteration;
};

struct RunOutput {
  Point incumbent;
  std::vector<IterationRecord> log;
  EvaluationCache cache;
  double total_draws = 0.0;
};

/// DPMADS or MPMADS according to config.policy.variant.
/// Throws InvalidInput if the start point is infeasible.
RunOutput run(const Problem& problem, const SolverConfig& config,
              const RunObserver& observer = {});

/// Plain MADS where every point is observed once at sigma_fixed and treated as
/// exact. Same mesh, stopping rules and log format.
RunOutput run_fixed_precision_baseline(const Problem& problem, double sigma_fixed,
                                       const SolverConfig& config,
                                       const RunObserver& observer = {});

}  // namespace apmads
