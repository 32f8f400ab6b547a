#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "apmads/noisy_blackbox.hpp"
#include "apmads/point.hpp"

namespace apmads {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Maximum-likelihood estimate of f(x) and its standard deviation.
struct Estimate {
  double value = kInf;
  double sigma = kInf;

  bool defined() const { return value != kInf; }
};

/// Observation history at one point. Keeps the running sums
/// sum(lambda/sigma^2) and sum(1/sigma^2) so the estimate is O(1).
class PointHistory {
 public:
  void append(const Observation& obs);

  /// (sum lambda/s^2 / sum 1/s^2, (sum 1/s^2)^-1/2), or (+inf, +inf) when the
  /// history is empty or the point is infeasible.
  Estimate estimate() const;

  const std::vector<Observation>& observations() const { return observations_; }
  bool infeasible() const { return infeasible_; }
  std::size_t size() const { return observations_.size(); }

 private:
  std::vector<Observation> observations_;
  double weighted_sum_ = 0.0;
  double weight_ = 0.0;
  bool infeasible_ = false;
};

/// The cache V^k: point -> history, with insertion order preserved for
/// deterministic tie-breaking.
class EvaluationCache {
 public:
  struct Entry {
    Point point;
    PointHistory history;
  };

  void record(const Point& x, const Observation& obs);

  Estimate estimate(const Point& x) const;
  const PointHistory* find(const Point& x) const;
  bool contains(const Point& x) const { return index_.contains(x); }

  /// Point with the lowest estimate; ties go to the earliest inserted point.
  /// Throws NoIncumbent when no feasible point has been observed.
  const Point& incumbent() const;

  /// Entries in insertion order.
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Point, std::size_t> index_;
  std::vector<Entry> entries_;
};

/// (1/existing^2 + sum 1/s_i^2)^-1/2; +inf inputs contribute zero weight.
double combined_sigma(double existing_sigma, std::span<const double> new_sigmas);

/// Standard deviation of a single new observation that brings the combined
/// sigma from `existing_sigma` down to `target`, clamped to sigma_max. Empty
/// when existing_sigma <= target already. Throws InvalidInput for target <= 0.
std::optional<double> sigma_to_reach(double existing_sigma, double target, double sigma_max);

}  // namespace apmads
