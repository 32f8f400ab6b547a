#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "apmads/point.hpp"
#include "apmads/random.hpp"

namespace apmads {

/// One noisy evaluation. Infeasible observations carry value = +inf and no
/// meaningful sigma.
struct Observation {
  double value = std::numeric_limits<double>::infinity();
  double sigma = std::numeric_limits<double>::infinity();
  bool feasible = false;
};

/// How a requested standard deviation converts to Monte-Carlo draws.
enum class DrawConversion {
  Standard,  ///< N = 1 / sigma^2
  Vme,       ///< N = 2^10 * 1800^2 / sigma^2
};

/// N = 1/sigma^2. Throws InvalidSigma for sigma <= 0.
double draws_for_sigma(double sigma);
/// N = 2^10 * 1800^2 / sigma^2 (1024 draws at sigma = 1800, x4 per halving).
double vme_draws_for_sigma(double sigma);
double draws_for_sigma(double sigma, DrawConversion conversion);

/// Exact account of the equivalent Monte-Carlo draws spent in a run.
class DrawLedger {
 public:
  struct Entry {
    Point point;
    double sigma;
    double draws;
  };

  void charge(const Point& x, double sigma, double draws);

  double total_draws() const { return total_; }
  const std::vector<Entry>& entries() const { return log_; }

  void set_keep_log(bool keep) { keep_log_ = keep; }

 private:
  double total_ = 0.0;
  bool keep_log_ = false;
  std::vector<Entry> log_;
};

/// Deterministic objective with a closed-form domain. The true objective is
/// only handed to the solver through NoisyBlackbox, which never exposes it.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual bool feasible(const Point& x) const = 0;
  /// f(x) for feasible x; +inf otherwise.
  virtual double truth(const Point& x) const = 0;
  virtual Point start() const = 0;
  /// Default frame-size stopping threshold.
  virtual double stop_delta_p() const = 0;
  /// Best known objective value, used to normalise accuracy.
  virtual double best_known_value() const = 0;
  virtual double sigma_max() const { return 1.0; }
  virtual DrawConversion draw_conversion() const { return DrawConversion::Standard; }
};

/// Solver-facing view of a Problem: observation with solver-chosen sigma plus
/// a deterministic feasibility check. Owns the noise stream and the ledger.
class NoisyBlackbox {
 public:
  NoisyBlackbox(const Problem& problem, RandomSource rng);

  /// Observe f(x) + sigma * z. Infeasible points return feasible = false and
  /// cost nothing.
  Observation observe(const Point& x, double sigma);

  bool feasible(const Point& x) const;

  std::size_t dimension() const { return problem_.dimension(); }
  double sigma_max() const { return problem_.sigma_max(); }
  const DrawLedger& ledger() const { return ledger_; }
  DrawLedger& ledger() { return ledger_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  void check_point(const Point& x) const;

  const Problem& problem_;
  RandomSource rng_;
  DrawLedger ledger_;
  std::size_t evaluations_ = 0;
};

/// Free-function form of NoisyBlackbox::observe for a caller-owned rng and
/// ledger.
Observation observe(const Problem& problem, const Point& x, double sigma, RandomSource& rng,
                    DrawLedger& ledger);

}  // namespace apmads
