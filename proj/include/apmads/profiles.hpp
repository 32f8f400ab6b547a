#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apmads/noisy_blackbox.hpp"
#include "apmads/solver.hpp"

namespace apmads {

/// One solver run prepared for profiling: the log plus the true objective of
/// each logged incumbent.
struct RunResult {
  std::string algorithm;
  std::string problem;
  std::uint64_t seed = 0;
  std::vector<IterationRecord> log;
  std::vector<double> truth;  ///< f(incumbent) per record
  double start_truth = 0.0;   ///< f(x_*^0)
  double optimum = 0.0;       ///< best known f(x_*)
};

RunResult make_run_result(std::string algorithm, const Problem& problem, std::uint64_t seed,
                          std::vector<IterationRecord> log);

/// (f(x0) - best_so_far) / (f(x0) - f*) over records with draws <= budget,
/// 0 when none fits. Throws InvalidInput if f(x0) == f*.
double accuracy(const RunResult& run, double budget);

/// f_acc after each record, best-so-far (nondecreasing).
std::vector<double> accuracy_trace(const RunResult& run);

/// Smallest logged budget with f_acc >= 1 - tau; +inf if never reached.
double budget_to_solve(const RunResult& run, double tau);

/// Right-continuous step function: value(x) = y[i] for the largest x[i] <= x,
/// 0 below x[0].
struct StepFunction {
  std::vector<double> x;
  std::vector<double> y;

  double operator()(double at) const;
  double final_value() const { return y.empty() ? 0.0 : y.back(); }
};

using Profile = std::map<std::string, StepFunction>;

/// Instances are (problem, seed) pairs. For each algorithm, fraction of
/// instances with N_{a,p} <= alpha * min_a N_{a,p}. With log_budget the
/// budgets are replaced by log10(N) before forming ratios.
Profile performance_profile(const std::vector<RunResult>& results, double tau,
                            bool log_budget = false);

/// Fraction of instances solved within budget = groups * (1 / sigma_ref^2).
Profile data_profile(const std::vector<RunResult>& results, double tau, double sigma_ref);

/// Union of the breakpoints of every curve in the profile, ascending.
std::vector<double> breakpoints(const Profile& profile);

}  // namespace apmads
