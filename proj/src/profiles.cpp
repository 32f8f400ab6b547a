#include "apmads/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "apmads/errors.hpp"
#include "apmads/estimation.hpp"

namespace apmads {

RunResult make_run_result(std::string algorithm, const Problem& problem, std::uint64_t seed,
                          std::vector<IterationRecord> log) {
  RunResult r;
  r.algorithm = std::move(algorithm);
  r.problem = problem.name();
  r.seed = seed;
  r.truth.reserve(log.size());
  for (const auto& rec : log) r.truth.push_back(problem.truth(rec.incumbent));
  r.log = std::move(log);
  r.start_truth = problem.truth(problem.start());
  r.optimum = problem.best_known_value();
  return r;
}

namespace {

double normalised(const RunResult& run, double f) {
  const double span = run.start_truth - run.optimum;
  if (span == 0.0 || !std::isfinite(span))
    throw InvalidInput("degenerate accuracy normalisation: f(x0) == f*");
  return (run.start_truth - f) / span;
}

}  // namespace

std::vector<double> accuracy_trace(const RunResult& run) {
  std::vector<double> out;
  out.reserve(run.truth.size());
  double best = run.start_truth;
  for (double f : run.truth) {
    best = std::min(best, f);
    out.push_back(normalised(run, best));
  }
  return out;
}

double accuracy(const RunResult& run, double budget) {
  double best = kInf;
  for (std::size_t i = 0; i < run.log.size() && run.log[i].draws <= budget; ++i)
    best = std::min(best, run.truth[i]);
  if (best == kInf) {
    normalised(run, run.start_truth);  // still reject a degenerate problem
    return 0.0;
  }
  return normalised(run, std::min(best, run.start_truth));
}

double budget_to_solve(const RunResult& run, double tau) {
  const auto trace = accuracy_trace(run);
  for (std::size_t i = 0; i < trace.size(); ++i)
    if (trace[i] >= 1.0 - tau) return run.log[i].draws;
  return kInf;
}

double StepFunction::operator()(double at) const {
  auto it = std::upper_bound(x.begin(), x.end(), at);
  if (it == x.begin()) return 0.0;
  return y[static_cast<std::size_t>(it - x.begin()) - 1];
}

namespace {

using Instance = std::pair<std::string, std::uint64_t>;

struct BudgetTable {
  std::vector<std::string> algorithms;
  std::vector<Instance> instances;
  std::map<std::string, std::map<Instance, double>> budget;  // missing -> +inf

  double at(const std::string& algo, const Instance& inst) const {
    const auto& per = budget.at(algo);
    auto it = per.find(inst);
    return it == per.end() ? kInf : it->second;
  }
};

BudgetTable solve_budgets(const std::vector<RunResult>& results, double tau) {
  std::set<std::string> algos;
  std::set<Instance> instances;
  BudgetTable table;
  for (const auto& run : results) {
    algos.insert(run.algorithm);
    const Instance inst{run.problem, run.seed};
    instances.insert(inst);
    table.budget[run.algorithm][inst] = budget_to_solve(run, tau);
  }
  table.algorithms.assign(algos.begin(), algos.end());
  table.instances.assign(instances.begin(), instances.end());
  return table;
}

StepFunction cumulative(std::vector<double> values, std::size_t total) {
  StepFunction f;
  values.erase(std::remove_if(values.begin(), values.end(), [](double v) { return !std::isfinite(v); }),
               values.end());
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double frac = static_cast<double>(i + 1) / static_cast<double>(total);
    if (!f.x.empty() && f.x.back() == values[i])
      f.y.back() = frac;
    else {
      f.x.push_back(values[i]);
      f.y.push_back(frac);
    }
  }
  return f;
}

}  // namespace

Profile performance_profile(const std::vector<RunResult>& results, double tau, bool log_budget) {
  const BudgetTable table = solve_budgets(results, tau);
  auto cost = [&](double n) { return log_budget && std::isfinite(n) ? std::log10(n) : n; };

  std::map<std::string, std::vector<double>> ratios;
  for (const auto& inst : table.instances) {
    double best = kInf;
    for (const auto& a : table.algorithms) best = std::min(best, cost(table.at(a, inst)));
    for (const auto& a : table.algorithms) {
      const double mine = cost(table.at(a, inst));
      double ratio = kInf;
      if (std::isfinite(mine)) ratio = mine == best ? 1.0 : (best > 0.0 ? mine / best : kInf);
      ratios[a].push_back(ratio);
    }
  }
  Profile profile;
  for (const auto& a : table.algorithms)
    profile[a] = cumulative(std::move(ratios[a]), table.instances.size());
  return profile;
}

Profile data_profile(const std::vector<RunResult>& results, double tau, double sigma_ref) {
  const double reference_draws = draws_for_sigma(sigma_ref);
  const BudgetTable table = solve_budgets(results, tau);
  Profile profile;
  for (const auto& a : table.algorithms) {
    std::vector<double> groups;
    for (const auto& inst : table.instances) groups.push_back(table.at(a, inst) / reference_draws);
    profile[a] = cumulative(std::move(groups), table.instances.size());
  }
  return profile;
}

std::vector<double> breakpoints(const Profile& profile) {
  std::set<double> all;
  for (const auto& [name, f] : profile) all.insert(f.x.begin(), f.x.end());
  return {all.begin(), all.end()};
}

}  // namespace apmads
