#include "apmads/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "apmads/errors.hpp"
#include "apmads/normal_stats.hpp"

namespace apmads {

namespace {

// Relative slack on the "already precise enough" test.
constexpr double kPrecisionSlack = 1e-12;

constexpr std::uint64_t kNoiseStream = 1;
constexpr std::uint64_t kPollStream = 2;

double positive_sigma(double sigma) { return std::max(sigma, std::numeric_limits<double>::min()); }

}  // namespace

SolverConfig SolverConfig::defaults(Variant v, const Problem& problem) {
  SolverConfig c;
  c.policy = PrecisionPolicy::defaults(v);
  c.search_enabled = v == Variant::DP;
  c.rho.sigma_max = problem.sigma_max();
  c.stop_delta_p = problem.stop_delta_p();
  return c;
}

bool SolverConfig::enforce_sigma_min_rule() {
  if (search_enabled || rho.sigma_min == 0.0) return false;
  rho.sigma_min = 0.0;
  return true;
}

void SolverConfig::validate() const {
  rho.validate();
  policy.validate();
  if (!search_enabled && rho.sigma_min != 0.0)
    throw InvalidInput("sigma_min must be 0 when the search step is disabled");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidInput("tau must lie in (0, 1)");
  if (!(delta_p0 > 0.0)) throw InvalidInput("delta_p0 must be > 0");
  if (!(stop_delta_p >= 0.0)) throw InvalidInput("stop_delta_p must be >= 0");
  if (!(stop_draws >= 0.0)) throw InvalidInput("stop_draws must be >= 0");
  if (!std::isfinite(r_init) || !std::isfinite(r_s)) throw InvalidInput("r_init and r_s must be finite");
}

PollOutcome poll_step(const Point& center, double delta_p, double r, const RhoParams& rho_params,
                      EvaluationCache& cache, NoisyBlackbox& blackbox, RandomSource& poll_rng) {
  const double target = positive_sigma(rho(rho_params, r));
  const PollSet poll = generate_poll(center, delta_p, poll_rng);

  PollOutcome out;
  out.report.target_sigma = target;

  auto refine = [&](const Point& x) {
    PollReport::Item item{x};
    const PointHistory* history = cache.find(x);
    if (history != nullptr ? history->infeasible() : !blackbox.feasible(x)) {
      if (history == nullptr) cache.record(x, Observation{});
      return item;
    }
    item.feasible = true;
    const double existing = cache.estimate(x).sigma;
    if (existing > target * (1.0 + kPrecisionSlack)) {
      const double sigma = *sigma_to_reach(existing, target, blackbox.sigma_max());
      cache.record(x, blackbox.observe(x, sigma));
      item.observed = true;
    }
    item.sigma_after = cache.estimate(x).sigma;
    item.clamped = item.observed && item.sigma_after > target * (1.0 + kPrecisionSlack);
    return item;
  };

  out.report.center = refine(center);
  const double f_center = cache.estimate(center).value;

  double f_best = kInf;
  for (std::size_t i = 0; i < poll.size(); ++i) {
    Point x = poll.candidate(i);
    PollReport::Item item = refine(x);
    if (item.feasible) {
      const double f = cache.estimate(x).value;
      if (!out.best || f < f_best) {
        out.best = x;
        f_best = f;
      }
    }
    out.report.candidates.push_back(std::move(item));
  }

  if (!out.best)
    out.status = IterationStatus::Barrier;
  else
    out.status = f_best < f_center ? IterationStatus::Success : IterationStatus::Failure;
  return out;
}

Point search_step(EvaluationCache& cache, const Point& incumbent, double r,
                  const SolverConfig& config, NoisyBlackbox& blackbox) {
  if (!config.search_enabled) return incumbent;
  const Estimate reference = cache.estimate(incumbent);
  if (!reference.defined()) return incumbent;

  std::vector<Point> selected;
  for (const auto& entry : cache.entries()) {
    const Estimate est = entry.history.estimate();
    if (est.defined() && p_value(est, reference) >= config.tau) selected.push_back(entry.point);
  }
  if (selected.empty()) return incumbent;

  const double sigma_s =
      std::min(positive_sigma(rho(config.rho, r - config.r_s)), blackbox.sigma_max());
  for (const Point& x : selected) cache.record(x, blackbox.observe(x, sigma_s));
  return cache.incumbent();
}

namespace {

IterationRecord make_record(std::size_t k, const EvaluationCache& cache, const Point& incumbent,
                            double draws, double delta_p, double r, double p,
                            IterationStatus status) {
  IterationRecord rec;
  rec.k = k;
  rec.draws = draws;
  rec.incumbent = incumbent;
  const Estimate est = cache.estimate(incumbent);
  rec.f_inc = est.value;
  rec.sig_inc = est.sigma;
  rec.delta_p = delta_p;
  rec.delta_m = mesh_size(delta_p);
  rec.r = r;
  rec.p = p;
  rec.status = status;
  rec.cache_size = cache.size();
  return rec;
}

bool should_stop(const SolverConfig& config, std::size_t k, double delta_p, double draws) {
  return delta_p < config.stop_delta_p || draws >= config.stop_draws || k > config.max_iterations;
}

}  // namespace

RunOutput run(const Problem& problem, const SolverConfig& config, const RunObserver& observer) {
  config.validate();
  const RandomSource base(config.seed);
  NoisyBlackbox blackbox(problem, base.split(kNoiseStream));
  RandomSource poll_rng = base.split(kPollStream);

  RunOutput out;
  Point incumbent = config.start.value_or(problem.start());
  if (!blackbox.feasible(incumbent)) throw InvalidInput("start point is infeasible");
  out.incumbent = incumbent;

  double delta_p = config.delta_p0;
  double r = config.r_init;
  for (std::size_t k = 1; !should_stop(config, k, delta_p, blackbox.ledger().total_draws()); ++k) {
    const Point center = search_step(out.cache, incumbent, r, config, blackbox);
    PollOutcome poll = poll_step(center, delta_p, r, config.rho, out.cache, blackbox, poll_rng);
    if (observer.on_poll) observer.on_poll(poll.report);

    const double r_used = r;
    const double delta_p_used = delta_p;
    double p = 0.0;
    if (poll.status == IterationStatus::Barrier) {
      delta_p = update_frame(delta_p, poll.status, p, config.policy.beta_l, config.policy.beta_u);
    } else {
      p = p_value(out.cache, *poll.best, center);
      delta_p = update_frame(delta_p, poll.status, p, config.policy.beta_l, config.policy.beta_u);
      r = update_r(config.policy, r, p);
    }

    incumbent = out.cache.incumbent();
    out.log.push_back(make_record(k, out.cache, incumbent, blackbox.ledger().total_draws(),
                                  delta_p_used, r_used, p, poll.status));
    if (observer.on_iteration) observer.on_iteration(out.log.back());
  }

  out.incumbent = incumbent;
  out.total_draws = blackbox.ledger().total_draws();
  return out;
}

RunOutput run_fixed_precision_baseline(const Problem& problem, double sigma_fixed,
                                       const SolverConfig& config, const RunObserver& observer) {
  if (!(sigma_fixed > 0.0) || sigma_fixed > problem.sigma_max())
    throw InvalidSigma("sigma_fixed " + std::to_string(sigma_fixed) + " outside (0, sigma_max]");
  if (!(config.delta_p0 > 0.0)) throw InvalidInput("delta_p0 must be > 0");

  const RandomSource base(config.seed);
  NoisyBlackbox blackbox(problem, base.split(kNoiseStream));
  RandomSource poll_rng = base.split(kPollStream);

  RunOutput out;
  Point incumbent = config.start.value_or(problem.start());
  if (!blackbox.feasible(incumbent)) throw InvalidInput("start point is infeasible");
  out.incumbent = incumbent;

  auto evaluate_once = [&](const Point& x) {
    PollReport::Item item{x};
    const PointHistory* history = out.cache.find(x);
    if (history == nullptr) {
      out.cache.record(x, blackbox.feasible(x) ? blackbox.observe(x, sigma_fixed) : Observation{});
      item.observed = true;
    }
    const Estimate est = out.cache.estimate(x);
    item.feasible = est.defined();
    item.sigma_after = est.sigma;
    return item;
  };

  double delta_p = config.delta_p0;
  for (std::size_t k = 1; !should_stop(config, k, delta_p, blackbox.ledger().total_draws()); ++k) {
    const PollSet poll = generate_poll(incumbent, delta_p, poll_rng);
    PollReport report;
    report.target_sigma = sigma_fixed;
    report.center = evaluate_once(incumbent);
    const double f_center = out.cache.estimate(incumbent).value;

    double f_best = kInf;
    bool any_feasible = false;
    for (std::size_t i = 0; i < poll.size(); ++i) {
      PollReport::Item item = evaluate_once(poll.candidate(i));
      if (item.feasible) {
        any_feasible = true;
        f_best = std::min(f_best, out.cache.estimate(item.point).value);
      }
      report.candidates.push_back(std::move(item));
    }
    if (observer.on_poll) observer.on_poll(report);

    IterationStatus status = IterationStatus::Barrier;
    if (any_feasible) status = f_best < f_center ? IterationStatus::Success : IterationStatus::Failure;
    const bool success = status == IterationStatus::Success;
    const double delta_p_used = delta_p;
    delta_p = success ? 2.0 * delta_p : delta_p / 2.0;

    incumbent = out.cache.incumbent();
    out.log.push_back(make_record(k, out.cache, incumbent, blackbox.ledger().total_draws(),
                                  delta_p_used, 0.0, success ? 1.0 : 0.0, status));
    if (observer.on_iteration) observer.on_iteration(out.log.back());
  }

  out.incumbent = incumbent;
  out.total_draws = blackbox.ledger().total_draws();
  return out;
}

}  // namespace apmads
