#include "apmads/noisy_blackbox.hpp"

#include <cmath>
#include <string>

#include "apmads/errors.hpp"

namespace apmads {

namespace {

void require_positive_sigma(double sigma) {
  if (!(sigma > 0.0)) throw InvalidSigma("sigma must be > 0, got " + std::to_string(sigma));
}

}  // namespace

double draws_for_sigma(double sigma) {
  require_positive_sigma(sigma);
  return 1.0 / (sigma * sigma);
}

double vme_draws_for_sigma(double sigma) {
  require_positive_sigma(sigma);
  return 1024.0 * 1800.0 * 1800.0 / (sigma * sigma);
}

double draws_for_sigma(double sigma, DrawConversion conversion) {
  return conversion == DrawConversion::Vme ? vme_draws_for_sigma(sigma) : draws_for_sigma(sigma);
}

void DrawLedger::charge(const Point& x, double sigma, double draws) {
  total_ += draws;
  if (keep_log_) log_.push_back({x, sigma, draws});
}

NoisyBlackbox::NoisyBlackbox(const Problem& problem, RandomSource rng)
    : problem_(problem), rng_(std::move(rng)) {}

void NoisyBlackbox::check_point(const Point& x) const {
  if (x.dimension() != problem_.dimension())
    throw InvalidInput("point dimension " + std::to_string(x.dimension()) + " != problem dimension " +
                       std::to_string(problem_.dimension()));
  if (!x.all_finite()) throw InvalidInput("point has non-finite coordinates");
}

bool NoisyBlackbox::feasible(const Point& x) const {
  check_point(x);
  return problem_.feasible(x);
}

Observation NoisyBlackbox::observe(const Point& x, double sigma) {
  ++evaluations_;
  return apmads::observe(problem_, x, sigma, rng_, ledger_);
}

Observation observe(const Problem& problem, const Point& x, double sigma, RandomSource& rng,
                    DrawLedger& ledger) {
  if (x.dimension() != problem.dimension()) throw InvalidInput("point dimension mismatch");
  if (!x.all_finite()) throw InvalidInput("point has non-finite coordinates");
  if (!(sigma > 0.0) || sigma > problem.sigma_max())
    throw InvalidSigma("sigma " + std::to_string(sigma) + " outside (0, " +
                       std::to_string(problem.sigma_max()) + "]");
  if (!problem.feasible(x)) return Observation{};

  const double z = rng.standard_normal();
  ledger.charge(x, sigma, draws_for_sigma(sigma, problem.draw_conversion()));
  return Observation{problem.truth(x) + z * sigma, sigma, true};
}

}  // namespace apmads
