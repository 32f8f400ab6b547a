#include "apmads/precision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "apmads/errors.hpp"

namespace apmads {

void RhoParams::validate() const {
  if (!(sigma_min >= 0.0)) throw InvalidInput("sigma_min must be >= 0");
  if (!(sigma_max > sigma_min) || !std::isfinite(sigma_max))
    throw InvalidInput("sigma_max must be finite and > sigma_min");
  if (!(theta > 0.0)) throw InvalidInput("theta must be > 0");
  if (!std::isfinite(r0)) throw InvalidInput("r0 must be finite");
}

double rho(const RhoParams& params, double r) {
  const double half_span = (params.sigma_max - params.sigma_min) / 2.0;
  const double shift = (r - params.r0) * params.theta;
  const double sigma = r >= params.r0
                           ? params.sigma_min + half_span * std::pow(10.0, -shift)
                           : params.sigma_min + half_span * (2.0 - std::pow(10.0, shift));
  return std::clamp(sigma, params.sigma_min, params.sigma_max);
}

std::string_view to_string(Variant v) { return v == Variant::MP ? "mpmads" : "dpmads"; }

Variant parse_variant(std::string_view s) {
  if (s == "mp" || s == "MP" || s == "mpmads") return Variant::MP;
  if (s == "dp" || s == "DP" || s == "dpmads") return Variant::DP;
  throw InvalidInput("unknown variant '" + std::string(s) + "' (expected mp or dp)");
}

PrecisionPolicy PrecisionPolicy::defaults(Variant v) {
  PrecisionPolicy p;
  p.variant = v;
  if (v == Variant::MP) {
    p.beta_l = 0.0003;
    p.beta_u = 0.997;
  }
  return p;
}

void PrecisionPolicy::validate() const {
  if (!(beta_l > 0.0 && beta_l <= 0.5)) throw InvalidInput("beta_l must lie in (0, 0.5]");
  if (!(beta_u >= 0.5 && beta_u < 1.0)) throw InvalidInput("beta_u must lie in [0.5, 1)");
  if (!(step > 0.0)) throw InvalidInput("precision step must be > 0");
  if (variant == Variant::DP && !(dp_decrease_threshold > 0.0 && dp_decrease_threshold < beta_l))
    throw InvalidInput("dp_decrease_threshold must lie in (0, beta_l)");
}

double update_r(const PrecisionPolicy& policy, double r, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p-value outside [0, 1]");
  const bool uncertain = p >= policy.beta_l && p <= policy.beta_u;
  if (uncertain) return r + policy.step;
  if (policy.variant == Variant::MP) return r;
  const double q = std::min(p, 1.0 - p);
  return q < policy.dp_decrease_threshold ? r - policy.step : r;
}

bool check_condition(Variant variant, double r_old, double r_new, double p, double beta_l,
                     double beta_u) {
  const bool uncertain = p >= beta_l && p <= beta_u;
  if (uncertain) return r_new > r_old;
  return variant == Variant::DP || r_new == r_old;
}

bool check_condition(const PrecisionPolicy& policy, double r_old, double r_new, double p) {
  return check_condition(policy.variant, r_old, r_new, p, policy.beta_l, policy.beta_u);
}

}  // namespace apmads
