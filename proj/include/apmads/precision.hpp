#pragma once

#include <string_view>

namespace apmads {

/// Parameters of the index -> standard deviation map.
struct RhoParams {
  double sigma_min = 0.0;
  double sigma_max = 1.0;
  double r0 = 0.0;
  double theta = 0.1;  ///< decrease rate, decades of sigma per unit index

  /// Throws InvalidInput unless 0 <= sigma_min < sigma_max < inf and theta > 0.
  void validate() const;
};

/// Strictly decreasing map from precision index to standard deviation, with
/// rho(r0) = (sigma_min + sigma_max)/2, limits sigma_max at -inf and sigma_min
/// at +inf. Result clamped into [sigma_min, sigma_max].
double rho(const RhoParams& params, double r);

enum class Variant { MP, DP };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

/// UpdateR configuration. MP keeps r frozen outside [beta_l, beta_u]; DP may
/// also lower it when the comparison is very clear-cut.
struct PrecisionPolicy {
  Variant variant = Variant::DP;
  double beta_l = 0.15;
  double beta_u = 0.85;
  double dp_decrease_threshold = 0.05;
  double step = 1.0;

  static PrecisionPolicy defaults(Variant v);

  /// 0 < beta_l <= 0.5 <= beta_u < 1; DP also needs
  /// 0 < dp_decrease_threshold < beta_l.
  void validate() const;
};

/// Next precision index given the p-value of the last comparison.
/// Throws InvalidInput for p outside [0, 1].
double update_r(const PrecisionPolicy& policy, double r, double p);

/// True iff r_old -> r_new under p is allowed by C_DP (DP) or C_MP (MP).
bool check_condition(Variant variant, double r_old, double r_new, double p, double beta_l,
                     double beta_u);
bool check_condition(const PrecisionPolicy& policy, double r_old, double r_new, double p);

}  // namespace apmads
