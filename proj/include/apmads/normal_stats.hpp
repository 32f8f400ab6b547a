#pragma once

#include "apmads/estimation.hpp"
#include "apmads/point.hpp"

namespace apmads {

/// Standard normal CDF.
double phi(double z);

/// Inverse standard normal CDF on (0, 1). Throws InvalidInput otherwise.
double phi_inv(double p);

/// Plausibility of "f(candidate) < f(reference)":
///   Phi((f^k(reference) - f^k(candidate)) / sqrt(sigma^k(candidate)^2 + sigma^k(reference)^2)).
/// Values near 1 favour the candidate. Throws UndefinedComparison if either
/// point has no feasible history.
double p_value(const EvaluationCache& cache, const Point& candidate, const Point& reference);

/// Same comparison from two estimates.
double p_value(const Estimate& candidate, const Estimate& reference);

}  // namespace apmads
