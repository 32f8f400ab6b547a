#include "apmads/point.hpp"

#include <algorithm>
#include <cmath>

namespace apmads {

bool Point::all_finite() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

double norm2(const Point& x) {
  double sum = 0.0;
  for (double v : x.coords()) sum += v * v;
  return std::sqrt(sum);
}

double norm_inf_distance(const Point& a, const Point& b) {
  double dist = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) dist = std::max(dist, std::abs(a[i] - b[i]));
  return dist;
}

}  // namespace apmads
