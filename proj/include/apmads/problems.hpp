#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "apmads/noisy_blackbox.hpp"

namespace apmads {

/// min ||(x, y)||_2 from (pi^2, e^2); domain R^2.
class Norm2Problem final : public Problem {
 public:
  std::string name() const override { return "norm2"; }
  std::size_t dimension() const override { return 2; }
  bool feasible(const Point&) const override { return true; }
  double truth(const Point& x) const override;
  Point start() const override;
  double stop_delta_p() const override { return 1e-10; }
  double best_known_value() const override { return 0.0; }
};

/// min -x over the thin ribbon [0, 20] x I(x) with
///   I(x) = [g(x) - eps(x), g(x) + eps(x)],
///   g(x) = -(|cos x| + 0.1) sin x + 2,
///   eps(x) = l_min + (l_max - l_min)(1 - 1/(1 + |x - x_m|)).
class MoustacheProblem final : public Problem {
 public:
  static constexpr double kLMin = 0.05;
  static constexpr double kLMax = 0.1;
  static constexpr double kXm = 11.0;
  static constexpr double kXUpper = 20.0;

  static double centerline(double x);
  static double half_width(double x);

  std::string name() const override { return "moustache"; }
  std::size_t dimension() const override { return 2; }
  bool feasible(const Point& x) const override;
  double truth(const Point& x) const override;
  Point start() const override { return Point{0.0, 2.0}; }
  double stop_delta_p() const override { return 1e-5; }
  double best_known_value() const override { return -20.0; }
};

double norm2_truth(const Point& x);
double moustache_truth(const Point& x);
bool moustache_feasible(const Point& x);

std::vector<std::string> problem_names();

/// Throws UnknownProblem listing the available names.
std::unique_ptr<Problem> make_problem(std::string_view name);

}  // namespace apmads
