#include "apmads/problems.hpp"

#include <cmath>
#include <numbers>

#include "apmads/errors.hpp"

namespace apmads {

double norm2_truth(const Point& x) { return norm2(x); }

double Norm2Problem::truth(const Point& x) const { return norm2_truth(x); }

Point Norm2Problem::start() const {
  return Point{std::numbers::pi * std::numbers::pi, std::numbers::e * std::numbers::e};
}

double MoustacheProblem::centerline(double x) {
  return -(std::abs(std::cos(x)) + 0.1) * std::sin(x) + 2.0;
}

double MoustacheProblem::half_width(double x) {
  return kLMin + (kLMax - kLMin) * (1.0 - 1.0 / (1.0 + std::abs(x - kXm)));
}

bool moustache_feasible(const Point& x) {
  const double u = x[0];
  if (!(u >= 0.0 && u <= MoustacheProblem::kXUpper)) return false;
  return std::abs(x[1] - MoustacheProblem::centerline(u)) <= MoustacheProblem::half_width(u);
}

double moustache_truth(const Point& x) {
  return moustache_feasible(x) ? -x[0] : std::numeric_limits<double>::infinity();
}

bool MoustacheProblem::feasible(const Point& x) const { return moustache_feasible(x); }
double MoustacheProblem::truth(const Point& x) const { return moustache_truth(x); }

std::vector<std::string> problem_names() { return {"norm2", "moustache"}; }

std::unique_ptr<Problem> make_problem(std::string_view name) {
  if (name == "norm2") return std::make_unique<Norm2Problem>();
  if (name == "moustache") return std::make_unique<MoustacheProblem>();
  std::string msg = "unknown problem '" + std::string(name) + "'; available:";
  for (const auto& n : problem_names()) msg += " " + n;
  throw UnknownProblem(msg);
}

}  // namespace apmads
