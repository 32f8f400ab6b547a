#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace apmads {

/// A point of R^n. Equality is exact coordinate equality.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t dimension() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  bool empty() const { return coords_.empty(); }

  bool all_finite() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<double> coords_;
};

double norm2(const Point& x);
double norm_inf_distance(const Point& a, const Point& b);

}  // namespace apmads
