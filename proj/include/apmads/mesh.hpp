#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "apmads/point.hpp"
#include "apmads/random.hpp"

namespace apmads {

enum class IterationStatus { Success, Failure, Barrier };

char status_code(IterationStatus s);
IterationStatus parse_status(char c);

/// delta_m = min(delta_p, delta_p^2).
double mesh_size(double delta_p);

/// Poll candidates center + delta_m * z for integer directions z.
struct PollSet {
  Point center;
  double delta_p = 1.0;
  double delta_m = 1.0;
  std::vector<std::vector<std::int64_t>> directions;

  Point candidate(std::size_t i) const;
  std::vector<Point> candidates() const;
  std::size_t size() const { return directions.size(); }
};

/// 2n directions: +/- the rows of an integer matrix obtained from the
/// Householder reflection of a random unit vector, each row scaled to
/// infinity-norm floor(delta_p / delta_m) and rounded. Zero rows become
/// signed unit rows; a singular result is redrawn, falling back to the
/// coordinate basis.
PollSet generate_poll(const Point& center, double delta_p, RandomSource& rng);

/// Frame update of one iteration: Success doubles when p > beta_u, Failure
/// halves when p < beta_l, Barrier always halves.
double update_frame(double delta_p, IterationStatus status, double p, double beta_l,
                    double beta_u);

/// Rank of an integer matrix given as rows (Gaussian elimination in long
/// double with partial pivoting).
std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace apmads
