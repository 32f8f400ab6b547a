#include "apmads/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "apmads/errors.hpp"

namespace apmads {

char status_code(IterationStatus s) {
  switch (s) {
    case IterationStatus::Success: return 'S';
    case IterationStatus::Failure: return 'F';
    case IterationStatus::Barrier: return 'B';
  }
  return '?';
}

IterationStatus parse_status(char c) {
  switch (c) {
    case 'S': return IterationStatus::Success;
    case 'F': return IterationStatus::Failure;
    case 'B': return IterationStatus::Barrier;
    default: throw InvalidInput(std::string("unknown status code '") + c + "'");
  }
}

double mesh_size(double delta_p) { return std::min(delta_p, delta_p * delta_p); }

Point PollSet::candidate(std::size_t i) const {
  Point x = center;
  const auto& z = directions[i];
  for (std::size_t j = 0; j < x.dimension(); ++j) x[j] += delta_m * static_cast<double>(z[j]);
  return x;
}

std::vector<Point> PollSet::candidates() const {
  std::vector<Point> out;
  out.reserve(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) out.push_back(candidate(i));
  return out;
}

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<std::vector<long double>> a(m, std::vector<long double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long double>(rows[i][j]);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    for (std::size_t i = rank + 1; i < m; ++i)
      if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
    if (std::abs(a[pivot][col]) < 1e-9L) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const long double f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

std::int64_t round_half_away(double v) { return static_cast<std::int64_t>(std::round(v)); }

// Integer basis from the Householder reflection H = I - 2 v v^T of a random
// unit vector v.
IntMatrix householder_basis(std::size_t n, double scale, RandomSource& rng) {
  std::vector<double> v(n);
  double norm = 0.0;
  while (norm < 1e-12) {
    norm = 0.0;
    for (double& c : v) {
      c = rng.standard_normal();
      norm += c * c;
    }
    norm = std::sqrt(norm);
  }
  for (double& c : v) c /= norm;

  IntMatrix basis(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n);
    double row_max = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = (i == j ? 1.0 : 0.0) - 2.0 * v[i] * v[j];
      row_max = std::max(row_max, std::abs(row[j]));
    }
    bool all_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      basis[i][j] = round_half_away(scale * row[j] / row_max);
      all_zero = all_zero && basis[i][j] == 0;
    }
    if (all_zero) basis[i][i] = row[i] < 0.0 ? -1 : 1;
  }
  return basis;
}

}  // namespace

PollSet generate_poll(const Point& center, double delta_p, RandomSource& rng) {
  if (!(delta_p > 0.0)) throw InvalidInput("delta_p must be > 0");
  const std::size_t n = center.dimension();
  PollSet poll{center, delta_p, mesh_size(delta_p), {}};
  const double scale = std::max(1.0, std::floor(delta_p / poll.delta_m));

  IntMatrix basis;
  constexpr int kMaxDraws = 16;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    basis = householder_basis(n, scale, rng);
    if (matrix_rank(basis) == n) break;
    basis.clear();
  }
  if (basis.empty()) {
    basis.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = static_cast<std::int64_t>(scale);
  }

  poll.directions.reserve(2 * n);
  for (const auto& row : basis) poll.directions.push_back(row);
  for (const auto& row : basis) {
    std::vector<std::int64_t> neg(row.size());
    std::transform(row.begin(), row.end(), neg.begin(), [](std::int64_t v) { return -v; });
    poll.directions.push_back(std::move(neg));
  }
  return poll;
}

double update_frame(double delta_p, IterationStatus status, double p, double beta_l,
                    double beta_u) {
  switch (status) {
    case IterationStatus::Success: return p > beta_u ? 2.0 * delta_p : delta_p;
    case IterationStatus::Failure: return p < beta_l ? delta_p / 2.0 : delta_p;
    case IterationStatus::Barrier: return delta_p / 2.0;
  }
  return delta_p;
}

}  // namespace apmads
