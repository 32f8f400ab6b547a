#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "apmads/errors.hpp"
#include "apmads/mesh.hpp"
#include "apmads/random.hpp"

using namespace apmads;

namespace {

// Every direction u has a poll direction d with <u, d> > 0.
bool spans(const std::vector<std::vector<std::int64_t>>& dirs, const std::vector<double>& u) {
  for (const auto& d : dirs) {
    double dot = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * static_cast<double>(d[i]);
    if (dot > 1e-12) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("mesh size") {
  CHECK(mesh_size(1.0) == 1.0);
  CHECK(mesh_size(0.1) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(mesh_size(4.0) == 4.0);
  CHECK(mesh_size(0.5) == 0.25);
}

TEST_CASE("one dimensional poll is plus and minus one") {
  RandomSource rng(1);
  for (double c : {0.0, -3.5, 7.25}) {
    const auto poll = generate_poll(Point{c}, 1.0, rng);
    REQUIRE(poll.size() == 2);
    auto cands = poll.candidates();
    std::sort(cands.begin(), cands.end());
    CHECK(cands[0] == Point{c - 1.0});
    CHECK(cands[1] == Point{c + 1.0});
  }
}

TEST_CASE("two dimensional poll at unit frame spans the circle") {
  RandomSource rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto poll = generate_poll(Point{0.0, 0.0}, 1.0, rng);
    REQUIRE(poll.size() == 4);
    CHECK(poll.delta_m == 1.0);
    for (const auto& d : poll.directions) {
      for (auto v : d) CHECK(std::abs(v) <= 1);
    }
    for (int i = 0; i < 64; ++i) {
      const double a = 2.0 * std::numbers::pi * i / 64.0;
      CHECK(spans(poll.directions, {std::cos(a), std::sin(a)}));
    }
  }
}

TEST_CASE("polls span dense sphere samples up to dimension four") {
  RandomSource rng(3), sample(4);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 100; ++t) {
      const double dp = std::ldexp(1.0, -static_cast<int>(t % 12));
      const auto poll = generate_poll(Point(std::vector<double>(n, 0.5)), dp, rng);
      CHECK(poll.size() == 2 * n);
      CHECK(matrix_rank(poll.directions) == n);
      for (int s = 0; s < 200; ++s) {
        std::vector<double> u(n);
        for (auto& v : u) v = sample.standard_normal();
        CHECK(spans(poll.directions, u));
      }
    }
  }
}

TEST_CASE("candidates lie in the frame and on the mesh") {
  RandomSource rng(5);
  const Point c{0.75, -1.5};
  for (int t = 0; t < 50; ++t) {
    const auto poll = generate_poll(c, 0.5, rng);
    CHECK(poll.delta_m == 0.25);
    for (const auto& x : poll.candidates()) {
      for (std::size_t i = 0; i < 2; ++i) {
        const double off = (x[i] - c[i]) / 0.25;
        CHECK(off == std::round(off));
        CHECK(std::abs(x[i] - c[i]) <= 0.5);
      }
    }
  }
}

TEST_CASE("small frames keep the frame bound") {
  RandomSource rng(6);
  for (int e = 1; e <= 30; e += 3) {
    const double dp = std::ldexp(1.0, -e);
    const auto poll = generate_poll(Point{1.0, 2.0, 3.0}, dp, rng);
    const double scale = std::floor(dp / poll.delta_m);
    for (const auto& d : poll.directions) {
      std::int64_t m = 0;
      for (auto v : d) m = std::max<std::int64_t>(m, std::abs(v));
      CHECK(static_cast<double>(m) <= scale);
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("frame update") {
  CHECK(update_frame(1.0, IterationStatus::Success, 0.99, 0.15, 0.85) == 2.0);
  CHECK(update_frame(1.0, IterationStatus::Success, 0.6, 0.15, 0.85) == 1.0);
  CHECK(update_frame(1.0, IterationStatus::Failure, 0.4, 0.15, 0.85) == 1.0);
  CHECK(update_frame(1.0, IterationStatus::Failure, 0.1, 0.15, 0.85) == 0.5);
  CHECK(update_frame(1.0, IterationStatus::Barrier, 0.9, 0.15, 0.85) == 0.5);
  CHECK(update_frame(1.0, IterationStatus::Barrier, 0.0, 0.15, 0.85) == 0.5);
  for (double dp : {0.25, 1.0, 8.0}) {
    const double next = update_frame(dp, IterationStatus::Failure, 0.0, 0.15, 0.85);
    CHECK(mesh_size(next) == std::min(next, next * next));
  }
}

TEST_CASE("status codes round trip") {
  for (auto s : {IterationStatus::Success, IterationStatus::Failure, IterationStatus::Barrier}) {
    CHECK(parse_status(status_code(s)) == s);
  }
  CHECK_THROWS_AS(parse_status('X'), InvalidInput);
}

TEST_CASE("matrix rank") {
  CHECK(matrix_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(matrix_rank({{3, 1, 0}, {1, 3, 0}, {0, 0, 1}}) == 3);
}
