#include <cmath>
#include <vector>

#include "doctest.h"

#include "apmads/errors.hpp"
#include "apmads/noisy_blackbox.hpp"
#include "apmads/problems.hpp"
#include "apmads/random.hpp"

using namespace apmads;

TEST_CASE("standard normal is reproducible per seed") {
  RandomSource a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const double va = a.standard_normal();
    CHECK(va == b.standard_normal());
    CHECK(va != c.standard_normal());
  }
}

TEST_CASE("standard normal moments over 1e6 samples") {
  RandomSource rng(7);
  const int n = 1'000'000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.standard_normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.01);
}

TEST_CASE("split streams differ from the parent") {
  RandomSource base(5);
  auto s1 = base.split(1);
  auto s2 = base.split(2);
  CHECK(s1.standard_normal() != s2.standard_normal());
  CHECK(s1.seed() == 5);
  CHECK(s2.stream() == 2);
}

TEST_CASE("uniform stays in [0,1)") {
  RandomSource rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("draw conversions") {
  CHECK(draws_for_sigma(1.0) == 1.0);
  CHECK(draws_for_sigma(1e-3) == doctest::Approx(1e6).epsilon(1e-12));
  CHECK(draws_for_sigma(1800.0, DrawConversion::Vme) == doctest::Approx(1024.0).epsilon(1e-12));
  CHECK(vme_draws_for_sigma(1800.0) == doctest::Approx(1024.0).epsilon(1e-12));
  CHECK(vme_draws_for_sigma(900.0) == doctest::Approx(4096.0).epsilon(1e-12));
  CHECK(vme_draws_for_sigma(34.1144) == doctest::Approx(2850817.99908).epsilon(1e-10));
  CHECK(vme_draws_for_sigma(34.1144) == doctest::Approx(2850812.0).epsilon(3e-6));
  CHECK_THROWS_AS(draws_for_sigma(0.0), InvalidSigma);
  CHECK_THROWS_AS(draws_for_sigma(-1.0), InvalidSigma);
  CHECK_THROWS_AS(vme_draws_for_sigma(0.0), InvalidSigma);
}

TEST_CASE("observe on norm2 at the origin") {
  Norm2Problem p;
  NoisyBlackbox bb(p, RandomSource(3, 1));
  RandomSource mirror(3, 1);
  const auto obs = bb.observe(Point{0.0, 0.0}, 1.0);
  CHECK(obs.feasible);
  CHECK(obs.sigma == 1.0);
  CHECK(obs.value == mirror.standard_normal());
  CHECK(bb.ledger().total_draws() == 1.0);
  CHECK(bb.evaluations() == 1);
}

TEST_CASE("moustache feasibility and zero-cost rejection") {
  MoustacheProblem p;
  NoisyBlackbox bb(p, RandomSource(1));
  CHECK(bb.feasible(Point{0.0, 2.0}));
  CHECK(bb.observe(Point{0.0, 2.0}, 0.5).feasible);
  const double before = bb.ledger().total_draws();
  const auto obs = bb.observe(Point{0.0, 3.0}, 0.5);
  CHECK_FALSE(obs.feasible);
  CHECK(std::isinf(obs.value));
  CHECK(bb.ledger().total_draws() == before);
}

TEST_CASE("observe rejects bad inputs") {
  Norm2Problem p;
  NoisyBlackbox bb(p, RandomSource(1));
  CHECK_THROWS_AS(bb.observe(Point{0.0, 0.0}, 0.0), InvalidSigma);
  CHECK_THROWS_AS(bb.observe(Point{0.0, 0.0}, 1.5), InvalidSigma);
  CHECK_THROWS_AS(bb.observe(Point{NAN, 0.0}, 1.0), InvalidInput);
  CHECK_THROWS_AS(bb.observe(Point{INFINITY, 0.0}, 1.0), InvalidInput);
  CHECK_THROWS_AS(bb.observe(Point{0.0}, 1.0), InvalidInput);
}

TEST_CASE("ledger equals the sum of 1/sigma^2") {
  Norm2Problem p;
  NoisyBlackbox bb(p, RandomSource(11));
  RandomSource pick(12);
  double expected = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double s = 1e-3 + pick.uniform() * 0.999;
    bb.observe(Point{pick.uniform(), pick.uniform()}, s);
    expected += 1.0 / (s * s);
  }
  CHECK(bb.ledger().total_draws() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("ledger log keeps entries when asked") {
  DrawLedger ledger;
  ledger.set_keep_log(true);
  ledger.charge(Point{1.0}, 0.5, 4.0);
  ledger.charge(Point{2.0}, 1.0, 1.0);
  REQUIRE(ledger.entries().size() == 2);
  CHECK(ledger.entries()[0].draws == 4.0);
  CHECK(ledger.total_draws() == 5.0);
}

TEST_CASE("noise law across 1e5 seeds") {
  Norm2Problem p;
  const Point x{3.0, 4.0};
  const double sigma = 0.25;
  const int n = 100'000;
  std::vector<double> e;
  e.reserve(n);
  double sum = 0.0;
  for (int s = 0; s < n; ++s) {
    RandomSource rng(static_cast<std::uint64_t>(s), 1);
    DrawLedger ledger;
    const double v = observe(p, x, sigma, rng, ledger).value - 5.0;
    e.push_back(v);
    sum += v;
  }
  const double mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : e) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  const double sd = std::sqrt(m2);
  CHECK(std::abs(sd - sigma) < 0.02 * sigma);
  CHECK(std::abs(mean) < 5.0 * sigma / std::sqrt(double(n)));
  // Jarque-Bera components
  CHECK(std::abs(m3 / (m2 * sd)) < 0.05);
  CHECK(std::abs(m4 / (m2 * m2) - 3.0) < 0.1);
}

TEST_CASE("observation sequence is deterministic and feasibility is stable") {
  MoustacheProblem p;
  NoisyBlackbox a(p, RandomSource(9, 1)), b(p, RandomSource(9, 1));
  const std::vector<Point> xs{{0.0, 2.0}, {0.0, 3.0}, {0.01, 2.0}, {0.0, 2.0}};
  for (const auto& x : xs) {
    const auto oa = a.observe(x, 0.3);
    const auto ob = b.observe(x, 0.3);
    CHECK(oa.feasible == ob.feasible);
    if (oa.feasible) CHECK(oa.value == ob.value);
  }
}
