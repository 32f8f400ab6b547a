#include <cmath>

#include "doctest.h"

#include "apmads/errors.hpp"
#include "apmads/problems.hpp"
#include "apmads/profiles.hpp"

using namespace apmads;

namespace {

// Synthetic run on a problem with f(x0) = 10 and f* = 0.
RunResult synthetic(std::string algo, std::uint64_t seed, std::vector<std::pair<double, double>> pts,
                    std::string problem = "p") {
  RunResult r;
  r.algorithm = std::move(algo);
  r.problem = std::move(problem);
  r.seed = seed;
  r.start_truth = 10.0;
  r.optimum = 0.0;
  std::size_t k = 1;
  for (auto [draws, f] : pts) {
    IterationRecord rec;
    rec.k = k++;
    rec.draws = draws;
    r.log.push_back(rec);
    r.truth.push_back(f);
  }
  return r;
}

}  // namespace

TEST_CASE("accuracy endpoints") {
  Norm2Problem p;
  IterationRecord at_start;
  at_start.k = 1;
  at_start.draws = 5.0;
  at_start.incumbent = p.start();
  IterationRecord at_opt = at_start;
  at_opt.k = 2;
  at_opt.draws = 9.0;
  at_opt.incumbent = Point{0.0, 0.0};
  const auto run = make_run_result("dpmads", p, 0, {at_start, at_opt});
  CHECK(accuracy(run, 5.0) == 0.0);
  CHECK(accuracy(run, 9.0) == 1.0);
  CHECK(accuracy(run, 1.0) == 0.0);

  IterationRecord tenth = at_start;
  const double f0 = p.truth(p.start());
  tenth.incumbent = Point{f0 / 10.0, 0.0};
  const auto r2 = make_run_result("dpmads", p, 0, {tenth});
  CHECK(accuracy(r2, 5.0) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("accuracy is best so far and nondecreasing") {
  const auto run = synthetic("a", 0, {{1, 8}, {2, 3}, {3, 6}, {4, 2}, {5, 12}});
  const auto trace = accuracy_trace(run);
  const std::vector<double> expected{0.2, 0.7, 0.7, 0.8, 0.8};
  REQUIRE(trace.size() == expected.size());
  for (std::size_t i = 0; i < trace.size(); ++i) CHECK(trace[i] == doctest::Approx(expected[i]));
  CHECK(accuracy(run, 3.5) == doctest::Approx(0.7));
  CHECK(accuracy(run, 1e9) == doctest::Approx(0.8));
}

TEST_CASE("degenerate normalisation") {
  auto run = synthetic("a", 0, {{1, 0}});
  run.start_truth = 0.0;
  CHECK_THROWS_AS(accuracy(run, 1.0), InvalidInput);
  CHECK_THROWS_AS(budget_to_solve(run, 0.1), InvalidInput);
}

TEST_CASE("budget to solve") {
  const auto run = synthetic("a", 0, {{100, 5}, {300, 0.5}, {700, 0.001}});
  CHECK(budget_to_solve(run, 0.1) == 300.0);
  CHECK(budget_to_solve(run, 1e-3) == 700.0);
  CHECK(std::isinf(budget_to_solve(run, 1e-6)));
}

TEST_CASE("two algorithms on one instance") {
  const std::vector<RunResult> rs{synthetic("a", 0, {{100, 0}}), synthetic("b", 0, {{200, 0}})};
  const auto prof = performance_profile(rs, 1e-3);
  CHECK(prof.at("a")(1.0) == 1.0);
  CHECK(prof.at("b")(1.0) == 0.0);
  CHECK(prof.at("a")(2.0) == 1.0);
  CHECK(prof.at("b")(2.0) == 1.0);
  CHECK(prof.at("b")(1.999) == 0.0);
  CHECK(prof.at("a").x == std::vector<double>{1.0});
  CHECK(prof.at("b").x == std::vector<double>{2.0});

  const auto logp = performance_profile(rs, 1e-3, true);
  CHECK(logp.at("b").x[0] == doctest::Approx(std::log10(200.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("performance profile shape over several instances") {
  const std::vector<RunResult> rs{
      synthetic("a", 0, {{100, 0}}),        synthetic("b", 0, {{300, 0}}),
      synthetic("a", 1, {{400, 0}}),        synthetic("b", 1, {{100, 0}}),
      synthetic("a", 2, {{50, 9}}),         synthetic("b", 2, {{1000, 0}}),
      synthetic("never", 0, {{1, 9}}),      synthetic("never", 1, {{1, 9}}),
      synthetic("never", 2, {{1, 9}})};
  const auto prof = performance_profile(rs, 1e-3);
  const auto& a = prof.at("a");
  const auto& b = prof.at("b");
  CHECK(a.x == std::vector<double>{1.0, 4.0});
  CHECK(a.y == std::vector<double>{1.0 / 3.0, 2.0 / 3.0});
  CHECK(b.x == std::vector<double>{1.0, 3.0});
  CHECK(b.y == std::vector<double>{2.0 / 3.0, 1.0});
  CHECK(prof.at("never").x.empty());
  CHECK(prof.at("never")(1e9) == 0.0);
  CHECK(a.final_value() == doctest::Approx(2.0 / 3.0));
  CHECK(breakpoints(prof) == std::vector<double>{1.0, 3.0, 4.0});
  for (double alpha = 0.5; alpha < 10.0; alpha += 0.25) {
    CHECK(a(alpha) <= a(alpha + 0.25));
    CHECK(a(alpha) >= 0.0);
    CHECK(b(alpha) <= 1.0);
  }
}

TEST_CASE("single algorithm profile is its solve fraction from alpha 1") {
  const std::vector<RunResult> rs{synthetic("a", 0, {{100, 0}}), synthetic("a", 1, {{5, 0}}),
                                  synthetic("a", 2, {{5, 4}})};
  const auto prof = performance_profile(rs, 1e-3);
  CHECK(prof.at("a")(0.99) == 0.0);
  CHECK(prof.at("a")(1.0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("data profile") {
  const std::vector<RunResult> one{synthetic("a", 0, {{1e6, 5}, {3e6, 0}})};
  const auto prof = data_profile(one, 1e-3, 1e-3);
  const auto& f = prof.at("a");
  REQUIRE(f.x.size() == 1);
  CHECK(f.x[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(f(2.999) == 0.0);
  CHECK(f(3.0 + 1e-12) == 1.0);
  CHECK(f(0.0) == 0.0);

  const std::vector<RunResult> ref{synthetic("a", 0, {{1e6, 0}})};
  CHECK(data_profile(ref, 1e-3, 1e-3).at("a").x[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("instances are problem and seed pairs") {
  const std::vector<RunResult> rs{synthetic("a", 0, {{10, 0}}, "p"), synthetic("a", 0, {{20, 0}}, "q"),
                                  synthetic("b", 0, {{20, 0}}, "p"), synthetic("b", 0, {{10, 0}}, "q")};
  const auto prof = performance_profile(rs, 1e-3);
  CHECK(prof.at("a")(1.0) == 0.5);
  CHECK(prof.at("b")(1.0) == 0.5);
  CHECK(prof.at("a")(2.0) == 1.0);
}
