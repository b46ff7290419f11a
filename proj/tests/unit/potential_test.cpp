#include <doctest.h>

#include <cmath>
#include <limits>

#include "chebpol/errors.hpp"
#include "chebpol/potential.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

TEST_SUITE("potential") {

TEST_CASE("pointwise sums respect multiplicity") {
  Set circle = Set::circle(1.0);
  Configuration two(circle, {Vec{1.0, 0.0}, Vec{-1.0, 0.0}});
  Kernel r2 = Kernel::riesz(2.0);
  CHECK(potential_at(Vec{0.0, 1.0}, two, r2) == doctest::Approx(1.0));
  Configuration twice(circle, {Vec{1.0, 0.0}, Vec{1.0, 0.0}});
  CHECK(potential_at(Vec{-1.0, 0.0}, twice, r2) == doctest::Approx(0.5));
  CHECK(potential_at(Vec{1.0, 0.0}, twice, r2) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("configuration validation") {
  Set circle = Set::circle(1.0);
  CHECK_THROWS_AS(Configuration(circle, {}), InvalidArgumentError);
  CHECK_THROWS_AS(Configuration(circle, {Vec{2.0, 0.0}}), InvalidArgumentError);
  CHECK_THROWS_AS(Configuration(circle, {Vec{1.0}}), InvalidArgumentError);
}

TEST_CASE("four-point bracket pins the chord value") {
  Set circle = Set::circle(1.0);
  Configuration four = seed_configuration(circle, 4, SeedStyle::equally_spaced);
  PolarizationOptions popt;
  popt.target_gap_rel = 1e-10;
  PolarizationEstimate est = polarization(four, Kernel::riesz(2.0), popt);
  CHECK(est.lower <= 4.0);
  CHECK(4.0 <= est.upper);
  CHECK(est.gap() <= 1e-9 * 4.0);
  CHECK_FALSE(est.budget_exhausted);
  // witness sits at one of the four gap midpoints
  double c = std::fabs(est.witness[0]), sgn = std::sqrt(0.5);
  CHECK(std::fabs(c - sgn) <= 1e-4);
}

TEST_CASE("budget exhaustion flags the bracket") {
  Set circle = Set::circle(1.0);
  Configuration four = seed_configuration(circle, 4, SeedStyle::equally_spaced);
  PolarizationOptions popt;
  popt.target_gap_rel = 1e-12;
  popt.max_rounds = 1;
  PolarizationEstimate est = polarization(four, Kernel::riesz(2.0), popt);
  CHECK(est.budget_exhausted);
  CHECK(est.lower <= est.upper);
}

TEST_CASE("log-kernel bracket over a sub-interval") {
  Set seg = Set::interval(-1.0, 1.0);
  double a = std::sqrt(2.0) / 2.0;
  Configuration pair(seg, {Vec{-a}, Vec{a}});
  PolarizationOptions popt;
  popt.target_gap_rel = 1e-9;
  PolarizationEstimate whole = polarization(pair, Kernel::log_kernel(), popt);
  CHECK(whole.lower <= std::log(2.0));
  CHECK(std::log(2.0) <= whole.upper);

  // the minimum over the right half is attained at the endpoint y = 1
  Box right = seg.chart_domain();
  right.lo[0] = 0.9;
  PolarizationEstimate part =
      polarization(pair, Region{right}, Kernel::log_kernel(), popt);
  CHECK(part.lower <= std::log(2.0) + 1e-9);
  CHECK(part.upper >= whole.upper - 1e-9);
}

TEST_CASE("union combination is conservative") {
  Set circle = Set::circle(1.0);
  Configuration four = seed_configuration(circle, 4, SeedStyle::equally_spaced);
  Kernel r2 = Kernel::riesz(2.0);
  PolarizationOptions popt;
  popt.target_gap_rel = 1e-8;
  std::vector<Region> halves;
  for (int i = 0; i < 2; ++i) {
    Box b = circle.chart_domain();
    b.lo[0] = i * kPi;
    b.hi[0] = (i + 1) * kPi;
    halves.push_back(Region{b});
  }
  PolarizationEstimate u = polarization_over_union(four, halves, r2, popt);
  PolarizationEstimate w = polarization(four, r2, popt);
  CHECK(u.lower <= 4.0);
  CHECK(4.0 <= u.upper);
  CHECK(std::fabs(u.upper - w.upper) <= u.gap() + w.gap());
  CHECK_THROWS_AS(polarization_over_union(four, {}, r2, popt),
                  InvalidArgumentError);
}

TEST_CASE("weighted bracket certificates stay valid") {
  Set circle = Set::circle(1.0);
  WeightSpec w = WeightSpec::circle_cosine(2.0, 1.0);
  Kernel k = Kernel::weighted_riesz(2.0, w);
  Configuration cfg = seed_configuration(circle, 8, SeedStyle::equally_spaced);
  PolarizationOptions popt;
  popt.target_gap_rel = 1e-6;
  PolarizationEstimate est = polarization(cfg, k, popt);
  REQUIRE(est.lower <= est.upper);
  // audit the bracket against a dense scan: the scan minimum is an upper
  // bound on the true infimum, so it must sit above `lower` and within one
  // bracket gap of `upper`
  double probe = std::numeric_limits<double>::infinity();
  for (const Vec& y : uniform_nodes(circle, 20000))
    probe = std::min(probe, potential_at(y, cfg, k));
  CHECK(est.lower <= probe + 1e-12);
  CHECK(est.upper <= probe + est.gap() + 1e-9 * probe);
}

TEST_CASE("mesh minimum on explicit nodes") {
  Set circle = Set::circle(1.0);
  Configuration one(circle, {Vec{1.0, 0.0}});
  auto nodes = uniform_nodes(circle, 360);
  auto [value, arg] = mesh_min_potential(nodes, one, Kernel::riesz(2.0));
  CHECK(value == doctest::Approx(0.25));
  CHECK(dist(nodes[arg], Vec{-1.0, 0.0}) <= 1e-12);
}

}  // TEST_SUITE
