#include <doctest.h>

#include <cmath>

#include "chebpol/errors.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

TEST_SUITE("solver") {

TEST_CASE("seed styles") {
  Set circle = Set::circle(1.0);
  Configuration three = seed_configuration(circle, 3, SeedStyle::equally_spaced);
  CHECK(three.size() == 3);
  CHECK(dist(three[0], Vec{1.0, 0.0}) <= 1e-15);

  Configuration nine =
      seed_configuration(Set::cube(2), 9, SeedStyle::tensor_lattice);
  CHECK(nine.size() == 9);
  CHECK(nine[4][0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(seed_configuration(Set::cube(2), 8, SeedStyle::tensor_lattice),
                  InvalidArgumentError);

  Configuration fib =
      seed_configuration(Set::sphere(3), 50, SeedStyle::fibonacci_sphere);
  for (const Vec& p : fib.points())
    CHECK(std::fabs(p.norm() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(seed_configuration(circle, 5, SeedStyle::fibonacci_sphere),
                  InvalidArgumentError);
  CHECK_THROWS_AS(
      seed_configuration(Set::cube(2), 4, SeedStyle::equally_spaced),
      InvalidArgumentError);
  CHECK_THROWS_AS(seed_configuration(circle, 0, SeedStyle::equally_spaced),
                  InvalidArgumentError);

  auto j1 = seed_configuration(circle, 6, SeedStyle::jittered_uniform, 5);
  auto j2 = seed_configuration(circle, 6, SeedStyle::jittered_uniform, 5);
  for (std::size_t i = 0; i < 6; ++i) CHECK(j1[i] == j2[i]);
}

TEST_CASE("tiling") {
  Configuration base(Set::cube(1), {Vec{0.5}});
  Configuration t2 = tile_configuration(base, 2);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0][0] == 0.25);
  CHECK(t2[1][0] == 0.75);

  Configuration base2(Set::cube(2), {Vec{0.5, 0.5}});
  Configuration q = tile_configuration(base2, 2);
  REQUIRE(q.size() == 4);
  CHECK(q[0][0] == 0.25);
  CHECK(q[0][1] == 0.25);
  CHECK(q[3][0] == 0.75);
  CHECK(q[3][1] == 0.75);

  CHECK_THROWS_AS(tile_configuration(base, 1), InvalidArgumentError);
  Configuration on_circle(Set::circle(1.0), {Vec{1.0, 0.0}});
  CHECK_THROWS_AS(tile_configuration(on_circle, 2), InvalidArgumentError);
}

TEST_CASE("uniform node helpers") {
  Set seg = Set::interval(0.0, 1.0);
  auto nodes = uniform_nodes(seg, 11);
  REQUIRE(nodes.size() == 11);
  CHECK(nodes.front()[0] == 0.0);
  CHECK(nodes.back()[0] == 1.0);
  CHECK_THROWS_AS(uniform_nodes(Set::cube(2), 10), InvalidArgumentError);
}

TEST_CASE("brute force on a circle mesh") {
  Set circle = Set::circle(1.0);
  auto nodes = uniform_nodes(circle, 120);
  Kernel r2 = Kernel::riesz(2.0);
  BruteForceLimits lim;
  lim.certify = false;

  BruteForceResult one = brute_force_small(circle, nodes, r2, 1, lim);
  CHECK(one.value == doctest::Approx(0.25).epsilon(1e-12));

  BruteForceResult two = brute_force_small(circle, nodes, r2, 2, lim);
  CHECK(two.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dist(two.config[0], two.config[1]) == doctest::Approx(2.0));

  // the combinatorial guard refuses oversized requests
  auto big = uniform_nodes(circle, 512);
  CHECK_THROWS_AS(brute_force_small(circle, big, r2, 4, lim),
                  ResourceLimitError);
}

TEST_CASE("brute force with certification") {
  Set circle = Set::circle(1.0);
  auto nodes = uniform_nodes(circle, 90);
  BruteForceResult bf =
      brute_force_small(circle, nodes, Kernel::riesz(2.0), 2);
  CHECK(bf.estimate.lower <= bf.value + 1e-9);
  CHECK(bf.estimate.lower > 0.9);
}

TEST_CASE("optimize contracts") {
  Set circle = Set::circle(1.0);
  Kernel r2 = Kernel::riesz(2.0);
  CHECK_THROWS_AS(optimize(circle, r2, 0), InvalidArgumentError);

  SolveOptions so;
  so.restarts = 2;
  so.seed = 19;
  so.budget = 3000;
  so.certify.target_gap_rel = 1e-6;
  SolveResult a = optimize(circle, r2, 2, so);
  CHECK(a.estimate.lower == doctest::Approx(1.0).epsilon(1e-3));

  SolveResult b = optimize(circle, r2, 2, so);
  CHECK(a.estimate.lower == b.estimate.lower);
  CHECK(a.estimate.upper == b.estimate.upper);
  for (std::size_t i = 0; i < a.config.size(); ++i)
    CHECK(a.config[i] == b.config[i]);
}

TEST_CASE("four sources on the circle recover the equally spaced optimum") {
  Set circle = Set::circle(1.0);
  Kernel r2 = Kernel::riesz(2.0);
  SolveOptions so;
  so.restarts = 3;
  so.seed = 29;
  so.budget = 15000;
  so.certify.target_gap_rel = 1e-8;
  SolveResult r = optimize(circle, r2, 4, so);
  CHECK(r.estimate.lower <= 4.0 + 1e-12);
  CHECK(r.estimate.upper >= 4.0 - 1e-3);
  Configuration ideal = seed_configuration(circle, 4, SeedStyle::equally_spaced);
  CHECK(circle_rotation_distance(r.config, ideal) <= 1e-3);
}

TEST_CASE("rotation alignment distance") {
  Set circle = Set::circle(1.0);
  Configuration a = seed_configuration(circle, 5, SeedStyle::equally_spaced);
  // the same configuration rotated by an arbitrary angle matches exactly
  std::vector<Vec> rot;
  for (const Vec& p : a.points()) {
    double c = std::cos(0.37), s = std::sin(0.37);
    rot.push_back(Vec{c * p[0] - s * p[1], s * p[0] + c * p[1]});
  }
  CHECK(circle_rotation_distance(a, Configuration(circle, rot)) <= 1e-12);
  Configuration b(circle, circle.sample_uniform(5, 8));
  CHECK(circle_rotation_distance(a, b) > 1e-3);
  CHECK_THROWS_AS(
      circle_rotation_distance(a, Configuration(circle, {Vec{1.0, 0.0}})),
      InvalidArgumentError);
}

TEST_CASE("exchange method improves a poor seed") {
  Set seg = Set::interval(-1.0, 1.0);
  Kernel r2 = Kernel::riesz(2.0);
  SolveOptions so;
  so.method = SolveMethod::exchange;
  so.seed = 23;
  so.budget = 2000;
  so.certify.target_gap_rel = 1e-4;
  SolveResult r = optimize(seg, r2, 2, so);
  CHECK(r.estimate.lower > 0.0);
  CHECK(r.trace.objective_evaluations > 0);
}

TEST_CASE("tiny budget sets the exhaustion flag") {
  Set circle = Set::circle(1.0);
  SolveOptions so;
  so.restarts = 1;
  so.budget = 2;
  so.certify.target_gap_rel = 1e-2;
  SolveResult r = optimize(circle, Kernel::riesz(2.0), 3, so);
  CHECK(r.trace.budget_exhausted);
}

}  // TEST_SUITE
