#include <doctest.h>

#include <cmath>
#include <limits>

#include "chebpol/energy.hpp"
#include "chebpol/errors.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

TEST_SUITE("energy") {

TEST_CASE("pair sums") {
  Set circle = Set::circle(1.0);
  Kernel r2 = Kernel::riesz(2.0);
  Configuration three = seed_configuration(circle, 3, SeedStyle::equally_spaced);
  CHECK(energy_of(three, r2) == doctest::Approx(2.0).epsilon(1e-12));
  Configuration two(circle, {Vec{1.0, 0.0}, Vec{-1.0, 0.0}});
  CHECK(energy_of(two, r2) == 0.5);
  Configuration dup(circle, {Vec{1.0, 0.0}, Vec{1.0, 0.0}});
  CHECK(energy_of(dup, r2) == std::numeric_limits<double>::infinity());
  Configuration one(circle, {Vec{1.0, 0.0}});
  CHECK_THROWS_AS(energy_of(one, r2), InvalidArgumentError);
}

TEST_CASE("descent finds the classical optima") {
  Set circle = Set::circle(1.0);
  Kernel r2 = Kernel::riesz(2.0);
  EnergyOptions eo;
  eo.seed = 3;
  eo.budget = 8000;

  EnergyResult three = minimize_energy(circle, r2, 3, eo);
  CHECK(three.value == doctest::Approx(2.0).epsilon(1e-6));

  EnergyResult two = minimize_energy(circle, r2, 2, eo);
  CHECK(two.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(dist(two.config[0], two.config[1]) == doctest::Approx(2.0).epsilon(1e-4));

  Set seg = Set::interval(-1.0, 1.0);
  EnergyResult ends = minimize_energy(seg, r2, 2, eo);
  CHECK(ends.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::fabs(ends.config[0][0]) == doctest::Approx(1.0).epsilon(1e-4));

  CHECK_THROWS_AS(minimize_energy(circle, r2, 1, eo), InvalidArgumentError);
}

TEST_CASE("energy descent is deterministic") {
  Set circle = Set::circle(1.0);
  Kernel r3 = Kernel::riesz(3.0);
  EnergyOptions eo;
  eo.seed = 11;
  eo.budget = 3000;
  EnergyResult a = minimize_energy(circle, r3, 5, eo);
  EnergyResult b = minimize_energy(circle, r3, 5, eo);
  CHECK(a.value == b.value);
  for (std::size_t i = 0; i < a.config.size(); ++i)
    CHECK(a.config[i] == b.config[i]);
}

TEST_CASE("polarization-energy bound on small meshes") {
  Set circle = Set::circle(1.0);
  auto nodes = uniform_nodes(circle, 60);
  PolarEnergyReport rep =
      check_polarization_energy_bound(circle, nodes, Kernel::riesz(2.0), 2);
  CHECK(rep.holds);
  CHECK(rep.polarization == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.energy == doctest::Approx(0.5).epsilon(1e-12));

  PolarEnergyReport lg =
      check_polarization_energy_bound(circle, nodes, Kernel::log_kernel(), 3);
  CHECK(lg.holds);

  CHECK_THROWS_AS(
      check_polarization_energy_bound(circle, nodes, Kernel::riesz(2.0), 1),
      InvalidArgumentError);
}

TEST_CASE("energy brute force prunes correctly") {
  Set seg = Set::interval(-1.0, 1.0);
  auto nodes = uniform_nodes(seg, 41);
  // s=2 endpoints are optimal: 2 * (1/4)
  double e = brute_force_min_energy(nodes, Kernel::riesz(2.0), 2);
  CHECK(e == doctest::Approx(0.5).epsilon(1e-12));
  double e3 = brute_force_min_energy(nodes, Kernel::riesz(2.0), 3);
  CHECK(e3 > e);
  CHECK_THROWS_AS(brute_force_min_energy(nodes, Kernel::riesz(2.0), 2, 10),
                  ResourceLimitError);
}

}  // TEST_SUITE
