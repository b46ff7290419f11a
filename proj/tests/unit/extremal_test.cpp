#include <doctest.h>

#include <cmath>

#include "chebpol/errors.hpp"
#include "chebpol/extremal.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

TEST_SUITE("extremal") {

TEST_CASE("separation") {
  Set circle = Set::circle(1.0);
  Configuration four = seed_configuration(circle, 4, SeedStyle::equally_spaced);
  CHECK(separation(four) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  Configuration dup(circle, {Vec{1.0, 0.0}, Vec{1.0, 0.0}});
  CHECK(separation(dup) == 0.0);
  Configuration one(circle, {Vec{1.0, 0.0}});
  CHECK_THROWS_AS(separation(one), InvalidArgumentError);
}

TEST_CASE("covering radius brackets") {
  Set circle = Set::circle(1.0);
  CertifyOptions copt;
  copt.target_gap_rel = 1e-7;

  Configuration four = seed_configuration(circle, 4, SeedStyle::equally_spaced);
  CertifiedMaxBracket rho = covering_radius(four, copt);
  double expect = 2.0 * std::sin(kPi / 8.0);
  CHECK(rho.lower <= expect);
  CHECK(expect <= rho.upper);
  CHECK(rho.gap() <= 1e-6);

  Set seg = Set::interval(0.0, 1.0);
  Configuration ends(seg, {Vec{0.0}, Vec{1.0}});
  CertifiedMaxBracket mid = covering_radius(ends, copt);
  CHECK(mid.lower == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(std::fabs(mid.witness[0] - 0.5) <= 1e-4);
}

TEST_CASE("stats bundle") {
  Set circle = Set::circle(1.0);
  Configuration cfg(circle, circle.sample_uniform(5, 31));
  ExtremalStats st = extremal_stats(cfg);
  CHECK(st.n == 5);
  CHECK(st.separation > 0.0);
  CHECK(st.covering_lower <= st.covering_upper);
  CHECK(st.covering_upper <= circle.diameter() + 1e-12);
}

TEST_CASE("large-s link rows") {
  Set circle = Set::circle(1.0);
  auto rows = check_large_s_limits(circle, 5, {50.0, 100.0});
  REQUIRE(rows.size() == 2);
  CHECK(std::fabs(rows[0].pol_root_times_rho - 1.0) < 0.05);
  CHECK(std::fabs(rows[1].pol_root_times_rho - 1.0) <
        std::fabs(rows[0].pol_root_times_rho - 1.0));
  CHECK(rows[0].energy_root_times_delta > 0.9);
  CHECK_THROWS_AS(check_large_s_limits(Set::cube(2), 4, {10.0}),
                  InvalidArgumentError);
}

}  // TEST_SUITE
