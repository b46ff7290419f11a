#include <doctest.h>

#include <cmath>

#include "chebpol/asymptotics.hpp"
#include "chebpol/errors.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

TEST_SUITE("asymptotics") {

TEST_CASE("zeta values") {
  CHECK(riemann_zeta(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
  CHECK(riemann_zeta(3.0) ==
        doctest::Approx(1.2020569031595942854).epsilon(1e-13));
  CHECK(riemann_zeta(1.5) ==
        doctest::Approx(2.6123753486854883).epsilon(1e-12));
  CHECK(riemann_zeta(10.0) == doctest::Approx(1.0009945751278181).epsilon(1e-13));
  CHECK_THROWS_AS(riemann_zeta(1.0), InvalidArgumentError);
}

TEST_CASE("one-dimensional constant") {
  CHECK(sigma_1d_exact(2.0) == doctest::Approx(kPi * kPi).epsilon(1e-12));
  CHECK(sigma_1d_exact(3.0) ==
        doctest::Approx(14.0 * 1.2020569031595942854).epsilon(1e-12));
  CHECK_THROWS_AS(sigma_1d_exact(1.0), InvalidArgumentError);
  // dominant-term behavior as s grows
  CHECK(sigma_1d_exact(32.0) / std::pow(2.0, 33.0) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("tau normalization") {
  CHECK(tau(3.0, 1, 100.0) == 1e6);
  CHECK(tau(1.0, 1, 100.0) == doctest::Approx(100.0 * std::log(100.0)));
  CHECK(tau(2.0, 2, std::exp(1.0)) == doctest::Approx(std::exp(1.0)));
  CHECK_THROWS_AS(tau(0.5, 1, 100.0), InvalidArgumentError);
  CHECK_THROWS_AS(tau(2.0, 1, 1.0), InvalidArgumentError);
}

TEST_CASE("triangular lattice sum") {
  EpsteinResult e5 = epstein_zeta_triangular(5.0);
  CHECK(e5.last_rel_change <= 1e-10);
  EpsteinResult e100 = epstein_zeta_triangular(100.0);
  double a = std::sqrt(2.0 / std::sqrt(3.0));
  CHECK(e100.value ==
        doctest::Approx(6.0 * std::pow(a, -100.0)).epsilon(1e-6));
  CHECK_THROWS_AS(epstein_zeta_triangular(2.0), InvalidArgumentError);
  CHECK(sigma_2d_conjectured(5.0) ==
        doctest::Approx(0.5 * (std::pow(3.0, 2.5) - 1.0) * e5.value));
}

TEST_CASE("predicted limits and provenance") {
  Set circle = Set::circle(1.0);
  PredictedLimit c3 = predicted_limit(circle, nullptr, 3.0);
  CHECK(c3.value ==
        doctest::Approx(sigma_1d_exact(3.0) / std::pow(kTwoPi, 3)).epsilon(1e-12));
  CHECK(c3.provenance == ConstantProvenance::proved);

  PredictedLimit seg = predicted_limit(Set::interval(0.0, 1.0), nullptr, 2.0);
  CHECK(seg.value == doctest::Approx(kPi * kPi).epsilon(1e-12));

  PredictedLimit sd = predicted_limit(circle, nullptr, 1.0);
  CHECK(sd.value == doctest::Approx(1.0 / kPi).epsilon(1e-12));

  PredictedLimit ball3 = predicted_limit(Set::ball(3), nullptr, 3.0);
  CHECK(ball3.value ==
        doctest::Approx((4.0 * kPi / 3.0) / (4.0 * kPi / 3.0)).epsilon(1e-12));

  PredictedLimit cube2 = predicted_limit(Set::cube(2), nullptr, 5.0);
  CHECK(cube2.provenance == ConstantProvenance::conjectured);

  CHECK_THROWS_AS(predicted_limit(Set::ball(3), nullptr, 4.0),
                  UnavailableConstantError);
  CHECK_THROWS_AS(predicted_limit(circle, nullptr, 0.5), InvalidArgumentError);
}

TEST_CASE("limit extraction from ratio series") {
  RatioSeries syn;
  syn.s = 3;
  syn.d = 1;
  for (std::size_t n = 16; n <= 4096; n *= 2)
    syn.entries.push_back({double(n), 0.0, 5.0 + 3.0 / double(n)});
  SigmaEstimate est = estimate_limit(syn);
  CHECK(est.value == doctest::Approx(5.0).epsilon(1e-4));
  CHECK(est.uncertainty >= 0.0);
  CHECK_FALSE(est.low_confidence);

  RatioSeries wild = syn;
  for (std::size_t i = 0; i < wild.entries.size(); ++i)
    wild.entries[i].ratio = i % 2 ? 9.0 : 2.0;
  CHECK(estimate_limit(wild).low_confidence);

  RatioSeries tiny;
  tiny.s = 3;
  tiny.d = 1;
  tiny.entries = {{2, 0, 1}, {4, 0, 1}, {8, 0, 1}};
  CHECK_THROWS_AS(estimate_limit(tiny), InvalidArgumentError);
}

TEST_CASE("diagnostic series rejects hypersingular kernels") {
  Set circle = Set::circle(1.0);
  CHECK_THROWS_AS(chebyshev_ratio_series(circle, Kernel::riesz(2.0), {8, 16}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(chebyshev_ratio_series(circle, Kernel::log_kernel(), {8, 16}),
                  InvalidArgumentError);
  RatioSeries rs = chebyshev_ratio_series(circle, Kernel::riesz(0.5), {8, 16});
  CHECK(rs.diagnostic);
  CHECK(rs.entries.size() == 2);
  CHECK(rs.entries[1].ratio == doctest::Approx(rs.entries[1].value / 16.0));
}

}  // TEST_SUITE
