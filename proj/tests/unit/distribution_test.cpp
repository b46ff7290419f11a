#include <doctest.h>

#include <cmath>

#include "chebpol/distribution.hpp"
#include "chebpol/errors.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

TEST_SUITE("distribution") {

TEST_CASE("weighted masses") {
  Set circle = Set::circle(1.0);
  WeightSpec unit = WeightSpec::constant(1.0);
  CHECK(weighted_hausdorff(circle, unit, 3.0) ==
        doctest::Approx(kTwoPi).epsilon(1e-10));
  WeightSpec c2 = WeightSpec::constant(2.0);
  CHECK(weighted_hausdorff(circle, c2, 3.0) ==
        doctest::Approx(std::pow(2.0, -1.0 / 3.0) * kTwoPi).epsilon(1e-10));
  WeightSpec cosw = WeightSpec::circle_cosine(2.0, 1.0);
  CHECK(weighted_hausdorff(circle, cosw, 1.0) ==
        doctest::Approx(kTwoPi / std::sqrt(3.0)).epsilon(1e-8));
  CHECK_THROWS_AS(weighted_hausdorff(circle, unit, 0.5), InvalidArgumentError);
  CHECK_THROWS_AS(weighted_hausdorff(Set::ball(2), unit, 2.0),
                  InvalidArgumentError);
}

TEST_CASE("masses are additive over partitions") {
  Set circle = Set::circle(1.0);
  WeightSpec cosw = WeightSpec::circle_cosine(2.0, 1.0);
  auto parts = make_partition(circle, {16});
  double total = weighted_hausdorff(circle, cosw, 3.0);
  double sum = 0.0;
  for (const auto& r : parts) sum += weighted_hausdorff(circle, cosw, 3.0, r);
  CHECK(sum == doctest::Approx(total).epsilon(1e-8));
}

TEST_CASE("partition validation") {
  Set circle = Set::circle(1.0);
  CHECK_THROWS_AS(make_partition(circle, {4, 4}), InvalidArgumentError);
  CHECK_THROWS_AS(make_partition(circle, {0}), InvalidArgumentError);
  auto sp = make_partition(Set::sphere(3), {3, 4});
  CHECK(sp.size() == 12);
}

TEST_CASE("counts sum to N with the half-open convention") {
  Set circle = Set::circle(1.0);
  auto parts = make_partition(circle, {7});
  for (int t = 0; t < 30; ++t) {
    Configuration cfg(circle, circle.sample_uniform(23, 100 + t));
    auto counts = empirical_counts(cfg, parts);
    std::size_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == 23);
  }
  // boundary point lands in the bin whose lower edge it is
  Configuration edge(circle, {Vec{1.0, 0.0}});
  auto counts = empirical_counts(edge, parts);
  CHECK(counts[0] == 1);
}

TEST_CASE("interval endpoint counting") {
  Set seg = Set::interval(0.0, 1.0);
  auto parts = make_partition(seg, {4});
  Configuration cfg(seg, {Vec{0.0}, Vec{0.25}, Vec{0.5}, Vec{1.0}});
  auto counts = empirical_counts(cfg, parts);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 1);  // the top endpoint folds into the last bin
}

TEST_CASE("sup-CDF distance for equally spaced points") {
  Set circle = Set::circle(1.0);
  for (std::size_t n : {8, 32}) {
    Configuration cfg = seed_configuration(circle, n, SeedStyle::equally_spaced);
    CHECK(cdf_sup_distance(cfg, nullptr, 2.0) <= 1.0 / double(n) + 1e-9);
  }
}

TEST_CASE("comparison report plumbing") {
  Set circle = Set::circle(1.0);
  std::vector<Configuration> cfgs{
      seed_configuration(circle, 8, SeedStyle::equally_spaced),
      seed_configuration(circle, 32, SeedStyle::equally_spaced)};
  DistributionReport rep = compare_distribution(cfgs, nullptr, 2.0, 4, 0.2, false);
  CHECK(rep.pass);
  CHECK(rep.rows.size() == 2);
  CHECK(rep.bins.size() == 4);
  double mass = 0.0;
  for (const auto& b : rep.bins) mass += b.predicted_fraction;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));

  DistributionReport lg = compare_distribution(cfgs, nullptr, 2.0, 4, 0.2, true);
  CHECK(lg.out_of_theorem);
  CHECK(lg.pass);  // report-only outside the theorem
}

}  // TEST_SUITE
