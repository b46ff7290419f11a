#include <doctest.h>

#include <cmath>

#include "chebpol/errors.hpp"
#include "chebpol/set.hpp"

using namespace chebpol;

TEST_SUITE("geometry") {

TEST_CASE("closed-form measures") {
  CHECK(hausdorff_measure(Set::circle(1.0)) == kTwoPi);
  CHECK(hausdorff_measure(Set::circle(2.5)) == doctest::Approx(5.0 * kPi));
  CHECK(hausdorff_measure(Set::cube(3)) == 1.0);
  CHECK(hausdorff_measure(Set::interval(-2.0, 3.0)) == 5.0);
  CHECK(hausdorff_measure(Set::sphere(3)) == doctest::Approx(4.0 * kPi));
  CHECK(hausdorff_measure(Set::ball(3)) == doctest::Approx(4.0 * kPi / 3.0));
  CHECK(hausdorff_measure(Set::ball(2)) == doctest::Approx(kPi));
}

TEST_CASE("half-circle curve arclength by quadrature") {
  Set half = Set::curve(
      [](double t) { return Vec{std::cos(kPi * t), std::sin(kPi * t)}; },
      [](double t) {
        return Vec{-kPi * std::sin(kPi * t), kPi * std::cos(kPi * t)};
      },
      2);
  CHECK(hausdorff_measure(half) == doctest::Approx(kPi).epsilon(1e-8));
  CHECK(half.hausdorff_dim() == 1);
  CHECK(half.ambient_dim() == 2);
}

TEST_CASE("degenerate curve is rejected") {
  CHECK_THROWS_AS(Set::curve([](double t) { return Vec{t * t, 0.0}; },
                             [](double t) { return Vec{2.0 * t, 0.0}; }, 2),
                  InvalidSetError);
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(Set::interval(1.0, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(Set::circle(0.0), InvalidArgumentError);
  CHECK_THROWS_AS(Set::sphere(1), InvalidArgumentError);
  CHECK_THROWS_AS(Set::cube(0), InvalidArgumentError);
}

TEST_CASE("mesh covering certificates") {
  Mesh mc = Set::circle(1.0).mesh(0.01);
  CHECK(mc.nodes.size() >= std::size_t(std::ceil(kPi / 0.01)));
  CHECK(mc.covering_radius <= 0.01);

  Mesh mi = Set::interval(-1.0, 1.0).mesh(0.1);
  CHECK(mi.nodes.size() >= 21);
  CHECK(mi.covering_radius <= 0.1);

  Mesh ms = Set::sphere(3).mesh(0.2);
  CHECK(ms.covering_radius <= 0.2);
  double tol = 1e-9;
  for (const Vec& n : ms.nodes) CHECK(Set::sphere(3).contains(n, tol));

  Mesh mq = Set::cube(2).mesh(0.25);
  CHECK(mq.covering_radius <= 0.25);

  Mesh mb = Set::ball(2).mesh(0.3);
  CHECK(mb.covering_radius <= 0.3);
  for (const Vec& n : mb.nodes) CHECK(n.norm() <= 1.0 + 1e-12);
}

TEST_CASE("mesh coverage audited by sampling") {
  for (const Set& set : {Set::ball(2), Set::cube(2), Set::circle(1.0)}) {
    Mesh m = set.mesh(0.15);
    for (const Vec& y : set.sample_uniform(2000, 42)) {
      double nearest = 1e300;
      for (const Vec& n : m.nodes) nearest = std::min(nearest, dist(y, n));
      CHECK(nearest <= m.covering_radius + 1e-12);
    }
  }
}

TEST_CASE("mesh resource limits") {
  CHECK_THROWS_AS(Set::cube(3).mesh(1e-4), ResourceLimitError);
  CHECK_THROWS_AS(Set::circle(1.0).mesh(1e-9, 1000), ResourceLimitError);
  CHECK_THROWS_AS(Set::circle(1.0).mesh(0.0), InvalidArgumentError);
}

TEST_CASE("sampling determinism and membership") {
  Set sphere = Set::sphere(3);
  auto a = sphere.sample_uniform(100, 9);
  auto b = sphere.sample_uniform(100, 9);
  auto c = sphere.sample_uniform(100, 10);
  REQUIRE(a.size() == 100);
  bool identical = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    identical &= a[i] == b[i];
    differs |= !(a[i] == c[i]);
    CHECK(std::fabs(a[i].norm() - 1.0) <= 1e-12);
  }
  CHECK(identical);
  CHECK(differs);
}

TEST_CASE("projection") {
  Set circle = Set::circle(1.0);
  CHECK(dist(circle.project(Vec{3.0, 4.0}), Vec{0.6, 0.8}) <= 1e-15);
  // center tie resolves to the lexicographically smallest point
  Vec tie = circle.project(Vec{0.0, 0.0});
  CHECK(tie[0] == -1.0);
  CHECK(Set::ball(2).project(Vec{0.25, 0.25})[0] == 0.25);
  Set half = Set::curve(
      [](double t) { return Vec{std::cos(kPi * t), std::sin(kPi * t)}; },
      [](double t) {
        return Vec{-kPi * std::sin(kPi * t), kPi * std::cos(kPi * t)};
      },
      2);
  Vec p = half.project(Vec{0.0, 2.0});
  CHECK(dist(p, Vec{0.0, 1.0}) <= 1e-6);
}

TEST_CASE("chart round trips and half-open counting") {
  Set circle = Set::circle(1.0);
  Vec u = circle.ambient_to_chart(Vec{0.0, -1.0});
  CHECK(u[0] == doctest::Approx(1.5 * kPi));
  Box arc = circle.chart_domain();
  arc.lo[0] = 1.5 * kPi;
  arc.hi[0] = 2.5 * kPi;  // wraps through zero
  CHECK(circle.chart_box_counts(arc, Vec{0.0}));         // wrapped inside
  CHECK(circle.chart_box_counts(arc, Vec{1.5 * kPi}));   // lower edge in
  CHECK_FALSE(circle.chart_box_counts(arc, Vec{kPi}));   // outside

  Set sphere = Set::sphere(3);
  Vec us = sphere.ambient_to_chart(Vec{0.0, 1.0, 0.0});
  CHECK(us[0] == doctest::Approx(0.0));
  CHECK(us[1] == doctest::Approx(kPi / 2.0));
}

TEST_CASE("region meshes certify sub-regions") {
  Set circle = Set::circle(1.0);
  Box arc = circle.chart_domain();
  arc.hi[0] = arc.lo[0] + 0.5;
  Mesh m = circle.region_mesh(Region{arc}, 0.01);
  CHECK(!m.nodes.empty());
  CHECK(m.covering_radius <= 0.01);
  for (const Vec& n : m.nodes)
    CHECK(circle.chart_box_counts({arc.lo, arc.hi}, circle.ambient_to_chart(n)));
}

}  // TEST_SUITE
