#include <doctest.h>

#include <cmath>
#include <limits>

#include "chebpol/errors.hpp"
#include "chebpol/kernel.hpp"
#include "chebpol/rng.hpp"
#include "chebpol/set.hpp"

using namespace chebpol;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("kernel") {

TEST_CASE("pointwise values") {
  Kernel r2 = Kernel::riesz(2.0);
  CHECK(r2.eval(Vec{1.0, 0.0}, Vec{-1.0, 0.0}) == 0.25);
  CHECK(r2.eval(Vec{1.0, 0.0}, Vec{1.0, 0.0}) == kInf);

  Kernel lg = Kernel::log_kernel();
  CHECK(lg.eval(Vec{0.0}, Vec{0.5}) == doctest::Approx(std::log(2.0)));
  CHECK(lg.eval(Vec{0.0}, Vec{2.0}) == doctest::Approx(-std::log(2.0)));
  CHECK(lg.eval(Vec{0.0}, Vec{0.0}) == kInf);

  Kernel wk = Kernel::weighted_riesz(2.0, WeightSpec::constant(2.0));
  CHECK(wk.eval(Vec{1.0, 0.0}, Vec{-1.0, 0.0}) == 0.5);
}

TEST_CASE("distance clamp") {
  Kernel r2 = Kernel::riesz(2.0, 0.1);
  CHECK(r2.eval(Vec{0.0}, Vec{0.0}) == doctest::Approx(100.0));
  CHECK(r2.eval(Vec{0.0}, Vec{0.05}) == doctest::Approx(100.0));
  CHECK(r2.eval(Vec{0.0}, Vec{0.2}) == doctest::Approx(25.0));
  CHECK(r2.with_eps(0.0).eval(Vec{0.0}, Vec{0.0}) == kInf);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(Kernel::riesz(0.0), InvalidArgumentError);
  CHECK_THROWS_AS(Kernel::riesz(-1.0), InvalidArgumentError);
  CHECK_THROWS_AS(Kernel::riesz(2.0, -1e-9), InvalidArgumentError);
  CHECK_THROWS_AS(WeightSpec::constant(0.0), InvalidArgumentError);
  CHECK_THROWS_AS(WeightSpec::circle_cosine(1.0, 1.5), InvalidArgumentError);
}

TEST_CASE("symmetry, monotonicity, scaling") {
  Rng rng(99);
  Kernel r3 = Kernel::riesz(3.0);
  Kernel lg = Kernel::log_kernel();
  for (int t = 0; t < 100; ++t) {
    Vec x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Vec y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CHECK(r3.eval(x, y) == r3.eval(y, x));
    CHECK(lg.eval(x, y) == lg.eval(y, x));
    double alpha = rng.uniform(0.3, 2.5);
    if (dist(x, y) > 1e-6) {
      double lhs = r3.eval(alpha * x, alpha * y);
      double rhs = std::pow(alpha, -3.0) * r3.eval(x, y);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  double prev = kInf;
  for (double d : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    double v = r3.eval(Vec{0.0}, Vec{d});
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("weight diagonals and CPD audit") {
  WeightSpec cosw = WeightSpec::circle_cosine(2.0, 1.0);
  CHECK(diagonal_weight(cosw, Vec{1.0, 0.0}) == doctest::Approx(3.0));
  CHECK(diagonal_weight(cosw, Vec{-1.0, 0.0}) == doctest::Approx(1.0));
  CHECK_NOTHROW(audit_weight(cosw, Set::circle(1.0), 2000, 1));

  // a weight whose declared bound is violated off the equator
  WeightSpec bad = WeightSpec::separable(
      [](const Vec& a) { return 0.1 + a[0] * a[0]; },
      [](const Vec&) { return 1.0; }, 0.5, 1.2, 2.0, "bad");
  CHECK_THROWS_AS(audit_weight(bad, Set::circle(1.0), 2000, 1),
                  CpdViolationError);
}

TEST_CASE("potential_sum matches per-pair evaluation") {
  Rng rng(7);
  std::vector<Vec> pts;
  for (int i = 0; i < 12; ++i)
    pts.push_back(Vec{rng.uniform(-1, 1), rng.uniform(-1, 1)});
  Vec y{0.3, -0.4};
  for (const Kernel& k :
       {Kernel::riesz(2.5), Kernel::log_kernel(),
        Kernel::weighted_riesz(3.0, WeightSpec::circle_cosine(2.0, 1.0))}) {
    double direct = 0.0;
    for (const Vec& x : pts) direct += k.eval(y, x);
    CHECK(k.potential_sum(y, pts) == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("gradients agree with finite differences") {
  Kernel wk = Kernel::weighted_riesz(3.0, WeightSpec::circle_cosine(2.0, 0.5));
  Vec x{0.8, 0.6}, y{-0.2, 0.9};
  double h = 1e-6;
  Vec gs = wk.grad_source(x, y);
  Vec gf = wk.grad_field(x, y);
  for (int i = 0; i < 2; ++i) {
    Vec yp = y, ym = y;
    yp[i] += h;
    ym[i] -= h;
    double fd = (wk.eval(x, yp) - wk.eval(x, ym)) / (2 * h);
    CHECK(gs[i] == doctest::Approx(fd).epsilon(1e-5));
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    double fdx = (wk.eval(xp, y) - wk.eval(xm, y)) / (2 * h);
    CHECK(gf[i] == doctest::Approx(fdx).epsilon(1e-5));
  }
}

}  // TEST_SUITE
