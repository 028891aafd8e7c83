#include <doctest.h>

#include <cmath>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"
#include "circlespec/maps.hpp"

using namespace circlespec;

namespace {

// independent high-precision oracle for the sine-circle lift
long double sine_circle_oracle(long double x, long double b) {
  return x + 1.0L - b * std::sin(x);
}

}  // namespace

TEST_CASE("sine-circle eval matches the high-precision oracle") {
  auto map = CircleMapSpec::sine_circle(2.3);
  const double x = 0.14;
  const double expected = static_cast<double>(sine_circle_oracle(0.14L, 2.3L));
  CHECK(eval(map, x) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(eval(map, x) == doctest::Approx(0.8190508363182561).epsilon(1e-12));
}

TEST_CASE("fixed point of the b=2.2 map: sin x = 1/b") {
  auto map = CircleMapSpec::sine_circle(2.2);
  // bisection oracle on sin x - 1/b over (0, pi/2)
  double lo = 0.0, hi = 1.5;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    (std::sin(mid) - 1.0 / 2.2 < 0 ? lo : hi) = mid;
  }
  const double xs = 0.5 * (lo + hi);
  CHECK(xs == doctest::Approx(std::asin(1.0 / 2.2)).epsilon(1e-12));
  CHECK(eval(map, xs) == doctest::Approx(xs).epsilon(1e-10));
}

TEST_CASE("lift consistency: f(x + 2 pi) = f(x) mod 2 pi on 1000 points") {
  auto map = CircleMapSpec::sine_circle(2.3);
  for (int i = 0; i < 1000; ++i) {
    const double x = -pi + (i + 0.5) * two_pi / 1000;
    CHECK(circle_distance(eval(map, x + two_pi), eval(map, x)) <= 1e-9);
    CHECK(std::isfinite(eval(map, x)));
    CHECK(std::isfinite(deriv(map, x)));
    CHECK(lift(map, x + two_pi) == doctest::Approx(lift(map, x) + two_pi).epsilon(1e-12));
  }
}

TEST_CASE("deriv agrees with central finite differences (step 1e-5)") {
  for (double b : {1.5, 2.0, 2.2, 2.3}) {
    auto map = CircleMapSpec::sine_circle(b);
    const double hstep = 1e-5;
    for (int i = 0; i < 1000; ++i) {
      const double x = -pi + (i + 0.5) * two_pi / 1000;
      const double fd = (lift(map, x + hstep) - lift(map, x - hstep)) / (2 * hstep);
      const double d = deriv(map, x);
      if (std::abs(d) > 1e-3) {
        CHECK(std::abs(fd - d) / std::abs(d) <= 1e-6);
      } else {
        CHECK(std::abs(fd - d) <= 1e-8);
      }
    }
  }
}

TEST_CASE("deriv closed forms at the fixed points") {
  const double b = 2.2;
  auto map = CircleMapSpec::sine_circle(b);
  const double xs = std::asin(1.0 / b);
  CHECK(deriv(map, xs) == doctest::Approx(1.0 - std::sqrt(b * b - 1.0)).epsilon(1e-12));
  CHECK(deriv(map, xs) == doctest::Approx(-0.959591794226543).epsilon(1e-12));

  // period-doubling threshold: f'(x_s) = -1 exactly at b = sqrt(5)
  const double bc = std::sqrt(5.0);
  auto mapc = CircleMapSpec::sine_circle(bc);
  CHECK(deriv(mapc, std::asin(1.0 / bc)) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("iterate: identity at p=0 and chain rule") {
  auto map = CircleMapSpec::sine_circle(2.3);
  auto r0 = iterate(map, 0.7, 0);
  CHECK(r0.point == doctest::Approx(0.7));
  CHECK(r0.derivative == 1.0);

  // two iterates from near the period-2 orbit
  auto r2 = iterate(map, 0.14, 2);
  const double y1 = eval(map, 0.14);
  CHECK(r2.derivative ==
        doctest::Approx(deriv(map, 0.14) * deriv(map, y1)).epsilon(1e-12));
  CHECK(circle_distance(r2.point, eval(map, y1)) <= 1e-12);

  // chain rule as a testable identity along a trajectory
  double x = -2.31, prod = 1.0;
  for (int k = 0; k < 7; ++k) {
    prod *= deriv(map, x);
    x = eval(map, x);
  }
  CHECK(iterate(map, -2.31, 7).derivative == doctest::Approx(prod).epsilon(1e-12));
}

TEST_CASE("iterate composition property") {
  auto map = CircleMapSpec::sine_circle(2.2);
  for (double x : {-3.0, -1.2, 0.3, 0.47, 2.9}) {
    for (int p : {1, 2, 3}) {
      for (int q : {1, 2, 4}) {
        auto full = iterate(map, x, p + q);
        auto first = iterate(map, x, p);
        auto second = iterate(map, first.point, q);
        CHECK(full.derivative ==
              doctest::Approx(first.derivative * second.derivative).epsilon(1e-10));
        CHECK(circle_distance(full.point, second.point) <= 1e-10);
      }
    }
  }
}

TEST_CASE("unknown family and invalid noise profiles are rejected") {
  CircleMapSpec bogus{"logistic", {{"r", 3.5}}};
  CHECK_THROWS_AS(eval(bogus, 0.1), config_error);
  CHECK_THROWS_AS(deriv(bogus, 0.1), config_error);
  CHECK_THROWS_AS(NoiseSpec::constant(0.0), config_error);
  CHECK_THROWS_AS(NoiseSpec::constant(-1.0), config_error);
  CHECK_THROWS_AS(NoiseSpec::cosine(0.5, 0.5), config_error);
}

TEST_CASE("noise profiles: bounds and periodicity") {
  auto flat = NoiseSpec::constant();
  CHECK(flat.sigma_lb == 1.0);
  CHECK(flat.sigma_ub == 1.0);
  CHECK(flat(0.3) == 1.0);

  auto wavy = NoiseSpec::cosine(1.0, 0.25);
  CHECK(wavy.sigma_lb == doctest::Approx(0.75));
  CHECK(wavy.sigma_ub == doctest::Approx(1.25));
  for (int i = 0; i < 64; ++i) {
    const double x = -pi + (i + 0.5) * two_pi / 64;
    CHECK(wavy(x) >= wavy.sigma_lb - 1e-15);
    CHECK(wavy(x) <= wavy.sigma_ub + 1e-15);
    CHECK(wavy(x + two_pi) == doctest::Approx(wavy(x)).epsilon(1e-14));
  }
}

TEST_CASE("custom families evaluate through the registry interface") {
  register_family("doubling-ish", MapFamily{
      [](double x, const ParamMap& p) { return 2.0 * x + p.at("a"); },
      [](double, const ParamMap&) { return 2.0; },
      [](const ParamMap& p) {
        if (!p.count("a")) throw config_error("doubling-ish: missing a");
      }});
  CircleMapSpec m{"doubling-ish", {{"a", 0.5}}};
  CHECK(lift(m, 1.0) == doctest::Approx(2.5));
  CHECK(deriv(m, 1.0) == 2.0);
}
