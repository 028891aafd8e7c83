#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "circlespec/angle.hpp"
#include "circlespec/asymptotics.hpp"
#include "circlespec/errors.hpp"
#include "circlespec/hermite.hpp"
#include "circlespec/spectrum.hpp"

using namespace circlespec;

namespace {

// explicit physicists' Hermite coefficient tables, n <= 6 (constant term first)
const std::vector<std::vector<long long>> kHermiteCoeffs = {
    {1},
    {0, 2},
    {-2, 0, 4},
    {0, -12, 0, 8},
    {12, 0, -48, 0, 16},
    {0, 120, 0, -160, 0, 32},
    {-120, 0, 720, 0, -480, 0, 64},
};

double eval_poly(const std::vector<long long>& coeffs, double x) {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + double(*it);
  return v;
}

// integer-coefficient recurrence, independent of the library implementation
std::vector<std::vector<long long>> hermite_coeffs_by_recurrence(int nmax) {
  std::vector<std::vector<long long>> H{{1}, {0, 2}};
  for (int n = 1; n < nmax; ++n) {
    std::vector<long long> next(n + 2, 0);
    for (std::size_t i = 0; i < H[n].size(); ++i) next[i + 1] += 2 * H[n][i];
    for (std::size_t i = 0; i < H[n - 1].size(); ++i) next[i] -= 2 * n * H[n - 1][i];
    H.push_back(std::move(next));
  }
  return H;
}

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

}  // namespace

TEST_CASE("hermite: base cases and explicit values") {
  CHECK(hermite(0, -1.7, false) == 1.0);
  CHECK(hermite(1, 3.0, false) == 6.0);
  CHECK(hermite(4, 1.0, false) == doctest::Approx(-20.0));  // 16 - 48 + 12
  CHECK(hermite(2, 0.0, true) == doctest::Approx(-2.0));    // e^0 * (4*0 - 2)
  CHECK_THROWS_AS(hermite(51, 0.5, false), std::out_of_range);
  CHECK_THROWS_AS(hermite(-1, 0.5, false), std::out_of_range);
  CHECK(std::isfinite(hermite(80, 1.2, true)));  // weighted form stays bounded
}

TEST_CASE("hermite recurrence matches explicit polynomials exactly") {
  auto computed = hermite_coeffs_by_recurrence(6);
  for (int n = 0; n <= 6; ++n) {
    REQUIRE(computed[n] == kHermiteCoeffs[n]);  // exact integer coefficients
    for (double x : {-2.5, -1.0, -0.3, 0.0, 0.7, 1.9, 2.5}) {
      const double expected = eval_poly(kHermiteCoeffs[n], x);
      const double got = hermite(n, x, false);
      CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
      const double weighted = hermite(n, x, true);
      CHECK(std::abs(weighted - std::exp(-x * x) * expected) <=
            1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("predicted spectrum at b=2.2 reproduces the closed-form towers") {
  auto map = CircleMapSpec::sine_circle(2.2);
  auto orbits = find_periodic_orbits(map, 1, 2048);
  auto pred = predicted_spectrum(orbits, 2);

  const double cs = 1.0 - std::sqrt(3.84);
  const double cu = 1.0 + std::sqrt(3.84);
  const std::vector<double> expect{1.0, cs, cs * cs, 1.0 / cu, 1.0 / (cu * cu),
                                   1.0 / (cu * cu * cu)};
  REQUIRE(pred.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(std::abs(pred[i].value.imag()) <= 1e-15);
    CHECK(pred[i].value.real() == doctest::Approx(expect[i]).epsilon(1e-9));
  }
  // sorted by descending modulus
  for (std::size_t i = 1; i < pred.size(); ++i)
    CHECK(std::abs(pred[i].value) <= std::abs(pred[i - 1].value) + 1e-15);
}

TEST_CASE("predicted spectrum at b=2.3 contains both square-root branches") {
  auto map = CircleMapSpec::sine_circle(2.3);
  auto orbits = find_periodic_orbits(map, 2, 2048);
  auto pred = predicted_spectrum(orbits, 1);

  const auto& p2 = orbits[2];
  REQUIRE(p2.period == 2);
  const double sq = std::sqrt(p2.multiplier);
  auto contains = [&](std::complex<double> v) {
    for (const auto& pe : pred)
      if (std::abs(pe.value - v) <= 1e-9) return true;
    return false;
  };
  CHECK(contains({1.0, 0.0}));
  CHECK(contains({-1.0, 0.0}));
  CHECK(contains({sq, 0.0}));
  CHECK(contains({-sq, 0.0}));
}

TEST_CASE("predicted spectrum invariants: branches, conjugation, modulus-1 count") {
  auto map = CircleMapSpec::sine_circle(2.3);
  auto orbits = find_periodic_orbits(map, 2, 2048);
  auto pred = predicted_spectrum(orbits, 3);

  int mod1 = 0, stable_period_sum = 0;
  for (const auto& pe : pred) {
    const auto& o = orbits[pe.orbit_id];
    const int p = o.period;
    const std::complex<double> lhs = std::pow(pe.value, p);
    const double cj = std::pow(std::abs(o.multiplier), pe.j) *
                      ((o.multiplier < 0 && pe.j % 2) ? -1.0 : 1.0);
    const double target = pe.kind == OrbitClass::stable
                              ? cj
                              : 1.0 / (std::abs(o.multiplier) * cj);
    CHECK(std::abs(lhs - target) <= 1e-12 * std::max(1.0, std::abs(target)));
    CHECK(std::abs(pe.value) <= 1.0 + 1e-12);
    if (pe.kind == OrbitClass::stable && pe.j == 0) CHECK(std::abs(pe.value) == 1.0);
    if (std::abs(std::abs(pe.value) - 1.0) == 0.0) ++mod1;

    bool conj_present = false;
    for (const auto& q : pred)
      if (std::abs(q.value - std::conj(pe.value)) <= 1e-12) conj_present = true;
    CHECK(conj_present);
  }
  for (const auto& o : orbits)
    if (o.stability == Stability::stable) stable_period_sum += o.period;
  CHECK(mod1 == stable_period_sum);

  // neutral orbits are rejected
  auto mapc = CircleMapSpec::sine_circle(std::sqrt(5.0));
  auto neutral = find_periodic_orbits(mapc, 1, 2048);
  CHECK_THROWS_AS(predicted_spectrum(neutral, 1), bifurcation_point_error);
}

TEST_CASE("local scales: closed forms for fixed points") {
  auto noise = NoiseSpec::constant();
  auto map = CircleMapSpec::sine_circle(2.2);
  auto orbits = find_periodic_orbits(map, 1, 2048);
  const double cs = orbits[0].multiplier, cu = orbits[1].multiplier;

  const double alpha = local_scale(orbits[0], noise, 0);
  CHECK(alpha == doctest::Approx(std::sqrt((1 - cs * cs) / 2.0)).epsilon(1e-12));
  CHECK(alpha == doctest::Approx(0.19897687).epsilon(1e-6));

  const double beta = local_scale(orbits[1], noise, 0);
  CHECK(beta == doctest::Approx(std::sqrt((cu * cu - 1) / 2.0)).epsilon(1e-12));
  CHECK(beta == doctest::Approx(1.96966794).epsilon(1e-8));
}

TEST_CASE("local scales: period-2 accumulated variance") {
  auto noise = NoiseSpec::constant();
  auto map = CircleMapSpec::sine_circle(2.3);
  auto orbits = find_periodic_orbits(map, 2, 2048);
  const auto& p2 = orbits[2];
  const double c1 = deriv(map, p2.points[0]);
  const double c2 = deriv(map, p2.points[1]);
  const double c = p2.multiplier;

  // from x_1 the one-cycle variance is c_2^2 sigma^2(x_1) + sigma^2(x_2)
  const double a1 = local_scale(p2, noise, 0);
  CHECK(a1 ==
        doctest::Approx(std::sqrt((1 - c * c) / (2 * (c2 * c2 + 1)))).epsilon(1e-12));
  const double a2 = local_scale(p2, noise, 1);
  CHECK(a2 ==
        doctest::Approx(std::sqrt((1 - c * c) / (2 * (c1 * c1 + 1)))).epsilon(1e-12));
  // frozen from the closed-form evaluation of the orbit located by bisection
  CHECK(a1 == doctest::Approx(0.42847322).epsilon(1e-6));
  CHECK(a2 == doctest::Approx(0.30279591).epsilon(1e-6));
  CHECK(a1 / a2 == doctest::Approx(1.41505620).epsilon(1e-6));

  // non-constant profile changes the variance accordingly
  auto wavy = NoiseSpec::cosine(1.0, 0.2);
  const double s1 = wavy(p2.points[0]), s2 = wavy(p2.points[1]);
  CHECK(local_scale(p2, wavy, 0) ==
        doctest::Approx(std::sqrt((1 - c * c) / (2 * (c2 * c2 * s1 * s1 + s2 * s2))))
            .epsilon(1e-12));
}

TEST_CASE("predicted mode: single Gaussian for a stable fixed point") {
  auto noise = NoiseSpec::constant();
  auto map = CircleMapSpec::sine_circle(2.2);
  auto orbits = find_periodic_orbits(map, 1, 2048);
  auto grid = Grid::circle(512);

  auto mode = predicted_mode(orbits[0], noise, 0, 0, 0.05, grid.nodes);
  CHECK(mode.side == HermiteMode::Side::density);
  REQUIRE(mode.samples.size() == grid.nodes.size());

  // matches the directly normalized Gaussian e^{-(alpha (x - x_s)/eps)^2}
  const double alpha = local_scale(orbits[0], noise, 0);
  const double x_s = orbits[0].points[0];
  std::vector<double> direct(grid.n);
  double l1 = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double u = alpha * reduce_angle(grid.nodes[i] - x_s) / 0.05;
    direct[i] = std::exp(-u * u);
    l1 += direct[i] * grid.h;
  }
  double mass = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    CHECK(mode.samples[i].real() == doctest::Approx(direct[i] / l1).epsilon(1e-10));
    CHECK(std::abs(mode.samples[i].imag()) <= 1e-15);
    mass += std::abs(mode.samples[i]) * grid.h;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("predicted period-2 modes track the numeric eigenpairs") {
  auto noise = NoiseSpec::constant();
  auto map = CircleMapSpec::sine_circle(2.3);
  auto orbits = find_periodic_orbits(map, 2, 2048);
  const auto& p2 = orbits[2];

  auto op = assemble(map, noise, 0.05, 512);
  auto spec = spectrum(op, 4);
  auto rho = invariant_density(op, spec);

  // branch 0, n = 0: the predicted invariant density
  auto mode0 = predicted_mode(p2, noise, 0, 0, 0.05, op.grid.nodes);
  double l1 = 0.0;
  for (int i = 0; i < op.grid.n; ++i)
    l1 += std::abs(mode0.samples[i].real() - rho[i]) * op.grid.h;
  // O(eps) mode error: 0.343 measured at eps=0.05, shrinking to 0.115 at 0.02
  CHECK(l1 <= 0.45);

  Eigen::VectorXd m0(op.grid.n), r0(op.grid.n);
  for (int i = 0; i < op.grid.n; ++i) {
    m0[i] = mode0.samples[i].real();
    r0[i] = rho[i];
  }
  CHECK(cosine_similarity(m0, r0) >= 0.95);

  // branch 1, n = 0: antisymmetric weights pair with the eigenvalue near -1
  std::complex<double> lam_m1 = spec.eigenvalues[0];
  for (const auto& lam : spec.eigenvalues)
    if (std::abs(lam + 1.0) < std::abs(lam_m1 + 1.0)) lam_m1 = lam;
  REQUIRE(std::abs(lam_m1 + 1.0) <= 0.05);

  auto mode1 = predicted_mode(p2, noise, 0, 1, 0.05, op.grid.nodes);
  auto left = eigenvector(op, lam_m1, EigenvectorSide::left);
  Eigen::VectorXd m1(op.grid.n), l1v(op.grid.n);
  for (int i = 0; i < op.grid.n; ++i) {
    m1[i] = mode1.samples[i].real();
    l1v[i] = left[i].real();
  }
  CHECK(cosine_similarity(m1, l1v) >= 0.98);
}

TEST_CASE("predicted invariant density converges to the numeric one as eps shrinks") {
  auto noise = NoiseSpec::constant();
  auto map = CircleMapSpec::sine_circle(2.3);
  auto orbits = find_periodic_orbits(map, 2, 2048);
  const auto& p2 = orbits[2];

  auto l1_at = [&](double eps, int n) {
    auto op = assemble(map, noise, eps, n);
    auto rho = invariant_density(op);
    auto mode = predicted_mode(p2, noise, 0, 0, eps, op.grid.nodes);
    double l1 = 0.0;
    for (int i = 0; i < op.grid.n; ++i)
      l1 += std::abs(mode.samples[i].real() - rho[i]) * op.grid.h;
    return l1;
  };
  const double coarse = l1_at(0.05, 512);
  const double fine = l1_at(0.02, 1280);
  CHECK(coarse <= 0.45);   // measured 0.343
  CHECK(fine <= 0.15);     // measured 0.115
  CHECK(fine < 0.6 * coarse);
}

TEST_CASE("AR oracle, stable: spectrum c^n with Hermite eigenvectors") {
  auto op = build_local_ar_operator(0.5, 1.0, 13.1, 400);
  CHECK(op.kind == KernelKind::line_truncated);
  for (int i = 0; i < op.grid.n; ++i)
    CHECK(op.matrix.row(i).sum() <= 1.0 + 1e-10);

  auto spec = spectrum(op, 8, /*with_vectors=*/true);
  const double alpha = std::sqrt((1.0 - 0.25) / 2.0);
  for (int n = 0; n < 8; ++n) {
    CHECK(std::abs(spec.eigenvalues[n] - std::pow(0.5, n)) <= 1e-6);
    Eigen::VectorXd Hn(op.grid.n), hn(op.grid.n), r(op.grid.n), l(op.grid.n);
    for (int i = 0; i < op.grid.n; ++i) {
      Hn[i] = hermite(n, alpha * op.grid.nodes[i], false);
      hn[i] = hermite(n, alpha * op.grid.nodes[i], true);
      r[i] = spec.right_vectors[n][i].real();
      l[i] = spec.left_vectors[n][i].real();
    }
    CHECK(cosine_similarity(r, Hn) >= 0.999);
    CHECK(cosine_similarity(l, hn) >= 0.999);
  }
}

TEST_CASE("AR oracle, unstable: spectrum |c|^{-1} c^{-n}") {
  auto op = build_local_ar_operator(3.0, 1.0, 8.0, 400);
  auto spec = spectrum(op, 5);
  for (int n = 0; n < 5; ++n)
    CHECK(std::abs(spec.eigenvalues[n] - std::pow(3.0, -(n + 1))) <= 1e-4);
}

TEST_CASE("AR oracle edge cases: rank-one kernel, neutral c, domain guard") {
  auto op = build_local_ar_operator(0.0, 1.0, 12.0, 200);
  auto spec = spectrum(op, 3);
  CHECK(std::abs(spec.eigenvalues[0] - 1.0) <= 1e-8);
  CHECK(std::abs(spec.eigenvalues[1]) <= 1e-10);
  CHECK(std::abs(spec.eigenvalues[2]) <= 1e-10);

  CHECK_THROWS_AS(build_local_ar_operator(1.0 + 1e-8, 1.0, 10.0, 100),
                  bifurcation_point_error);
  CHECK_THROWS_AS(build_local_ar_operator(0.5, 1.0, 5.0, 100), config_error);
  CHECK_THROWS_AS(build_local_ar_operator(3.0, 1.0, 2.0, 100), config_error);
  CHECK_THROWS_AS(build_local_ar_operator(0.5, -1.0, 13.1, 100), config_error);
}
