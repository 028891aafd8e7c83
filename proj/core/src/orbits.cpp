#include "circlespec/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"

namespace circlespec {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kDedupTol = 1e-8;
constexpr int kNewtonMaxIter = 100;

double lift_iterate(const CircleMapSpec& map, double x, int p) {
  for (int k = 0; k < p; ++k) x = lift(map, x);
  return x;
}

Stability classify(double c) {
  if (std::abs(c) < 1.0 - kNeutralBand) return Stability::stable;
  if (std::abs(c) > 1.0 + kNeutralBand) return Stability::unstable;
  return Stability::neutral;
}

/// Rotate points so the smallest comes first, preserving cyclic order.
void canonicalize(std::vector<double>& pts) {
  auto it = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), it, pts.end());
}

}  // namespace

double orbit_multiplier(const CircleMapSpec& map, std::span<const double> points) {
  if (points.empty()) throw invalid_orbit_error("orbit_multiplier: empty orbit");
  const int p = static_cast<int>(points.size());
  for (int i = 0; i < p; ++i) {
    double img = eval(map, points[i]);
    if (circle_distance(img, points[(i + 1) % p]) > 1e-6)
      throw invalid_orbit_error("orbit_multiplier: points do not close up");
  }
  double c = 1.0;
  for (double x : points) c *= deriv(map, x);
  return c;
}

std::vector<PeriodicOrbit> find_periodic_orbits(const CircleMapSpec& map,
                                                int p_max, int scan_n,
                                                std::vector<std::string>* diagnostics) {
  if (p_max < 1) throw config_error("find_periodic_orbits: p_max must be >= 1");
  if (scan_n < 256) throw config_error("find_periodic_orbits: scan_n must be >= 256");

  std::vector<PeriodicOrbit> orbits;

  auto already_known = [&](int p, double smallest) {
    for (const auto& o : orbits) {
      if (o.period != p) continue;
      if (circle_distance(o.points.front(), smallest) <= kDedupTol) return true;
    }
    return false;
  };

  for (int p = 1; p <= p_max; ++p) {
    // displacement g(x) = lift(f^p)(x) - x over one sample period
    const int n = scan_n;
    std::vector<double> sample(n + 1), disp(n + 1);
    double dmin = 0.0, dmax = 0.0;
    for (int i = 0; i <= n; ++i) {
      sample[i] = -pi + i * (two_pi / n);
      disp[i] = lift_iterate(map, sample[i], p) - sample[i];
      dmin = (i == 0) ? disp[i] : std::min(dmin, disp[i]);
      dmax = (i == 0) ? disp[i] : std::max(dmax, disp[i]);
    }
    const int m_lo = static_cast<int>(std::floor(dmin / two_pi)) - 1;
    const int m_hi = static_cast<int>(std::ceil(dmax / two_pi)) + 1;

    for (int m = m_lo; m <= m_hi; ++m) {
      for (int i = 0; i < n; ++i) {
        const double g0 = disp[i] - two_pi * m;
        const double g1 = disp[i + 1] - two_pi * m;
        if (!(g0 == 0.0 || g0 * g1 < 0.0)) continue;

        // bisection bracket, then Newton polish on g(x) = f^p(x) - x - 2 pi m
        double lo = sample[i], hi = sample[i + 1];
        double glo = g0;
        for (int b = 0; b < 60 && hi - lo > 1e-14; ++b) {
          const double mid = 0.5 * (lo + hi);
          const double gm = lift_iterate(map, mid, p) - mid - two_pi * m;
          if (glo * gm <= 0.0) {
            hi = mid;
          } else {
            lo = mid;
            glo = gm;
          }
        }
        double root = 0.5 * (lo + hi);
        bool converged = false;
        for (int it = 0; it < kNewtonMaxIter; ++it) {
          double x = root, d = 1.0;
          for (int k = 0; k < p; ++k) {
            d *= deriv(map, x);
            x = lift(map, x);
          }
          const double g = x - root - two_pi * m;
          const double gp = d - 1.0;
          if (std::abs(gp) < 1e-13) break;  // neutral-degenerate root
          const double step = g / gp;
          root -= step;
          if (std::abs(step) < 1e-13) {
            converged = true;
            break;
          }
        }
        if (!converged) {
          // re-check: bisection alone may already sit on the root
          const double g = lift_iterate(map, root, p) - root - two_pi * m;
          if (std::abs(g) < 1e-10) {
            converged = true;
          } else if (diagnostics) {
            diagnostics->push_back("dropped non-convergent candidate near x=" +
                                   std::to_string(root) + " (p=" + std::to_string(p) + ")");
          }
        }
        if (!converged) continue;

        // minimality: no divisor period closes up
        bool minimal = true;
        for (int q = 1; q < p; ++q) {
          if (p % q != 0) continue;
          if (circle_distance(lift_iterate(map, root, q), root) <= kResidualTol) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;

        PeriodicOrbit orb;
        orb.period = p;
        orb.points.resize(p);
        orb.points[0] = reduce_angle(root);
        for (int k = 1; k < p; ++k) orb.points[k] = eval(map, orb.points[k - 1]);
        canonicalize(orb.points);
        if (already_known(p, orb.points.front())) continue;

        orb.point_derivs.resize(p);
        orb.residual = 0.0;
        double c = 1.0;
        for (int k = 0; k < p; ++k) {
          orb.point_derivs[k] = deriv(map, orb.points[k]);
          c *= orb.point_derivs[k];
          orb.residual = std::max(
              orb.residual, circle_distance(eval(map, orb.points[k]), orb.points[(k + 1) % p]));
        }
        if (orb.residual > kResidualTol) {
          if (diagnostics)
            diagnostics->push_back("dropped candidate with residual " +
                                   std::to_string(orb.residual));
          continue;
        }
        orb.multiplier = c;
        orb.stability = classify(c);
        orbits.push_back(std::move(orb));
      }
    }
  }

  std::sort(orbits.begin(), orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return a.points.front() < b.points.front();
  });
  return orbits;
}

}  // namespace circlespec
