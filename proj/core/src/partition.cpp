#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"
#include "circlespec/orbits.hpp"

namespace circlespec {

bool CircleInterval::contains(double x) const {
  return circle_distance(x, center) <= radius;
}

double CircleInterval::distance(double x) const {
  return std::max(0.0, circle_distance(x, center) - radius);
}

std::size_t PhasePartition::region_of(double x) const {
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (regions[r].transient()) continue;
    for (const auto& iv : regions[r].intervals)
      if (iv.contains(x)) return r;
  }
  return transient_index;
}

namespace {

constexpr int kVerifyGrid = 4096;
constexpr int kMaxShrinks = 50;
constexpr double kShrinkFactor = 0.8;
constexpr double kUnstableRadiusCap = 0.22;
constexpr int kTransitCap = 5000;

struct OrbitGeometry {
  std::size_t orbit_index;
  bool stable;
  double scale = 1.0;                 // shrink factor applied to this orbit
  std::vector<double> base_radii;     // per point, before scaling
  std::vector<double> collar_radii;   // unstable only: outer radius of the buffer
  bool wide = false;                  // stable fixed point occupying its whole basin gap
};

/// Per-point radius profile consistent around the cycle:
/// r_{i+1} = |c_i| r_i |c|^{-1/p}. For stable orbits this leaves a margin
/// on the way in (f(B_i) lands inside B_{i+1}); for unstable ones a margin
/// on the way out.
std::vector<double> cyclic_profile(const PeriodicOrbit& o) {
  const int p = o.period;
  std::vector<double> prof(p, 1.0);
  const double root = std::pow(std::abs(o.multiplier), 1.0 / p);
  for (int i = 1; i < p; ++i)
    prof[i] = prof[i - 1] * std::abs(o.point_derivs[i - 1]) / root;
  return prof;
}

double min_gap_to_others(double x, std::size_t self_orbit,
                         const std::vector<PeriodicOrbit>& orbits) {
  double gap = two_pi;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (k == self_orbit) continue;
    for (double y : orbits[k].points) gap = std::min(gap, circle_distance(x, y));
  }
  // other points of the same orbit also bound the neighborhood
  for (double y : orbits[self_orbit].points)
    if (y != x) gap = std::min(gap, circle_distance(x, y));
  return gap;
}

}  // namespace

PhasePartition build_partition(const CircleMapSpec& map,
                               const std::vector<PeriodicOrbit>& orbits) {
  if (orbits.empty()) throw config_error("build_partition: no orbits given");
  for (const auto& o : orbits)
    if (o.stability == Stability::neutral)
      throw bifurcation_point_error(
          "build_partition: neutral orbit present (|c| within the neutral band)");
  bool any_stable = false;
  for (const auto& o : orbits) any_stable |= (o.stability == Stability::stable);
  if (!any_stable)
    throw hypothesis_violation_error(
        "build_partition: no stable orbit; transient samples cannot settle");

  // initial geometry: caps keep neighborhoods inside each point's territory
  std::vector<OrbitGeometry> geo;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& o = orbits[k];
    OrbitGeometry g;
    g.orbit_index = k;
    g.stable = (o.stability == Stability::stable);
    auto prof = cyclic_profile(o);
    double scale = std::numeric_limits<double>::infinity();
    for (int i = 0; i < o.period; ++i) {
      double territory = 0.5 * min_gap_to_others(o.points[i], k, orbits);
      double cap = g.stable ? 0.6 * territory
                            : std::min(0.5 * territory, kUnstableRadiusCap);
      scale = std::min(scale, cap / prof[i]);
    }
    g.base_radii.resize(o.period);
    for (int i = 0; i < o.period; ++i) g.base_radii[i] = prof[i] * scale;
    if (!g.stable) {
      g.collar_radii.resize(o.period);
      for (int i = 0; i < o.period; ++i) {
        double territory = 0.5 * min_gap_to_others(o.points[i], k, orbits);
        g.collar_radii[i] = std::min(2.0 * g.base_radii[i], 0.9 * territory);
      }
    }
    geo.push_back(std::move(g));
  }

  std::string fail_note;
  for (int attempt = 0; attempt <= kMaxShrinks; ++attempt) {
    // assemble candidate regions
    PhasePartition part;
    std::vector<std::size_t> unstable_geo, stable_geo;
    for (std::size_t g = 0; g < geo.size(); ++g)
      (geo[g].stable ? stable_geo : unstable_geo).push_back(g);

    for (std::size_t idx : unstable_geo) {
      const auto& g = geo[idx];
      const auto& o = orbits[g.orbit_index];
      PartitionRegion r;
      r.label = "unstable-" + std::to_string(part.regions.size());
      r.orbit = g.orbit_index;
      for (int i = 0; i < o.period; ++i)
        r.intervals.push_back({o.points[i], g.scale * g.base_radii[i]});
      part.regions.push_back(std::move(r));
    }
    part.transient_index = part.regions.size();
    part.regions.push_back(PartitionRegion{"transient", {}, std::nullopt});

    // blocked arcs a stable fixed point may not expand into
    std::vector<CircleInterval> blocked;
    for (std::size_t idx : unstable_geo) {
      const auto& g = geo[idx];
      const auto& o = orbits[g.orbit_index];
      for (int i = 0; i < o.period; ++i)
        blocked.push_back({o.points[i], g.scale * g.collar_radii[i]});
    }
    for (std::size_t idx : stable_geo) {
      const auto& g = geo[idx];
      const auto& o = orbits[g.orbit_index];
      if (o.period >= 2)
        for (int i = 0; i < o.period; ++i)
          blocked.push_back({o.points[i], g.scale * g.base_radii[i]});
    }

    for (std::size_t idx : stable_geo) {
      auto& g = geo[idx];
      const auto& o = orbits[g.orbit_index];
      PartitionRegion r;
      r.label = "stable-" + std::to_string(part.regions.size() - part.transient_index - 1);
      r.orbit = g.orbit_index;
      g.wide = false;
      if (o.period == 1 && !blocked.empty()) {
        // occupy the whole gap between the adjacent blocked arcs: the
        // boundary then sits in the repelling zone of the unstable
        // neighborhoods, which is what gives the partition an O(1) margin
        const double x0 = o.points[0];
        double left = -two_pi, right = two_pi;
        bool inside_block = false;
        for (const auto& bl : blocked) {
          double d = reduce_angle(bl.center - x0);
          if (std::abs(d) <= bl.radius) inside_block = true;
          if (d > 0) right = std::min(right, d - bl.radius);
          else left = std::max(left, d + bl.radius);
          // arcs can also bound from the far side
          if (d > 0) left = std::max(left, d + bl.radius - two_pi);
          else right = std::min(right, d - bl.radius + two_pi);
        }
        bool free_gap = !inside_block && right > 0 && left < 0 && (right - left) < two_pi;
        if (free_gap) {
          // no other orbit point may sit in the gap
          for (std::size_t k = 0; k < orbits.size() && free_gap; ++k)
            for (double y : orbits[k].points) {
              if (k == g.orbit_index) continue;
              double d = reduce_angle(y - x0);
              if (d > left && d < right) free_gap = false;
            }
        }
        if (free_gap) {
          r.intervals.push_back({reduce_angle(x0 + 0.5 * (left + right)),
                                 0.5 * (right - left)});
          g.wide = true;
        }
      }
      if (!g.wide)
        for (int i = 0; i < o.period; ++i)
          r.intervals.push_back({o.points[i], g.scale * g.base_radii[i]});
      part.regions.push_back(std::move(r));
    }

    // sampled verification of the separation invariants
    double eta = std::numeric_limits<double>::infinity();
    bool ok = true;
    std::size_t shrink_target = geo.size();

    for (int s = 0; s < kVerifyGrid && ok; ++s) {
      const double x = -pi + (s + 0.5) * (two_pi / kVerifyGrid);
      const double fx = eval(map, x);
      const std::size_t rx = part.region_of(x);

      // (i): nothing outside an unstable region maps within eta of it
      for (std::size_t rr = 0; rr < part.transient_index; ++rr) {
        if (rx == rr) continue;
        double d = std::numeric_limits<double>::infinity();
        for (const auto& iv : part.regions[rr].intervals)
          d = std::min(d, iv.distance(fx));
        if (d <= 0.0) {
          ok = false;
          for (std::size_t gidx = 0; gidx < geo.size(); ++gidx)
            if (!geo[gidx].stable && part.regions[rr].orbit == geo[gidx].orbit_index)
              shrink_target = gidx;
          fail_note = "invariant (i) fails at x=" + std::to_string(x);
          break;
        }
        eta = std::min(eta, d);
      }
      if (!ok) break;

      // (ii): stable regions map into the next interval of their cycle
      if (rx > part.transient_index) {
        const auto& reg = part.regions[rx];
        const auto& o = orbits[*reg.orbit];
        std::size_t gidx = 0;
        for (std::size_t gg = 0; gg < geo.size(); ++gg)
          if (geo[gg].orbit_index == *reg.orbit) gidx = gg;
        // locate which interval of the region x sits in
        std::size_t which = 0;
        for (std::size_t i = 0; i < reg.intervals.size(); ++i)
          if (reg.intervals[i].contains(x)) which = i;
        const auto& target = reg.intervals[(which + 1) % reg.intervals.size()];
        const double margin = target.radius - circle_distance(fx, target.center);
        if (margin <= 0.0) {
          ok = false;
          shrink_target = gidx;
          fail_note = "invariant (ii) fails at x=" + std::to_string(x) +
                      " (orbit period " + std::to_string(o.period) + ")";
          break;
        }
        eta = std::min(eta, margin);
      }
    }

    if (ok) {
      // (iii): every sampled transient point settles into a stable region
      auto in_stable = [&](double x) {
        std::size_t r = part.region_of(x);
        return r > part.transient_index;
      };
      int N = 0;
      std::vector<double> transients;
      for (int s = 0; s < kVerifyGrid; ++s) {
        const double x = -pi + (s + 0.5) * (two_pi / kVerifyGrid);
        if (part.region_of(x) == part.transient_index) transients.push_back(x);
      }
      bool settled = true;
      double bad_sample = 0.0;
      std::vector<int> entry(transients.size(), -1);
      for (std::size_t t = 0; t < transients.size(); ++t) {
        double x = transients[t];
        for (int n = 1; n <= kTransitCap; ++n) {
          x = eval(map, x);
          if (in_stable(x)) {
            entry[t] = n;
            break;
          }
        }
        if (entry[t] < 0) {
          settled = false;
          bad_sample = transients[t];
          break;
        }
        N = std::max(N, entry[t]);
      }
      if (settled) {
        for (std::size_t t = 0; t < transients.size() && settled; ++t) {
          double x = transients[t];
          for (int n = 1; n <= N + 10; ++n) {
            x = eval(map, x);
            if (n >= N && !in_stable(x)) {
              settled = false;
              bad_sample = transients[t];
              break;
            }
          }
        }
      }
      if (!settled)
        throw hypothesis_violation_error(
            "build_partition: sampled transient x=" + std::to_string(bad_sample) +
            " does not settle into a stable region");
      if (transients.empty()) N = 0;
      part.eta = std::isfinite(eta) ? eta : pi;
      part.transit_bound = N;
      return part;
    }

    if (shrink_target < geo.size()) {
      geo[shrink_target].scale *= kShrinkFactor;
    } else {
      for (auto& g : geo) g.scale *= kShrinkFactor;
    }
  }

  throw hypothesis_violation_error("build_partition: invariants still failing after " +
                                   std::to_string(kMaxShrinks) + " shrinks; " + fail_note);
}

}  // namespace circlespec
