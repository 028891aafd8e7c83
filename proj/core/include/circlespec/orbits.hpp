#ifndef CIRCLESPEC_ORBITS_HPP
#define CIRCLESPEC_ORBITS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circlespec/maps.hpp"

namespace circlespec {

enum class Stability { stable, unstable, neutral };

/// Half-width of the neutral band around |c| = 1 used for stability
/// classification.
inline constexpr double kNeutralBand = 1e-6;

/// A periodic orbit of the deterministic map. points[0] is the smallest
/// point of the orbit and f(points[i]) ~ points[(i+1) % period].
struct PeriodicOrbit {
  std::vector<double> points;
  std::vector<double> point_derivs;  // f'(points[i])
  int period = 1;
  double multiplier = 0.0;  // (f^p)'(points[0]) = product of point_derivs
  Stability stability = Stability::neutral;
  double residual = 0.0;  // max_i d(f(points[i]), points[i+1 mod p])
};

/// Locate all periodic orbits of minimal period <= p_max by scanning
/// lift(f^p)(x) - x - 2*pi*m for sign changes over scan_n uniform samples
/// and every plausible winding offset m, refining each root by bisection
/// and a Newton polish. Orbits are deduplicated up to rotation and sorted
/// by period, then by smallest point. Non-convergent candidates are
/// dropped; a note per drop is appended to *diagnostics when given.
std::vector<PeriodicOrbit> find_periodic_orbits(
    const CircleMapSpec& map, int p_max, int scan_n,
    std::vector<std::string>* diagnostics = nullptr);

/// Product of f' over the given closed orbit (residual <= 1e-6 required).
/// Identical for every cyclic rotation of the points.
double orbit_multiplier(const CircleMapSpec& map, std::span<const double> points);

/// Closed interval on the circle, |x - center| <= radius in the quotient
/// metric.
struct CircleInterval {
  double center = 0.0;
  double radius = 0.0;
  bool contains(double x) const;
  /// Quotient-metric distance from x to the interval (0 when inside).
  double distance(double x) const;
};

struct PartitionRegion {
  std::string label;
  std::vector<CircleInterval> intervals;      // empty for the transient region
  std::optional<std::size_t> orbit;           // index into the source orbit list
  bool transient() const { return !orbit.has_value(); }
};

/// Decomposition of the circle into neighborhoods of the periodic orbits
/// plus a transient remainder. Regions are ordered unstable orbits first,
/// then the transient region, then stable orbits, which makes the
/// transition structure of the discretized operator nearly block upper
/// triangular.
struct PhasePartition {
  std::vector<PartitionRegion> regions;
  double eta = 0.0;       // verified separation margin
  int transit_bound = 0;  // N: steps after which sampled transients have settled
  std::size_t transient_index = 0;

  std::size_t region_of(double x) const;
};

/// Build a verified phase partition for the given orbits. Neighborhood
/// radii are adapted per orbit point and shrunk geometrically until the
/// separation invariants hold on a verification grid of >= 4096 samples.
PhasePartition build_partition(const CircleMapSpec& map,
                               const std::vector<PeriodicOrbit>& orbits);

}  // namespace circlespec

#endif
