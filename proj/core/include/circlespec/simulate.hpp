#ifndef CIRCLESPEC_SIMULATE_HPP
#define CIRCLESPEC_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "circlespec/maps.hpp"

namespace circlespec {

/// Histogram of a simulated trajectory of the perturbed chain
/// X' = f(X) + eps sigma(X) chi (mod 2 pi), over bins aligned with the
/// midpoint quadrature grid on [-pi, pi).
struct TrajectoryStats {
  std::vector<double> bin_edges;        // bins + 1 edges
  std::vector<std::uint64_t> counts;    // sums to steps - burn_in
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t seed = 0;
};

/// Iterate the chain from x0 with independent standard normal draws from a
/// seeded deterministic generator (one stream per run), histogramming the
/// post-burn-in states.
TrajectoryStats simulate_chain(const CircleMapSpec& map, const NoiseSpec& noise,
                               double epsilon, double x0, std::uint64_t steps,
                               std::uint64_t burn_in, int bins, std::uint64_t seed);

/// L1 distance between the normalized histogram and the bin-integrated
/// density (sampled on the matching midpoint grid); lies in [0, 2].
double compare_density(const TrajectoryStats& stats, std::span<const double> density);

}  // namespace circlespec

#endif
