#include "circlespec/simulate.hpp"

#include <cmath>
#include <random>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"

namespace circlespec {

TrajectoryStats simulate_chain(const CircleMapSpec& map, const NoiseSpec& noise,
                               double epsilon, double x0, std::uint64_t steps,
                               std::uint64_t burn_in, int bins, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw std::domain_error("simulate_chain: epsilon must be positive");
  if (bins < 16) throw config_error("simulate_chain: bins must be >= 16");
  if (!(steps > burn_in)) throw config_error("simulate_chain: steps must exceed burn_in");

  TrajectoryStats stats;
  stats.steps = steps;
  stats.burn_in = burn_in;
  stats.seed = seed;
  stats.counts.assign(bins, 0);
  stats.bin_edges.resize(bins + 1);
  const double h = two_pi / bins;
  for (int i = 0; i <= bins; ++i) stats.bin_edges[i] = -pi + i * h;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  double x = reduce_angle(x0);
  for (std::uint64_t n = 0; n < steps; ++n) {
    x = reduce_angle(lift(map, x) + epsilon * noise(x) * normal(rng));
    if (n < burn_in) continue;
    int idx = static_cast<int>((x + pi) / h);
    if (idx < 0) idx = 0;
    if (idx >= bins) idx = bins - 1;
    ++stats.counts[idx];
  }
  return stats;
}

double compare_density(const TrajectoryStats& stats, std::span<const double> density) {
  const int bins = static_cast<int>(stats.counts.size());
  if (static_cast<int>(density.size()) != bins)
    throw contract_error("compare_density: density grid does not match histogram bins");
  const double h = two_pi / bins;

  std::uint64_t total = 0;
  for (auto c : stats.counts) total += c;
  if (total == 0) throw contract_error("compare_density: empty histogram");

  double l1 = 0.0;
  for (int i = 0; i < bins; ++i) {
    const double phat = static_cast<double>(stats.counts[i]) / static_cast<double>(total);
    const double p = density[i] * h;
    l1 += std::abs(phat - p);
  }
  return l1;
}

}  // namespace circlespec
