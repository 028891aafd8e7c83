#include "circlespec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"
#include "circlespec/hermite.hpp"

namespace circlespec {

namespace {

void require_not_neutral(const PeriodicOrbit& o, const char* who) {
  if (o.stability == Stability::neutral)
    throw bifurcation_point_error(std::string(who) +
                                  ": orbit multiplier on the neutral band |c| = 1");
}

}  // namespace

std::vector<PredictedEigenvalue> predicted_spectrum(
    const std::vector<PeriodicOrbit>& orbits, int j_max) {
  if (j_max < 0) throw config_error("predicted_spectrum: j_max must be >= 0");
  for (const auto& o : orbits) require_not_neutral(o, "predicted_spectrum");

  std::vector<PredictedEigenvalue> out;
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    const auto& o = orbits[id];
    const int p = o.period;
    const double c = o.multiplier;
    for (int j = 0; j <= j_max; ++j) {
      double modulus;          // |target|^{1/p}
      bool negative;           // sign of the real target c^j or c^{-j}
      if (o.stability == Stability::stable) {
        modulus = std::pow(std::abs(c), double(j) / p);
        negative = (c < 0.0) && (j % 2 == 1);
      } else {
        modulus = std::pow(std::abs(c), -double(j + 1) / p);
        negative = (c < 0.0) && (j % 2 == 1);
      }
      const double arg0 = negative ? pi : 0.0;
      for (int k = 0; k < p; ++k) {
        PredictedEigenvalue pe;
        pe.value = std::polar(modulus, (arg0 + two_pi * k) / p);
        pe.orbit_id = id;
        pe.j = j;
        pe.branch = k;
        pe.kind = (o.stability == Stability::stable) ? OrbitClass::stable
                                                     : OrbitClass::unstable;
        bool duplicate = false;
        for (const auto& q : out)
          if (std::abs(q.value - pe.value) <= 1e-12) {
            duplicate = true;
            break;
          }
        if (!duplicate) out.push_back(pe);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PredictedEigenvalue& a,
                                       const PredictedEigenvalue& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return out;
}

double local_scale(const PeriodicOrbit& orbit, const NoiseSpec& noise, int base_index) {
  require_not_neutral(orbit, "local_scale");
  const int p = orbit.period;
  if (base_index < 0 || base_index >= p)
    throw config_error("local_scale: base_index out of range");

  // accumulated one-cycle noise variance seen from x[base]: noise injected
  // at step t is amplified by the derivatives along the remaining steps
  double var = 0.0;
  for (int t = 0; t < p; ++t) {
    double amp = 1.0;
    for (int u = t + 1; u < p; ++u)
      amp *= orbit.point_derivs[(base_index + u) % p];
    const double s = noise(orbit.points[(base_index + t) % p]);
    var += amp * amp * s * s;
  }

  const double c = orbit.multiplier;
  if (orbit.stability == Stability::stable)
    return std::sqrt((1.0 - c * c) / (2.0 * var));
  return std::sqrt((c * c - 1.0) / (2.0 * var));
}

HermiteMode predicted_mode(const PeriodicOrbit& orbit, const NoiseSpec& noise,
                           int n, int branch, double epsilon,
                           std::span<const double> grid_nodes) {
  require_not_neutral(orbit, "predicted_mode");
  if (n < 0) throw config_error("predicted_mode: order must be >= 0");
  if (!(epsilon > 0.0)) throw std::domain_error("predicted_mode: epsilon must be positive");

  const int p = orbit.period;
  const bool stable = orbit.stability == Stability::stable;

  HermiteMode mode;
  mode.order = n;
  mode.side = stable ? HermiteMode::Side::density : HermiteMode::Side::function;
  mode.epsilon = epsilon;
  mode.centers = orbit.points;
  mode.scales.resize(p);
  mode.weights.resize(p);
  for (int i = 0; i < p; ++i) {
    mode.scales[i] = local_scale(orbit, noise, i);
    mode.weights[i] = std::polar(1.0, two_pi * double(i) * branch / p);
    // density-side components carry mass 1/scale each; weighting by the
    // scale equalizes the per-point mass, which is what the cyclic block
    // structure transports
    if (stable) mode.weights[i] *= mode.scales[i];
  }

  mode.samples.resize(grid_nodes.size());
  for (std::size_t g = 0; g < grid_nodes.size(); ++g) {
    std::complex<double> v = 0.0;
    for (int i = 0; i < p; ++i) {
      const double u = mode.scales[i] * reduce_angle(grid_nodes[g] - orbit.points[i]) / epsilon;
      v += mode.weights[i] * hermite(n, u, /*weighted=*/true);
    }
    mode.samples[g] = v;
  }

  if (grid_nodes.size() >= 2) {
    if (stable) {
      // L1 normalization under the midpoint rule (densities are measures)
      const double h = reduce_angle(grid_nodes[1] - grid_nodes[0]);
      double l1 = 0.0;
      for (auto& v : mode.samples) l1 += std::abs(v) * std::abs(h);
      if (l1 > 0.0)
        for (auto& v : mode.samples) v /= l1;
    } else {
      double sup = 0.0;
      for (auto& v : mode.samples) sup = std::max(sup, std::abs(v));
      if (sup > 0.0)
        for (auto& v : mode.samples) v /= sup;
    }
  }
  return mode;
}

DiscretizedOperator build_local_ar_operator(double c, double sigma, double L, int n_grid) {
  if (!(sigma > 0.0)) throw config_error("build_local_ar_operator: sigma must be positive");
  if (n_grid < 2) throw config_error("build_local_ar_operator: n_grid too small");
  if (std::abs(std::abs(c) - 1.0) <= kNeutralBand)
    throw bifurcation_point_error("build_local_ar_operator: |c| on the neutral band");
  if (std::abs(c) < 1.0) {
    const double alpha = std::sqrt((1.0 - c * c) / (2.0 * sigma * sigma));
    if (L < 8.0 / alpha - 1e-12)
      throw config_error("build_local_ar_operator: L must be >= 8/alpha for |c| < 1");
  } else {
    if (L < 8.0 * sigma / (std::abs(c) - 1.0 + 0.1) - 1e-12)
      throw config_error(
          "build_local_ar_operator: L must be >= 8 sigma/(|c| - 1 + 0.1) for |c| > 1");
  }

  DiscretizedOperator op;
  op.grid = Grid::segment(L, n_grid);
  op.epsilon = 1.0;  // the AR chain is the already rescaled limit
  op.kind = KernelKind::line_truncated;
  op.matrix.resize(n_grid, n_grid);
  const double norm = op.grid.h / (std::sqrt(two_pi) * sigma);
  for (int i = 0; i < n_grid; ++i) {
    const double mu = c * op.grid.nodes[i];
    for (int j = 0; j < n_grid; ++j) {
      const double d = op.grid.nodes[j] - mu;
      op.matrix(i, j) = norm * std::exp(-d * d / (2.0 * sigma * sigma));
    }
  }
  return op;
}

}  // namespace circlespec
