#ifndef CIRCLESPEC_ASYMPTOTICS_HPP
#define CIRCLESPEC_ASYMPTOTICS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "circlespec/orbits.hpp"
#include "circlespec/transition_operator.hpp"

namespace circlespec {

enum class OrbitClass { stable, unstable };

/// A zero-noise limiting eigenvalue generated by a periodic orbit.
/// Stable orbits of period p with multiplier c contribute all p branches
/// of (c^j)^{1/p}; unstable orbits of period q contribute all q branches
/// of (|c|^{-1} c^{-j})^{1/q}.
struct PredictedEigenvalue {
  std::complex<double> value;
  std::size_t orbit_id = 0;  // index into the source orbit list
  int j = 0;
  int branch = 0;  // k in [0, p), selecting the p-th root branch
  OrbitClass kind = OrbitClass::stable;
};

/// All predicted limiting eigenvalues with 0 <= j <= j_max, deduplicated
/// (1e-12) and sorted by descending modulus.
std::vector<PredictedEigenvalue> predicted_spectrum(
    const std::vector<PeriodicOrbit>& orbits, int j_max);

/// Local Gaussian scale seen from orbit point base_index: the one-cycle
/// accumulated noise variance s^2 feeds alpha = sqrt((1 - c^2)/(2 s^2)) for
/// stable orbits and beta = sqrt((c^2 - 1)/(2 s^2)) for unstable ones,
/// with c the full cycle multiplier.
double local_scale(const PeriodicOrbit& orbit, const NoiseSpec& noise,
                   int base_index);

/// A sampled Hermite eigenmode mixture sum_j a_j h_n(scale_j (x - x_j)/eps).
struct HermiteMode {
  int order = 0;
  std::vector<double> centers;
  std::vector<double> scales;
  std::vector<std::complex<double>> weights;
  enum class Side { density, function } side = Side::density;
  double epsilon = 0.0;
  std::vector<std::complex<double>> samples;  // on the supplied grid
};

/// Sample the order-n eigenmode of the given orbit for root branch
/// `branch`. Stable orbits produce density-side modes (L1-normalized);
/// unstable orbits produce function-side modes (sup-normalized). With
/// n = 0 and branch = 0 the result is the predicted invariant density.
HermiteMode predicted_mode(const PeriodicOrbit& orbit, const NoiseSpec& noise,
                           int n, int branch, double epsilon,
                           std::span<const double> grid_nodes);

/// Independent oracle: the transition operator of the scalar AR(1) chain
/// Y' = c Y + sigma chi truncated to [-L, L]. Its spectrum is known in
/// closed form: c^n for |c| < 1 and |c|^{-1} c^{-n} for |c| > 1.
DiscretizedOperator build_local_ar_operator(double c, double sigma, double L,
                                            int n_grid);

}  // namespace circlespec

#endif
