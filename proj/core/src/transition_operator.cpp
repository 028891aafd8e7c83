#include "circlespec/transition_operator.hpp"

#include <algorithm>
#include <cmath>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"

namespace circlespec {

Grid Grid::circle(int n) {
  Grid g;
  g.lo = -pi;
  g.hi = pi;
  g.n = n;
  g.h = two_pi / n;
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i) g.nodes[i] = -pi + (i + 0.5) * g.h;
  return g;
}

Grid Grid::segment(double L, int n) {
  Grid g;
  g.lo = -L;
  g.hi = L;
  g.n = n;
  g.h = 2.0 * L / n;
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i) g.nodes[i] = -L + (i + 0.5) * g.h;
  return g;
}

double wrapped_kernel(const CircleMapSpec& map, const NoiseSpec& noise,
                      double epsilon, double x, double y) {
  if (!(epsilon > 0.0)) throw std::domain_error("wrapped_kernel: epsilon must be positive");
  const double sx = noise(x);
  const double sd = epsilon * sx;
  const double mu = eval(map, x);          // reduced image
  const double delta = reduce_angle(y) - mu;  // in (-2 pi, 2 pi)

  const double reach = 8.0 * epsilon * noise.sigma_ub;
  int n_lo = static_cast<int>(std::floor((-reach - delta) / two_pi));
  int n_hi = static_cast<int>(std::ceil((reach - delta) / two_pi));
  n_lo = std::min(n_lo, -1);
  n_hi = std::max(n_hi, 1);

  const double norm = 1.0 / (std::sqrt(two_pi) * sd);
  double sum = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double d = delta + two_pi * n;
    sum += std::exp(-d * d / (2.0 * sd * sd));
  }
  return norm * sum;
}

DiscretizedOperator assemble(const CircleMapSpec& map, const NoiseSpec& noise,
                             double epsilon, int n_grid) {
  if (!(epsilon > 0.0)) throw std::domain_error("assemble: epsilon must be positive");
  if (n_grid < 64) throw std::domain_error("assemble: n_grid must be >= 64");

  DiscretizedOperator op;
  op.grid = Grid::circle(n_grid);
  op.epsilon = epsilon;
  op.kind = KernelKind::wrapped_circle;
  op.under_resolved = op.grid.h > epsilon * noise.sigma_lb / 4.0;
  op.matrix.resize(n_grid, n_grid);

  const double reach = 8.0 * epsilon * noise.sigma_ub;
  for (int i = 0; i < n_grid; ++i) {
    const double x = op.grid.nodes[i];
    const double sd = epsilon * noise(x);
    const double mu = eval(map, x);
    const double norm = op.grid.h / (std::sqrt(two_pi) * sd);
    for (int j = 0; j < n_grid; ++j) {
      const double delta = op.grid.nodes[j] - mu;
      int n_lo = static_cast<int>(std::floor((-reach - delta) / two_pi));
      int n_hi = static_cast<int>(std::ceil((reach - delta) / two_pi));
      n_lo = std::min(n_lo, -1);
      n_hi = std::max(n_hi, 1);
      double sum = 0.0;
      for (int n = n_lo; n <= n_hi; ++n) {
        const double d = delta + two_pi * n;
        sum += std::exp(-d * d / (2.0 * sd * sd));
      }
      op.matrix(i, j) = norm * sum;
    }
  }
  return op;
}

}  // namespace circlespec
