#ifndef CIRCLESPEC_TRANSITION_OPERATOR_HPP
#define CIRCLESPEC_TRANSITION_OPERATOR_HPP

#include <Eigen/Dense>
#include <vector>

#include "circlespec/maps.hpp"

namespace circlespec {

enum class KernelKind { wrapped_circle, line_truncated };

/// Midpoint-rule quadrature grid on [lo, hi): nodes[i] = lo + (i + 1/2) h.
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
  double h = 0.0;
  std::vector<double> nodes;

  static Grid circle(int n);
  static Grid segment(double L, int n);
};

/// Nystrom discretization of a Markov transition operator: entry (i, j)
/// is h * kernel(x_i, x_j), so row i holds the outgoing transition
/// probabilities from node i. Circle-kind rows sum to 1; line-kind rows
/// may lose mass through the truncated ends.
struct DiscretizedOperator {
  Grid grid;
  Eigen::MatrixXd matrix;
  double epsilon = 0.0;
  KernelKind kind = KernelKind::wrapped_circle;
  bool under_resolved = false;  // grid spacing exceeds eps*sigma_lb/4
};

/// Wrapped Gaussian transition density on the circle,
///   sum_n (2 pi)^{-1/2} (eps sigma(x))^{-1} exp(-(y + 2 pi n - f(x))^2 /
///                                              (2 sigma(x)^2 eps^2)),
/// summed over all n with |y + 2 pi n - f(x)| <= 8 eps sigma_ub and always
/// n in {-1, 0, 1}.
double wrapped_kernel(const CircleMapSpec& map, const NoiseSpec& noise,
                      double epsilon, double x, double y);

/// Assemble the circle operator on a uniform midpoint grid of n_grid
/// nodes. Sets under_resolved when h > eps*sigma_lb/4.
DiscretizedOperator assemble(const CircleMapSpec& map, const NoiseSpec& noise,
                             double epsilon, int n_grid);

}  // namespace circlespec

#endif
