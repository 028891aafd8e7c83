#ifndef CIRCLESPEC_SPECTRUM_HPP
#define CIRCLESPEC_SPECTRUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "circlespec/orbits.hpp"
#include "circlespec/transition_operator.hpp"

namespace circlespec {

enum class EigenvectorSide { left, right };

/// Top-of-spectrum summary of a discretized operator. Eigenvalues are
/// sorted by descending modulus; vectors and residuals are filled only
/// when requested.
struct SpectrumResult {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<Eigen::VectorXcd> right_vectors;
  std::vector<Eigen::VectorXcd> left_vectors;
  std::vector<double> residuals;  // ||A v - lambda v||_inf / ||v||_inf per pair
};

/// Dense eigensolve (Hessenberg reduction + real Schur form) returning the
/// top_k eigenvalues by modulus. With with_vectors, left/right eigenvectors
/// are computed per eigenvalue by shifted inverse iteration and residuals
/// are recorded.
SpectrumResult spectrum(const DiscretizedOperator& op, int top_k,
                        bool with_vectors = false);

/// Shifted inverse iteration for the eigenvector at lam (within 1e-6 of an
/// eigenvalue). Iterates until the residual drops below 1e-8 or 200
/// iterations, then fails with a numerical error on a stall.
Eigen::VectorXcd eigenvector(const DiscretizedOperator& op,
                             std::complex<double> lam, EigenvectorSide side);

/// Stationary density of a circle-kind operator: the left eigenvector at
/// lambda = 1 divided by the grid weight h and normalized to integrate to
/// one under the midpoint rule. Entries in [-1e-10, 0) are clipped to 0.
std::vector<double> invariant_density(const DiscretizedOperator& op);

/// Same, reusing an already computed spectrum (used to check that the
/// eigenvalue 1 is simple).
std::vector<double> invariant_density(const DiscretizedOperator& op,
                                      const SpectrumResult& spec);

/// Discrete sup-norm of each partition block: entry (i, j) is the largest
/// one-step probability of moving from region i into region j over the
/// grid nodes of region i.
Eigen::MatrixXd block_norms(const DiscretizedOperator& op,
                            const PhasePartition& partition);

}  // namespace circlespec

#endif
