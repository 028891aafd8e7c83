#include "circlespec/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "circlespec/errors.hpp"

namespace circlespec {

namespace {

constexpr double kInverseIterTol = 1e-8;
constexpr int kInverseIterMax = 200;

double inf_norm(const Eigen::VectorXcd& v) {
  return v.cwiseAbs().maxCoeff();
}

/// Residual ||A v - lambda v||_inf / ||v||_inf.
double pair_residual(const Eigen::MatrixXd& A, std::complex<double> lam,
                     const Eigen::VectorXcd& v) {
  Eigen::VectorXcd r = A * v - lam * v;
  return inf_norm(r) / inf_norm(v);
}

Eigen::VectorXcd inverse_iterate(const Eigen::MatrixXd& A, std::complex<double> lam) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXcd shifted = A.cast<std::complex<double>>();
  shifted.diagonal().array() -= lam;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
  // an exactly singular factorization cannot be solved against; nudge the shift
  if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0) {
    shifted.diagonal().array() -= std::complex<double>(1e-10, 0.0);
    lu.compute(shifted);
  }

  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n) / std::sqrt(double(n));
  double res = pair_residual(A, lam, v);
  for (int it = 0; it < kInverseIterMax && res > kInverseIterTol; ++it) {
    Eigen::VectorXcd w = lu.solve(v);
    const double nw = w.norm();
    if (!(nw > 0.0) || !std::isfinite(nw)) {
      // solve degenerated; restart from a perturbed shift
      shifted.diagonal().array() -= std::complex<double>(1e-10, 1e-10);
      lu.compute(shifted);
      w = Eigen::VectorXcd::Ones(n);
    }
    v = w / w.norm();
    res = pair_residual(A, lam, v);
  }
  if (res > kInverseIterTol)
    throw numerical_error("inverse iteration stalled at residual " +
                              std::to_string(res), kInverseIterMax);
  return v;
}

std::vector<std::complex<double>> all_eigenvalues(const Eigen::MatrixXd& A) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw numerical_error("dense eigensolver failed to converge",
                          static_cast<int>(es.info()));
  std::vector<std::complex<double>> ev(A.rows());
  for (Eigen::Index i = 0; i < A.rows(); ++i) ev[i] = es.eigenvalues()[i];
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return ev;
}

}  // namespace

SpectrumResult spectrum(const DiscretizedOperator& op, int top_k, bool with_vectors) {
  if (top_k < 1) throw config_error("spectrum: top_k must be >= 1");
  auto ev = all_eigenvalues(op.matrix);
  const std::size_t k = std::min<std::size_t>(top_k, ev.size());

  SpectrumResult out;
  out.eigenvalues.assign(ev.begin(), ev.begin() + k);
  if (with_vectors) {
    out.right_vectors.reserve(k);
    out.left_vectors.reserve(k);
    out.residuals.reserve(k);
    const Eigen::MatrixXd At = op.matrix.transpose();
    for (auto lam : out.eigenvalues) {
      out.right_vectors.push_back(inverse_iterate(op.matrix, lam));
      out.left_vectors.push_back(inverse_iterate(At, lam));
      out.residuals.push_back(pair_residual(op.matrix, lam, out.right_vectors.back()));
    }
  }
  return out;
}

Eigen::VectorXcd eigenvector(const DiscretizedOperator& op, std::complex<double> lam,
                             EigenvectorSide side) {
  if (side == EigenvectorSide::right) return inverse_iterate(op.matrix, lam);
  return inverse_iterate(op.matrix.transpose(), lam);
}

std::vector<double> invariant_density(const DiscretizedOperator& op) {
  // a handful of top eigenvalues is enough to detect a degenerate lambda=1
  return invariant_density(op, spectrum(op, 8));
}

std::vector<double> invariant_density(const DiscretizedOperator& op,
                                      const SpectrumResult& spec) {
  if (op.kind != KernelKind::wrapped_circle)
    throw config_error("invariant_density: circle-kind operator required");
  int near_one = 0;
  for (auto lam : spec.eigenvalues)
    if (std::abs(lam - 1.0) <= 1e-6) ++near_one;
  if (near_one != 1)
    throw degeneracy_error("invariant_density: eigenvalue 1 is not simple within 1e-6 (" +
                           std::to_string(near_one) + " candidates)");

  Eigen::VectorXcd w = inverse_iterate(op.matrix.transpose(), std::complex<double>(1.0, 0.0));
  Eigen::VectorXd re = w.real();
  if (re.sum() < 0.0) re = -re;

  std::vector<double> density(op.grid.n);
  for (int i = 0; i < op.grid.n; ++i) {
    double v = re[i];
    if (v < 0.0) {
      if (v < -1e-10)
        throw numerical_error("invariant_density: negative component beyond clip band");
      v = 0.0;
    }
    density[i] = v / op.grid.h;
  }
  double mass = 0.0;
  for (double d : density) mass += d * op.grid.h;
  for (double& d : density) d /= mass;
  return density;
}

Eigen::MatrixXd block_norms(const DiscretizedOperator& op, const PhasePartition& partition) {
  const std::size_t R = partition.regions.size();
  std::vector<std::vector<int>> members(R);
  for (int i = 0; i < op.grid.n; ++i)
    members[partition.region_of(op.grid.nodes[i])].push_back(i);

  Eigen::MatrixXd norms = Eigen::MatrixXd::Zero(R, R);
  for (std::size_t a = 0; a < R; ++a) {
    for (int i : members[a]) {
      for (std::size_t b = 0; b < R; ++b) {
        double mass = 0.0;
        for (int j : members[b]) mass += op.matrix(i, j);
        norms(a, b) = std::max(norms(a, b), mass);
      }
    }
  }
  return norms;
}

}  // namespace circlespec
