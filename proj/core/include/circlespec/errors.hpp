#ifndef CIRCLESPEC_ERRORS_HPP
#define CIRCLESPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circlespec {

/// Unknown family/profile identifier or invalid parameter set.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Orbit passed to an operation does not close up.
struct invalid_orbit_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An orbit sits on the neutral band |c| = 1; the asymptotic machinery
/// excludes this case.
struct bifurcation_point_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Caller broke an interface contract (misaligned grids, unsorted input).
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Sampled verification contradicts the convergence hypotheses of the
/// underlying theory (e.g. a trajectory that never settles).
struct hypothesis_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed to converge; carries the iteration count
/// when one is meaningful.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what, int iterations_ = -1)
      : std::runtime_error(what), iterations(iterations_) {}
  int iterations;
};

/// An eigenvalue expected to be simple is degenerate within tolerance.
struct degeneracy_error : numerical_error {
  using numerical_error::numerical_error;
};

/// Output file could not be opened or written.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace circlespec

#endif
