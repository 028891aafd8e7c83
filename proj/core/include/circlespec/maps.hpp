#ifndef CIRCLESPEC_MAPS_HPP
#define CIRCLESPEC_MAPS_HPP

#include <functional>
#include <map>
#include <string>

namespace circlespec {

using ParamMap = std::map<std::string, double>;

/// A member of a registered circle map family. Angles live in [-pi, pi);
/// the family's lift is a degree-one map of the real line.
struct CircleMapSpec {
  std::string family;
  ParamMap params;

  static CircleMapSpec sine_circle(double b);
};

/// Noise amplitude profile sigma with positive bounds:
/// 0 < sigma_lb <= sigma(x) <= sigma_ub on the circle.
struct NoiseSpec {
  std::string profile;
  ParamMap params;
  double sigma_lb = 1.0;
  double sigma_ub = 1.0;

  /// Constant profile sigma(x) = value (the default profile is 1.0).
  static NoiseSpec constant(double value = 1.0);
  /// Smooth profile sigma(x) = base + amp*cos(x), requires base > |amp|.
  static NoiseSpec cosine(double base, double amp);

  double operator()(double x) const;
};

/// A map family: lift, derivative, and parameter validation. User-defined
/// families register under an identifier and are evaluated through the
/// same interface as the built-ins.
struct MapFamily {
  std::function<double(double x, const ParamMap&)> lift;
  std::function<double(double x, const ParamMap&)> deriv;
  std::function<void(const ParamMap&)> validate;  // throws config_error
};

/// Register a family under `name` (replaces any previous registration).
/// Not thread-safe against concurrent evaluation; register at startup.
void register_family(const std::string& name, MapFamily family);

/// Unreduced lift value f(x); satisfies lift(x + 2*pi) = lift(x) + 2*pi.
double lift(const CircleMapSpec& map, double x);

/// f(x) reduced to [-pi, pi).
double eval(const CircleMapSpec& map, double x);

/// f'(x).
double deriv(const CircleMapSpec& map, double x);

struct IterateResult {
  double point;       // f^p(x) reduced to [-pi, pi)
  double derivative;  // (f^p)'(x), product of f' along the trajectory
};

/// p-th iterate together with its derivative via the chain rule; p = 0
/// returns (x reduced, 1).
IterateResult iterate(const CircleMapSpec& map, double x, int p);

}  // namespace circlespec

#endif
