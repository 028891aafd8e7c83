#include "circlespec/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace circlespec {

double hermite(int n, double x, bool weighted) {
  if (n < 0) throw std::out_of_range("hermite: order must be nonnegative");
  if (!weighted && n > 50)
    throw std::out_of_range("hermite: unweighted order limited to n <= 50");

  // the weight exp(-x^2) commutes with the recurrence, so seeding with it
  // gives h_n directly and avoids overflowing the bare polynomial
  double p0 = weighted ? std::exp(-x * x) : 1.0;
  if (n == 0) return p0;
  double p1 = 2.0 * x * p0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * p1 - 2.0 * k * p0;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

}  // namespace circlespec
