#ifndef CIRCLESPEC_HERMITE_HPP
#define CIRCLESPEC_HERMITE_HPP

namespace circlespec {

/// Physicists' Hermite polynomial H_n(x) via the recurrence
/// H_{n+1} = 2 x H_n - 2 n H_{n-1}, or the Hermite function
/// h_n(x) = exp(-x^2) H_n(x) when weighted. The unweighted polynomial is
/// limited to n <= 50 as an overflow guard.
double hermite(int n, double x, bool weighted);

}  // namespace circlespec

#endif
