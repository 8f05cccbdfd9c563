#pragma once

#include <cmath>
#include <cstddef>

// Test-side oracle for the coefficient series, independent of the library's
// recurrence: c_i(alpha) = (-1)^i * Gamma(alpha+1) / (i! * Gamma(alpha-i+1)),
// evaluated through lgamma with the reflection sign rule.  Only valid away
// from poles of the two Gamma factors.
namespace oracle {

inline double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  // Gamma alternates sign on the negative unit intervals: negative on
  // (-1,0), positive on (-2,-1), ...
  const double f = std::floor(x);
  return std::fmod(f, 2.0) == 0.0 ? 1.0 : -1.0;
}

inline bool gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

inline double coeff(double alpha, std::size_t i) {
  const double top = alpha + 1.0;
  const double bottom = alpha - static_cast<double>(i) + 1.0;
  if (gamma_pole(bottom)) return 0.0;  // terminated series (integer order)
  const double mag = std::exp(std::lgamma(top) - std::lgamma(static_cast<double>(i) + 1.0) -
                              std::lgamma(bottom));
  const double sign = (i % 2 == 0 ? 1.0 : -1.0) * gamma_sign(top) / gamma_sign(bottom);
  return sign * mag;
}

}  // namespace oracle
