#pragma once

#include <cstddef>
#include <vector>

#include "fracseq/frac_order.hpp"

namespace fracseq {

/// Default number of series terms when a caller does not say otherwise.
inline constexpr std::size_t kDefaultSeriesLength = 128;

/// Prefix of the coefficient series c_i(alpha) of the fractional difference
/// operator: c_0 = 1, c_i = c_{i-1} * (i - 1 - alpha) / i.
struct CoeffSeries {
  double order = 0.0;
  std::vector<double> terms;

  std::size_t size() const noexcept { return terms.size(); }
  double operator[](std::size_t i) const { return terms[i]; }
};

CoeffSeries frac_coeffs(const FracOrder& order, std::size_t n = kDefaultSeriesLength);

/// Same recurrence on a raw order.  The recurrence is a polynomial in the
/// order, so it stays well defined even where the Gamma quotient has a pole
/// (needed when negating a positive-integer order for the inverse operator).
CoeffSeries frac_coeffs_unchecked(double order, std::size_t n);

/// Truncated Cauchy product of two equal-length coefficient prefixes.
std::vector<double> convolve(const CoeffSeries& a, const CoeffSeries& b);

/// Absolute-sum diagnostic for a coefficient prefix.
struct TailBound {
  double total = 0.0;          // prefix sum plus the tail estimate
  double prefix = 0.0;         // sum of |c_i| over the computed terms
  double tail_estimate = 0.0;  // geometric extrapolation from the last terms
  bool unbounded_tail = false; // absolute partial sums failed the Cauchy test
};

TailBound tail_sum_bound(const CoeffSeries& s);

}  // namespace fracseq
