#include "fracseq/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracseq {

namespace {

// Cauchy-test parameters for the unbounded-tail flag: the absolute partial
// sums must move by no more than kCauchyTol across the last kCauchyWindow
// terms, otherwise the series is declared non-summable at this truncation.
constexpr std::size_t kCauchyWindow = 16;
constexpr double kCauchyTol = 1e-9;

// Number of trailing term ratios averaged for the geometric tail estimate.
constexpr std::size_t kRatioWindow = 8;

}  // namespace

CoeffSeries frac_coeffs_unchecked(double order, std::size_t n) {
  if (n == 0) throw std::invalid_argument("coefficient count must be at least 1");
  CoeffSeries s;
  s.order = order;
  s.terms.resize(n);
  // c_0 = 1, c_i = c_{i-1} * (i - 1 - order) / i.  The recurrence never
  // evaluates a Gamma function, so it is defined for every real order.
  s.terms[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double di = static_cast<double>(i);
    s.terms[i] = s.terms[i - 1] * ((di - 1.0 - order) / di);
  }
  return s;
}

CoeffSeries frac_coeffs(const FracOrder& order, std::size_t n) {
  return frac_coeffs_unchecked(order.value(), n);
}

std::vector<double> convolve(const CoeffSeries& a, const CoeffSeries& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("convolve: prefixes must have equal length");
  const std::size_t n = a.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= k; ++i) acc += a.terms[i] * b.terms[k - i];
    out[k] = acc;
  }
  return out;
}

TailBound tail_sum_bound(const CoeffSeries& s) {
  TailBound r;
  const std::size_t n = s.size();
  std::vector<double> partial(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::fabs(s.terms[i]);
    partial[i] = acc;
  }
  r.prefix = acc;

  // A trailing term of exactly zero means the recurrence terminated (integer
  // order): every later term is zero too, so the tail is exactly zero and
  // the heuristics below do not apply.
  const double last = std::fabs(s.terms[n - 1]);
  if (last == 0.0) {
    r.tail_estimate = 0.0;
    r.unbounded_tail = false;
  } else {
    // Cauchy test on the absolute partial sums.
    const std::size_t w = std::min(kCauchyWindow, n - 1);
    r.unbounded_tail = n > 1 && (partial[n - 1] - partial[n - 1 - w]) > kCauchyTol;

    // Geometric extrapolation from the trailing term ratios; a ratio at or
    // above one means the extrapolation carries no information and the tail
    // is unbounded.
    std::size_t ratios = std::min(kRatioWindow, n - 1);
    if (ratios == 0) {
      r.tail_estimate = std::numeric_limits<double>::infinity();
    } else {
      double sum = 0.0;
      for (std::size_t i = n - ratios; i < n; ++i)
        sum += std::fabs(s.terms[i]) / std::fabs(s.terms[i - 1]);
      const double ratio = sum / static_cast<double>(ratios);
      r.tail_estimate = ratio < 1.0 ? last * ratio / (1.0 - ratio)
                                    : std::numeric_limits<double>::infinity();
    }
  }
  r.total = r.prefix + r.tail_estimate;
  return r;
}

}  // namespace fracseq
