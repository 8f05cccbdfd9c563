#include "fracseq/fracop.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracseq {

void require_seq(const Seq& x, const char* what) {
  if (x.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
  for (double v : x)
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(what) + " has a non-finite entry");
}

namespace {

Seq apply_coeffs(const std::vector<double>& c, const Seq& x) {
  const std::size_t n = x.size();
  Seq y(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= k; ++i) acc += c[i] * x[k - i];
    y[k] = acc;
  }
  return y;
}

}  // namespace

Seq apply_forward(const FracOrder& order, const Seq& x) {
  require_seq(x);
  return apply_coeffs(frac_coeffs(order, x.size()).terms, x);
}

Seq apply_inverse(const FracOrder& order, const Seq& y) {
  require_seq(y);
  // The negated order may sit on a pole (positive-integer order); the raw
  // recurrence still produces the correct inverse triangle there.
  return apply_coeffs(frac_coeffs_unchecked(-order.value(), y.size()).terms, y);
}

Seq TriMatrix::apply(const Seq& x) const {
  if (x.size() != size_)
    throw std::invalid_argument("matrix apply: length mismatch");
  Seq y(size_, 0.0);
  for (std::size_t n = 0; n < size_; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) acc += at(n, k) * x[k];
    y[n] = acc;
  }
  return y;
}

TriMatrix operator_matrix(const FracOrder& order, std::size_t size) {
  if (size == 0) throw std::invalid_argument("matrix size must be at least 1");
  const CoeffSeries c = frac_coeffs(order, size);
  TriMatrix t(size);
  for (std::size_t n = 0; n < size; ++n)
    for (std::size_t k = 0; k <= n; ++k) t.ref(n, k) = c.terms[n - k];
  return t;
}

}  // namespace fracseq
