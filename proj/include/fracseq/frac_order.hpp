#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace fracseq {

/// Validated fractional order.  Negative integers are rejected: there the
/// Gamma quotient defining the coefficient series has a pole.  Every other
/// finite real is admissible, including positive integers and zero.
class FracOrder {
public:
  explicit FracOrder(double value) : value_(value) {
    if (!std::isfinite(value))
      throw std::domain_error("order must be a finite real");
    if (is_pole(value))
      throw std::domain_error("order " + brief(value) +
                              " is a pole: negative integer orders are excluded");
  }

  double value() const noexcept { return value_; }

  static bool is_pole(double v) noexcept {
    return v < 0.0 && v == std::floor(v);
  }

private:
  static std::string brief(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
  }

  double value_;
};

}  // namespace fracseq
