#pragma once

#include <cstddef>
#include <vector>

#include "fracseq/coeffs.hpp"
#include "fracseq/frac_order.hpp"

namespace fracseq {

/// A finite sequence prefix.  Operations treat it as the leading terms of an
/// infinite sequence; entries beyond the stored prefix are unknown, not zero,
/// unless an operation says otherwise.
using Seq = std::vector<double>;

/// Boundary validation: length >= 1 and every entry finite.
void require_seq(const Seq& x, const char* what = "sequence");

/// y_k = sum_{i<=k} c_i(alpha) x_{k-i}: the one-sided difference transform.
Seq apply_forward(const FracOrder& order, const Seq& x);

/// Inverse transform; uses the coefficient series of the negated order.
Seq apply_inverse(const FracOrder& order, const Seq& y);

/// Lower-triangular matrix stored packed row-major: row n holds n+1 entries.
class TriMatrix {
public:
  explicit TriMatrix(std::size_t size) : size_(size), data_(size * (size + 1) / 2, 0.0) {}

  std::size_t size() const noexcept { return size_; }

  double at(std::size_t n, std::size_t k) const {
    return k > n ? 0.0 : data_[n * (n + 1) / 2 + k];
  }

  double& ref(std::size_t n, std::size_t k) { return data_[n * (n + 1) / 2 + k]; }

  Seq apply(const Seq& x) const;

private:
  std::size_t size_;
  std::vector<double> data_;
};

/// The truncated operator matrix: entry (n, k) is c_{n-k}(alpha).
TriMatrix operator_matrix(const FracOrder& order, std::size_t size);

}  // namespace fracseq
