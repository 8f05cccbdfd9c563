#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "fracseq/fracop.hpp"
#include "fracseq/limits.hpp"
#include "fracseq/matrix_spec.hpp"
#include "fracseq/tolerance.hpp"

namespace fracseq {

/// (R a)_k = sum_{j>=k} c_{j-k}(-alpha) a_j, exact on the declared support.
std::vector<LimitEstimate> r_transform(const FracOrder& order, const Seq& a);

/// Values only, for callers that feed the result into further sums.
Seq r_transform_values(const FracOrder& order, const Seq& a);

/// Triangle w_{mk} = sum_{j>=m} c_{j-k}(-alpha) a_j for 0 <= k <= m < m_max,
/// exact on the declared support of a (rows vanish once m passes it).
std::vector<std::vector<double>> w_triangle(const FracOrder& order, const Seq& a,
                                            std::size_t m_max);

/// One row of the transformed matrix together with its aggregates.  For rows
/// with declared support the values and sums are exact; for generator rows
/// they come from geometrically sampled tails and `tail` records the worst
/// per-entry status.
struct HatRow {
  std::vector<double> values;  // entries k < stored length
  double abs_sum = 0.0;        // sum_k |entry| over the full declared support
  double sum = 0.0;            // sum_k entry
  LimitStatus tail = LimitStatus::converged;
  bool exact = true;
};

struct HatMatrix {
  double order = 0.0;
  std::size_t cols = 0;
  std::vector<HatRow> rows;
};

/// Row-by-row transform of A: row n becomes R applied to row n of A.
HatMatrix hat_matrix(const FracOrder& order, const MatrixSpec& a,
                     std::size_t rows, std::size_t cols, const ToleranceConfig& tol);

/// gamma_n = lim_m sum_{k<=m} w_mk for row n of A.
std::vector<LimitEstimate> gamma_sequence(const FracOrder& order, const MatrixSpec& a,
                                          std::size_t n_max, const ToleranceConfig& tol);

/// beta = lim_n (sum_k hat-row-sum(n) - gamma_n).
LimitEstimate beta_limit(const FracOrder& order, const MatrixSpec& a,
                         const ToleranceConfig& tol);

/// Column limits alpha_hat_k = lim_n hat(n, k), plus the derived
/// delta_n = sum_k alpha_hat_k - gamma_n + beta (assembled only from
/// converged components, undetermined otherwise).
struct AlphaHatResult {
  std::vector<LimitEstimate> alpha;  // per column k < k_max
  LimitEstimate beta;
  std::vector<LimitEstimate> delta;  // per row n < k_max
};

AlphaHatResult alpha_hat(const FracOrder& order, const MatrixSpec& a,
                         std::size_t k_max, const ToleranceConfig& tol);

/// Shared evaluation state for one (order, matrix, tolerance) triple: caches
/// coefficient prefixes, transformed rows, and the limit families, so the
/// condition checks and the compactness bounds reuse one set of numbers.
class Analyzer {
public:
  Analyzer(const FracOrder& order, const MatrixSpec& a, const ToleranceConfig& tol);
  ~Analyzer();
  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  const ToleranceConfig& tol() const;
  double order() const;
  std::size_t cols() const;       // column truncation
  std::size_t eval_rows() const;  // rows covered by forall-row checks
  std::size_t tail_rows() const;  // sampling horizon for limits over rows

  /// Rows at and beyond row_count() are exactly zero.
  std::optional<std::size_t> row_count() const;

  const HatRow& hat_row(std::size_t n);

  LimitEstimate gamma(std::size_t n);
  LimitEstimate w_abs_limit(std::size_t n);  // lim_m sum_{k<=m} |w_mk|
  SupEstimate w_abs_sup(std::size_t n);      // sup_m sum_{k<=m} |w_mk|
  LimitEstimate alpha_hat(std::size_t k);
  LimitEstimate beta();
  LimitEstimate alpha_sum();      // sum_k alpha_hat_k
  LimitEstimate alpha_abs_sum();  // sum_k |alpha_hat_k|
  LimitEstimate delta(std::size_t n);

  /// sum_k |hat(n,k) - alpha_hat_k| over the column truncation.
  double bhat_abs_row_sum(std::size_t n);

  /// Worst status among the alpha_hat columns.
  LimitStatus alpha_status();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fracseq
