#pragma once

#include <string>
#include <vector>

#include "fracseq/limits.hpp"
#include "fracseq/matrix_spec.hpp"
#include "fracseq/spaces.hpp"
#include "fracseq/tolerance.hpp"

namespace fracseq {

/// Bounds on the Hausdorff measure of noncompactness of the operator,
/// computed from the tail quantity of the applicable formula row:
/// rows 1-2 give one-sided upper bounds, rows 3-4 are identities,
/// rows 5-6 carry a factor 1/2, rows 7-8 carry a factor 4.
struct HmncBounds {
  double lower = 0.0;
  double upper = 0.0;
  int formula_row = 0;  // 1..8
  LimitStatus status = LimitStatus::undetermined;
  std::string quantity;              // label of the tail quantity
  std::vector<LimitSample> trail;    // tail quantity at each sampled r
  LimitEstimate limit;               // its limit over r
};

HmncBounds hmnc_bounds(const FracOrder& order, const MatrixSpec& a, SpaceId from,
                       SpaceId to, const ToleranceConfig& tol);

enum class Compactness { compact, not_compact, undetermined };

const char* to_string(Compactness c);

/// Compactness verdict from the vanishing of the same tail quantity.
/// For bounded codomains the criterion is one-sided: a vanishing tail gives
/// compact, a nonvanishing one leaves the verdict undetermined.
struct CompactnessVerdict {
  Compactness verdict = Compactness::undetermined;
  std::string criterion;
  bool iff = true;
  int formula_row = 0;
  std::vector<LimitSample> trail;
  LimitEstimate limit;
};

CompactnessVerdict is_compact(const FracOrder& order, const MatrixSpec& a,
                              SpaceId from, SpaceId to, const ToleranceConfig& tol);

}  // namespace fracseq
