#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace fracseq {

enum class LimitStatus { converged, diverging, undetermined };

const char* to_string(LimitStatus s);

/// Most severe of two statuses (diverging > undetermined > converged).
LimitStatus worst(LimitStatus a, LimitStatus b);

struct LimitSample {
  std::size_t index = 0;
  double value = 0.0;
};

/// A sampled limit together with the evidence that produced it.
struct LimitEstimate {
  double value = 0.0;
  LimitStatus status = LimitStatus::undetermined;
  double residual = std::numeric_limits<double>::infinity();
  std::vector<LimitSample> samples;
};

/// Finite-support shortcut: the quantity is exactly constant from
/// `settled_at` on, so the limit is known with residual zero.
LimitEstimate exact_limit(double value, std::size_t settled_at);

/// Convergence rule for geometric sample trails: converged when the last
/// three samples agree pairwise within eps; diverging when the last three
/// magnitudes grow monotonically by a factor >= 1.5; otherwise undetermined.
LimitEstimate estimate_limit(std::vector<LimitSample> samples, double eps);

/// A supremum estimate.  `trail` holds the running maximum at geometric
/// checkpoints; `status` is converged when the trail stopped growing
/// (bounded evidence), diverging when it is still strictly growing.
struct SupEstimate {
  double value = 0.0;
  LimitStatus status = LimitStatus::undetermined;
  std::size_t arg_index = 0;
  bool exact = false;
  std::vector<LimitSample> trail;
};

SupEstimate exact_sup(double value, std::size_t arg_index);

/// Boundedness heuristic on a running-max trail (trail is nondecreasing):
/// no growth across the last three checkpoints -> bounded (converged);
/// strict growth at both of the last two steps -> diverging; else undetermined.
SupEstimate classify_sup_trail(std::vector<LimitSample> running_max, double eps,
                               std::size_t arg_index);

/// Indices start, 2*start, 4*start, ... not exceeding limit.
std::vector<std::size_t> geometric_ladder(std::size_t start, std::size_t limit);

/// Geometric ladder with alternating parity (start, 2*start-1, 4*start, ...)
/// so that period-two oscillations are not aliased away.
std::vector<std::size_t> parity_ladder(std::size_t start, std::size_t limit);

}  // namespace fracseq
