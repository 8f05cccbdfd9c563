#pragma once

#include <cstddef>
#include <stdexcept>

namespace fracseq {

/// Shared numeric policy.  Every verdict-producing operation takes one of
/// these and reports it back, so a report is reproducible from its own text.
struct ToleranceConfig {
  double eps = 1e-8;              // convergence / zero-test tolerance
  std::size_t window = 16;        // trailing-window length for sequence verdicts
  std::size_t subset_budget = 20; // exhaustive subset enumeration up to 2^budget
  std::size_t truncate_rows = 128;
  std::size_t truncate_cols = 128;

  void validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    if (subset_budget > 24)
      throw std::invalid_argument("subset budget capped at 24");
    if (truncate_rows < 2 * window || truncate_cols < 2 * window)
      throw std::invalid_argument("truncation must be at least twice the window");
  }
};

}  // namespace fracseq
