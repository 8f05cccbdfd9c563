#include <vector>

#include "doctest.h"

#include "fracseq/limits.hpp"

using namespace fracseq;

TEST_CASE("exact shortcut") {
  const LimitEstimate e = exact_limit(3.5, 10);
  CHECK(e.value == 3.5);
  CHECK(e.status == LimitStatus::converged);
  CHECK(e.residual == 0.0);
  REQUIRE(e.samples.size() == 3);
  CHECK(e.samples[0].index == 10);
  CHECK(e.samples[2].index == 40);
  for (const auto& s : e.samples) CHECK(s.value == 3.5);
}

TEST_CASE("limit rule: agreement within eps converges") {
  std::vector<LimitSample> s{{8, 1.0}, {16, 1.5}, {32, 1.5001}, {64, 1.50005}, {128, 1.50007}};
  const LimitEstimate e = estimate_limit(s, 1e-3);
  CHECK(e.status == LimitStatus::converged);
  CHECK(e.value == 1.50007);
  CHECK(e.residual <= 1e-3);
}

TEST_CASE("limit rule: monotone growth by 1.5x diverges") {
  std::vector<LimitSample> s{{8, 1.0}, {16, 2.0}, {32, 4.0}, {64, 8.0}};
  CHECK(estimate_limit(s, 1e-8).status == LimitStatus::diverging);
  // Sign does not matter, magnitudes do.
  std::vector<LimitSample> n{{8, -1.0}, {16, -2.0}, {32, -4.0}};
  CHECK(estimate_limit(n, 1e-8).status == LimitStatus::diverging);
}

TEST_CASE("limit rule: slow drift stays undetermined") {
  std::vector<LimitSample> s{{8, 1.0}, {16, 1.1}, {32, 1.2}, {64, 1.3}};
  CHECK(estimate_limit(s, 1e-8).status == LimitStatus::undetermined);
}

TEST_CASE("sup trail: flat tail is bounded") {
  std::vector<LimitSample> t{{8, 1.0}, {16, 2.0}, {32, 2.0}, {64, 2.0}};
  const SupEstimate s = classify_sup_trail(t, 1e-8, 5);
  CHECK(s.status == LimitStatus::converged);
  CHECK(s.value == 2.0);
  CHECK(s.arg_index == 5);
}

TEST_CASE("sup trail: sustained growth diverges") {
  std::vector<LimitSample> t{{8, 1.0}, {16, 2.0}, {32, 3.0}, {64, 4.0}};
  CHECK(classify_sup_trail(t, 1e-8, 0).status == LimitStatus::diverging);
}

TEST_CASE("sup trail: one recent step stays undetermined") {
  std::vector<LimitSample> t{{8, 1.0}, {16, 1.0}, {32, 1.0}, {64, 2.0}};
  CHECK(classify_sup_trail(t, 1e-8, 0).status == LimitStatus::undetermined);
}

TEST_CASE("status ordering") {
  CHECK(worst(LimitStatus::converged, LimitStatus::undetermined) ==
        LimitStatus::undetermined);
  CHECK(worst(LimitStatus::undetermined, LimitStatus::diverging) ==
        LimitStatus::diverging);
  CHECK(worst(LimitStatus::converged, LimitStatus::converged) ==
        LimitStatus::converged);
}

TEST_CASE("geometric ladder") {
  CHECK(geometric_ladder(8, 128) == std::vector<std::size_t>{8, 16, 32, 64, 128});
  CHECK(geometric_ladder(8, 100) == std::vector<std::size_t>{8, 16, 32, 64});
  // Degenerate budgets still yield at least one checkpoint.
  CHECK(geometric_ladder(8, 4) == std::vector<std::size_t>{4});
}

TEST_CASE("parity ladder alternates parity") {
  const auto l = parity_ladder(16, 256);
  REQUIRE(l.size() >= 3);
  for (std::size_t i = 1; i < l.size(); ++i) {
    CHECK(l[i] > l[i - 1]);
    CHECK(l[i] % 2 != l[i - 1] % 2);
  }
}
