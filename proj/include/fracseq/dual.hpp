#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracseq/limits.hpp"
#include "fracseq/spaces.hpp"

namespace fracseq {

enum class ConditionVerdict { holds, fails, undetermined };

const char* to_string(ConditionVerdict v);

/// Most severe of two verdicts (fails > undetermined > holds).
ConditionVerdict worse(ConditionVerdict a, ConditionVerdict b);

/// One summability condition with the numeric evidence for its verdict.
struct ConditionReport {
  std::string condition_id;
  ConditionVerdict verdict = ConditionVerdict::undetermined;
  LimitEstimate witness;
  std::string notes;
};

/// Conditions for a to act as a coordinate functional on the given domain
/// space; rho is the limit attached to the convergent-domain case.
struct BetaDualReport {
  SpaceId space = SpaceId::C0Delta;
  std::vector<ConditionReport> conditions;
  ConditionVerdict overall = ConditionVerdict::undetermined;
  std::optional<LimitEstimate> rho;
};

BetaDualReport check_beta_dual(const FracOrder& order, const Seq& a, SpaceId space,
                               const ToleranceConfig& tol);

/// Evaluates both sides of the series pairing sum_k a_k x_k against its
/// transformed form sum_k (R a)_k y_k (minus rho * xi on the convergent
/// domain) and reports the discrepancy.
struct PairingResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double discrepancy = 0.0;
  double rho = 0.0;
  double xi = 0.0;
};

PairingResult pairing(const FracOrder& order, const Seq& a, const Seq& x,
                      SpaceId space, const ToleranceConfig& tol);

}  // namespace fracseq
