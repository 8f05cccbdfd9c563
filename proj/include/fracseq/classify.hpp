#pragma once

#include <string>
#include <vector>

#include "fracseq/dual.hpp"
#include "fracseq/limits.hpp"
#include "fracseq/matrix_spec.hpp"
#include "fracseq/spaces.hpp"
#include "fracseq/tolerance.hpp"

namespace fracseq {

/// Operator-norm estimate.  exact_identity: lower == upper comes from a norm
/// identity; sandwich: the true norm lies in [lower, upper] = [v, 4v].
struct NormEstimate {
  enum class Kind { exact_identity, sandwich };

  double lower = 0.0;
  double upper = 0.0;
  Kind kind = Kind::exact_identity;
  LimitStatus status = LimitStatus::undetermined;
  std::size_t arg_index = 0;   // achieving row (or witness subset seed)
  std::string method;          // exact | sampled | exhaustive | greedy
  std::vector<LimitSample> trail;
};

/// sup over rows of the transformed row l1 norm, plus |gamma_n| when the
/// domain is the convergent space.  Unbounded evidence yields upper = +inf.
NormEstimate sup_norm(const FracOrder& order, const MatrixSpec& a, SpaceId from,
                      const ToleranceConfig& tol);

/// Group norm for summable codomains: sup over finite row subsets N of
/// sum_k |sum_{n in N} hat(n,k)| (+ |sum_{n in N} gamma_n| on the convergent
/// domain), exhaustive up to 2^subset_budget, greedy beyond.  The operator
/// norm lies in [value, 4 * value].
NormEstimate group_norm(const FracOrder& order, const MatrixSpec& a, SpaceId from,
                        std::size_t subset_budget, const ToleranceConfig& tol);

/// Membership of A in the class of bounded operators (from -> to).
struct ClassVerdict {
  SpaceId from = SpaceId::C0Delta;
  SpaceId to = SpaceId::C0;
  std::string bundle;  // label of the condition bundle, "[1]".."[12]"
  std::vector<ConditionReport> conditions;
  ConditionVerdict verdict = ConditionVerdict::undetermined;
  std::vector<std::string> notes;
};

ClassVerdict class_membership(const FracOrder& order, const MatrixSpec& a,
                              SpaceId from, SpaceId to, const ToleranceConfig& tol);

/// All twelve (domain, codomain) cells.
std::vector<ClassVerdict> class_table(const FracOrder& order, const MatrixSpec& a,
                                      const ToleranceConfig& tol);

}  // namespace fracseq
