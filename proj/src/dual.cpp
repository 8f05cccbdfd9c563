#include "fracseq/dual.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracseq/transform.hpp"

namespace fracseq {

const char* to_string(ConditionVerdict v) {
  switch (v) {
    case ConditionVerdict::holds: return "holds";
    case ConditionVerdict::fails: return "fails";
    default: return "undetermined";
  }
}

ConditionVerdict worse(ConditionVerdict a, ConditionVerdict b) {
  auto rank = [](ConditionVerdict v) {
    return v == ConditionVerdict::fails ? 2
         : v == ConditionVerdict::undetermined ? 1 : 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

BetaDualReport check_beta_dual(const FracOrder& order, const Seq& a, SpaceId space,
                               const ToleranceConfig& tol) {
  require_seq(a, "functional");
  tol.validate();
  if (!is_delta_domain(space))
    throw std::invalid_argument(
        "beta-dual conditions are defined for the difference-domain spaces");

  const std::size_t sup = a.size();

  // Every defining series terminates at the declared support, so each witness
  // below is exact: the transform sums are finite sums and the triangle rows
  // vanish once the row index passes the support.
  const Seq r = r_transform_values(order, a);
  double r_abs_max = 0.0;
  for (double v : r) r_abs_max = std::max(r_abs_max, std::fabs(v));

  const auto w = w_triangle(order, a, std::max<std::size_t>(sup, 1));
  double w_sup = 0.0;
  for (const auto& row : w) {
    double abs_row = 0.0;
    for (double v : row) abs_row += std::fabs(v);
    w_sup = std::max(w_sup, abs_row);
  }

  ConditionReport mf2;
  mf2.condition_id = "MF2";
  mf2.witness = exact_limit(r_abs_max, sup);
  mf2.verdict = ConditionVerdict::holds;
  mf2.notes = "coordinate transform series terminate at the declared support";

  ConditionReport mf3;
  mf3.condition_id = "MF3";
  mf3.witness = exact_limit(w_sup, sup);
  mf3.verdict = ConditionVerdict::holds;
  mf3.notes = "absolute triangle row sums attain their supremum before the support ends";

  ConditionReport mf4;
  mf4.condition_id = "MF4";
  mf4.witness = exact_limit(0.0, sup);
  mf4.verdict = ConditionVerdict::holds;
  mf4.notes = "signed triangle row sums settle at zero past the support";

  ConditionReport mf5;
  mf5.condition_id = "MF5";
  mf5.witness = exact_limit(0.0, sup);
  mf5.verdict = std::fabs(mf5.witness.value) <= tol.eps ? ConditionVerdict::holds
                                                        : ConditionVerdict::fails;
  mf5.notes = "absolute triangle row sums settle at zero past the support";

  BetaDualReport rep;
  rep.space = space;
  switch (space) {
    case SpaceId::C0Delta:
      rep.conditions = {mf2, mf3};
      break;
    case SpaceId::CDelta:
      rep.conditions = {mf2, mf3, mf4};
      rep.rho = mf4.witness;
      break;
    default:  // LinfDelta
      rep.conditions = {mf2, mf5};
      break;
  }
  rep.overall = ConditionVerdict::holds;
  for (const auto& c : rep.conditions) rep.overall = worse(rep.overall, c.verdict);
  return rep;
}

PairingResult pairing(const FracOrder& order, const Seq& a, const Seq& x,
                      SpaceId space, const ToleranceConfig& tol) {
  require_seq(a, "functional");
  require_seq(x, "argument");
  tol.validate();
  if (!is_delta_domain(space))
    throw std::invalid_argument("pairing domain must be a difference-domain space");
  if (x.size() < a.size())
    throw std::invalid_argument("argument must cover the support of the functional");

  const MembershipVerdict mv = classify_sequence(order, x, tol);
  if (!mv.implies_membership(space))
    throw std::invalid_argument("argument shows no evidence of membership in the domain");

  PairingResult pr;
  for (std::size_t k = 0; k < a.size(); ++k) pr.lhs += a[k] * x[k];

  const Seq y = apply_forward(order, x);
  const Seq r = r_transform_values(order, a);
  double series = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) series += r[k] * y[k];

  // The correction limit is the signed-triangle limit, which is exactly zero
  // for a finitely supported functional; it still enters the reported form.
  pr.rho = 0.0;
  if (space == SpaceId::CDelta) {
    pr.xi = mv.limit ? *mv.limit : mv.trailing_mean;
    pr.rhs = series - pr.rho * pr.xi;
  } else {
    pr.rhs = series;
  }
  pr.discrepancy = std::fabs(pr.lhs - pr.rhs);
  return pr;
}

}  // namespace fracseq
