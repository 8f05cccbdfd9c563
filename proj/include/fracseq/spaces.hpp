#pragma once

#include <optional>
#include <string_view>

#include "fracseq/fracop.hpp"
#include "fracseq/tolerance.hpp"

namespace fracseq {

/// Sequence spaces.  The *Delta spaces are the matrix domains of the
/// fractional difference operator; the rest are the classical targets.
enum class SpaceId { C0Delta, CDelta, LinfDelta, C0, C, Linf, L1 };

bool is_delta_domain(SpaceId s);
std::string_view space_tag(SpaceId s);  // c0d | cd | linfd | c0 | c | linf | l1
std::optional<SpaceId> parse_space_tag(std::string_view tag);

enum class MembershipStatus { member, non_member_evidence, undetermined };

const char* to_string(MembershipStatus s);

/// Verdict for the tightest domain space supported by the evidence, plus the
/// trailing-window diagnostics the verdict was read from.
struct MembershipVerdict {
  SpaceId space = SpaceId::LinfDelta;
  MembershipStatus status = MembershipStatus::undetermined;
  std::optional<double> limit;  // xi, set only for a CDelta member
  double norm = 0.0;            // sup |y_n| over the truncation

  double trailing_mean = 0.0;
  double trailing_oscillation = 0.0;
  double trailing_abs_max = 0.0;
  bool monotone_growth = false;
  std::size_t window = 0;

  /// Whether the evidence supports membership of the requested domain space.
  bool implies_membership(SpaceId requested) const;
};

/// sup_n |(difference transform of x)_n| over the stored prefix.
double delta_norm(const FracOrder& order, const Seq& x);

/// Classifies x against the three domain spaces from the trailing window of
/// its difference transform.  Requires x.size() >= 2 * tol.window.
MembershipVerdict classify_sequence(const FracOrder& order, const Seq& x,
                                    const ToleranceConfig& tol);

/// Rebuilds x from its transform through the basis expansion of the
/// requested space (C0Delta or CDelta; the bounded space has no such basis).
Seq schauder_reconstruct(const FracOrder& order, const Seq& x, SpaceId space,
                         const ToleranceConfig& tol);

}  // namespace fracseq
