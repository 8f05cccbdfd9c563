#include "fracseq/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fracseq {

bool is_delta_domain(SpaceId s) {
  return s == SpaceId::C0Delta || s == SpaceId::CDelta || s == SpaceId::LinfDelta;
}

std::string_view space_tag(SpaceId s) {
  switch (s) {
    case SpaceId::C0Delta: return "c0d";
    case SpaceId::CDelta: return "cd";
    case SpaceId::LinfDelta: return "linfd";
    case SpaceId::C0: return "c0";
    case SpaceId::C: return "c";
    case SpaceId::Linf: return "linf";
    case SpaceId::L1: return "l1";
  }
  return "?";
}

std::optional<SpaceId> parse_space_tag(std::string_view tag) {
  for (SpaceId s : {SpaceId::C0Delta, SpaceId::CDelta, SpaceId::LinfDelta,
                    SpaceId::C0, SpaceId::C, SpaceId::Linf, SpaceId::L1})
    if (space_tag(s) == tag) return s;
  return std::nullopt;
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::member: return "member";
    case MembershipStatus::non_member_evidence: return "non_member_evidence";
    default: return "undetermined";
  }
}

bool MembershipVerdict::implies_membership(SpaceId requested) const {
  if (status == MembershipStatus::undetermined) return false;
  switch (requested) {
    case SpaceId::C0Delta: return space == SpaceId::C0Delta;
    case SpaceId::CDelta:
      return space == SpaceId::C0Delta || space == SpaceId::CDelta;
    case SpaceId::LinfDelta: return status == MembershipStatus::member;
    default: return false;
  }
}

double delta_norm(const FracOrder& order, const Seq& x) {
  const Seq y = apply_forward(order, x);
  double m = 0.0;
  for (double v : y) m = std::max(m, std::fabs(v));
  return m;
}

MembershipVerdict classify_sequence(const FracOrder& order, const Seq& x,
                                    const ToleranceConfig& tol) {
  tol.validate();
  require_seq(x);
  if (x.size() < 2 * tol.window)
    throw std::invalid_argument("sequence shorter than twice the window");

  const Seq y = apply_forward(order, x);
  const std::size_t n = y.size();
  const std::size_t w = tol.window;

  MembershipVerdict v;
  v.window = w;
  for (double t : y) v.norm = std::max(v.norm, std::fabs(t));

  double lo = y[n - w], hi = y[n - w];
  double mean = 0.0, absmax = 0.0;
  for (std::size_t i = n - w; i < n; ++i) {
    lo = std::min(lo, y[i]);
    hi = std::max(hi, y[i]);
    mean += y[i];
    absmax = std::max(absmax, std::fabs(y[i]));
  }
  v.trailing_mean = mean / static_cast<double>(w);
  v.trailing_oscillation = hi - lo;
  v.trailing_abs_max = absmax;

  // Monotone magnitude growth across the whole trailing window.
  v.monotone_growth = true;
  for (std::size_t i = n - w + 1; i < n; ++i)
    if (std::fabs(y[i]) <= std::fabs(y[i - 1])) {
      v.monotone_growth = false;
      break;
    }

  if (v.trailing_abs_max <= tol.eps) {
    v.space = SpaceId::C0Delta;
    v.status = MembershipStatus::member;
  } else if (v.trailing_oscillation <= tol.eps) {
    v.space = SpaceId::CDelta;
    v.status = MembershipStatus::member;
    v.limit = v.trailing_mean;
  } else if (v.monotone_growth) {
    v.space = SpaceId::LinfDelta;
    v.status = MembershipStatus::undetermined;
  } else {
    v.space = SpaceId::LinfDelta;
    v.status = MembershipStatus::member;
  }
  return v;
}

Seq schauder_reconstruct(const FracOrder& order, const Seq& x, SpaceId space,
                         const ToleranceConfig& tol) {
  if (space != SpaceId::C0Delta && space != SpaceId::CDelta)
    throw std::invalid_argument(
        "basis reconstruction is defined for the null and convergent domains only");
  require_seq(x);

  const std::size_t n = x.size();
  const Seq y = apply_forward(order, x);
  const CoeffSeries inv = frac_coeffs_unchecked(-order.value(), n);

  // Basis vector b^(m) is column m of the inverse triangle:
  // b^(m)_k = c_{k-m}(-alpha) for k >= m.
  Seq out(n, 0.0);
  double xi = 0.0;
  if (space == SpaceId::CDelta) {
    xi = classify_sequence(order, x, tol).trailing_mean;
    // The extra basis vector has entries sum_{i<=k} c_i(-alpha).
    double run = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      run += inv.terms[k];
      out[k] = xi * run;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    const double w = y[m] - (space == SpaceId::CDelta ? xi : 0.0);
    for (std::size_t k = m; k < n; ++k) out[k] += w * inv.terms[k - m];
  }
  return out;
}

}  // namespace fracseq
