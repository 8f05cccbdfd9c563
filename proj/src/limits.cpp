#include "fracseq/limits.hpp"

#include <algorithm>
#include <cmath>

namespace fracseq {

const char* to_string(LimitStatus s) {
  switch (s) {
    case LimitStatus::converged: return "converged";
    case LimitStatus::diverging: return "diverging";
    default: return "undetermined";
  }
}

LimitStatus worst(LimitStatus a, LimitStatus b) {
  auto rank = [](LimitStatus s) {
    return s == LimitStatus::diverging ? 2 : s == LimitStatus::undetermined ? 1 : 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

LimitEstimate exact_limit(double value, std::size_t settled_at) {
  LimitEstimate e;
  e.value = value;
  e.status = LimitStatus::converged;
  e.residual = 0.0;
  const std::size_t at = std::max<std::size_t>(settled_at, 1);
  e.samples = {{at, value}, {2 * at, value}, {4 * at, value}};
  return e;
}

LimitEstimate estimate_limit(std::vector<LimitSample> samples, double eps) {
  LimitEstimate e;
  e.samples = std::move(samples);
  if (e.samples.empty()) return e;
  const std::size_t n = e.samples.size();
  e.value = e.samples[n - 1].value;
  e.residual = n >= 2 ? std::fabs(e.samples[n - 1].value - e.samples[n - 2].value)
                      : std::numeric_limits<double>::infinity();
  if (n < 3) return e;
  const double s0 = e.samples[n - 3].value;
  const double s1 = e.samples[n - 2].value;
  const double s2 = e.samples[n - 1].value;
  if (std::fabs(s2 - s1) <= eps && std::fabs(s1 - s0) <= eps) {
    e.status = LimitStatus::converged;
    return e;
  }
  const double a0 = std::fabs(s0), a1 = std::fabs(s1), a2 = std::fabs(s2);
  if (a0 > 0.0 && a1 >= 1.5 * a0 && a2 >= 1.5 * a1) {
    e.status = LimitStatus::diverging;
    return e;
  }
  e.status = LimitStatus::undetermined;
  return e;
}

SupEstimate exact_sup(double value, std::size_t arg_index) {
  SupEstimate s;
  s.value = value;
  s.status = LimitStatus::converged;
  s.arg_index = arg_index;
  s.exact = true;
  s.trail = {{arg_index, value}};
  return s;
}

SupEstimate classify_sup_trail(std::vector<LimitSample> running_max, double eps,
                               std::size_t arg_index) {
  SupEstimate s;
  s.trail = std::move(running_max);
  s.arg_index = arg_index;
  if (s.trail.empty()) return s;
  const std::size_t n = s.trail.size();
  s.value = s.trail[n - 1].value;
  if (n < 3) {
    s.status = LimitStatus::undetermined;
    return s;
  }
  const double m0 = s.trail[n - 3].value;
  const double m1 = s.trail[n - 2].value;
  const double m2 = s.trail[n - 1].value;
  if (m2 - m0 <= eps) {
    s.status = LimitStatus::converged;  // bounded evidence
  } else if (m1 - m0 > eps && m2 - m1 > eps) {
    s.status = LimitStatus::diverging;  // still growing at the horizon
  } else {
    s.status = LimitStatus::undetermined;
  }
  return s;
}

std::vector<std::size_t> geometric_ladder(std::size_t start, std::size_t limit) {
  std::vector<std::size_t> out;
  if (limit == 0) return out;
  std::size_t g = std::max<std::size_t>(start, 1);
  while (g <= limit) {
    out.push_back(g);
    if (g > limit / 2) break;
    g *= 2;
  }
  if (out.empty()) out.push_back(limit);
  return out;
}

std::vector<std::size_t> parity_ladder(std::size_t start, std::size_t limit) {
  std::vector<std::size_t> out;
  if (limit == 0) return out;
  std::size_t g = std::max<std::size_t>(start, 2);
  bool drop = false;
  while (true) {
    const std::size_t idx = drop ? g - 1 : g;
    if (idx > limit) break;
    out.push_back(idx);
    if (g > limit / 2) break;
    g *= 2;
    drop = !drop;
  }
  // Small horizons still deserve three looks.
  if (out.size() < 3 && limit >= 3) {
    out.clear();
    out.push_back(std::max<std::size_t>(1, limit / 4));
    const std::size_t mid = std::max<std::size_t>(out.back() + 1, limit / 2);
    out.push_back(mid);
    if (limit > mid) out.push_back(limit);
  }
  return out;
}

}  // namespace fracseq
