#include "fracseq/compact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracseq/transform.hpp"
#include "subset_sup.hpp"

namespace fracseq {

const char* to_string(Compactness c) {
  switch (c) {
    case Compactness::compact: return "compact";
    case Compactness::not_compact: return "not_compact";
    default: return "undetermined";
  }
}

namespace {

int formula_row_for(SpaceId from, SpaceId to) {
  if (!is_delta_domain(from))
    throw std::invalid_argument("domain must be one of c0d, cd, linfd");
  const bool cdom = from == SpaceId::CDelta;
  switch (to) {
    case SpaceId::Linf: return cdom ? 2 : 1;
    case SpaceId::C0: return cdom ? 4 : 3;
    case SpaceId::C: return cdom ? 6 : 5;
    case SpaceId::L1: return cdom ? 8 : 7;
    default:
      throw std::invalid_argument("codomain must be one of c0, c, linf, l1");
  }
}

const char* quantity_label(int row) {
  switch (row) {
    case 1:
    case 3: return "tail sup of transformed row l1 norms";
    case 2:
    case 4: return "tail sup of transformed row l1 norms plus |gamma_n|";
    case 5: return "tail sup of column-centered row l1 norms";
    case 6:
      return "tail sup of column-centered row l1 norms plus |delta_n| "
             "(delta_n = sum_k alpha_hat_k - gamma_n + beta)";
    case 7: return "tail subset sup of summed transformed rows";
    default:
      return "tail subset sup of summed transformed rows plus |sum of gamma_n|";
  }
}

// Tail quantity of one formula row at cutoff r: rows with index <= r are
// dropped and the sup runs over the remaining rows up to the fixed horizon,
// so the sampled values are nonincreasing in r.
double tail_quantity(Analyzer& az, int row, std::size_t r, std::size_t horizon,
                     LimitStatus& inner) {
  const std::size_t lo = r + 1;
  if (row == 7 || row == 8) {
    std::vector<std::size_t> pool;
    for (std::size_t n = lo; n < horizon; ++n) {
      const HatRow& hr = az.hat_row(n);
      inner = worst(inner, hr.tail);
      double g = 0.0;
      if (row == 8) {
        const LimitEstimate ge = az.gamma(n);
        inner = worst(inner, ge.status);
        g = std::fabs(ge.value);
      }
      if (hr.abs_sum > 0.0 || g > 0.0) pool.push_back(n);
    }
    return detail::row_subset_sup(az, pool, row == 8, az.tol().subset_budget)
        .value;
  }

  if (row == 5 || row == 6) inner = worst(inner, az.alpha_status());
  double best = 0.0;
  for (std::size_t n = lo; n < horizon; ++n) {
    const HatRow& hr = az.hat_row(n);
    inner = worst(inner, hr.tail);
    double q = 0.0;
    switch (row) {
      case 1:
      case 3:
        q = hr.abs_sum;
        break;
      case 2:
      case 4: {
        const LimitEstimate g = az.gamma(n);
        inner = worst(inner, g.status);
        q = hr.abs_sum + std::fabs(g.value);
        break;
      }
      case 5:
        q = az.bhat_abs_row_sum(n);
        break;
      default: {  // row 6
        const LimitEstimate d = az.delta(n);
        inner = worst(inner, d.status);
        q = az.bhat_abs_row_sum(n) + std::fabs(d.value);
        break;
      }
    }
    best = std::max(best, q);
  }
  return best;
}

struct TailLimit {
  std::vector<LimitSample> trail;
  LimitEstimate limit;
};

TailLimit tail_limit(Analyzer& az, int row) {
  const std::size_t horizon = az.tail_rows();
  LimitStatus inner = LimitStatus::converged;
  std::vector<LimitSample> trail;
  for (std::size_t r : geometric_ladder(8, az.tol().truncate_rows)) {
    trail.push_back({r, tail_quantity(az, row, r, horizon, inner)});
  }
  TailLimit out;
  out.trail = trail;
  out.limit = estimate_limit(std::move(trail), az.tol().eps);
  out.limit.status = worst(out.limit.status, inner);
  return out;
}

HmncBounds bounds_from(int row, const TailLimit& t) {
  HmncBounds b;
  b.formula_row = row;
  b.quantity = quantity_label(row);
  b.trail = t.trail;
  b.limit = t.limit;
  b.status = t.limit.status;
  const double v = t.limit.value;
  switch (row) {
    case 1:
    case 2:
      b.lower = 0.0;
      b.upper = v;
      break;
    case 3:
    case 4:
      b.lower = v;
      b.upper = v;
      break;
    case 5:
    case 6:
      b.lower = v / 2.0;
      b.upper = v;
      break;
    default:  // rows 7, 8
      b.lower = v;
      b.upper = 4.0 * v;
      break;
  }
  return b;
}

}  // namespace

HmncBounds hmnc_bounds(const FracOrder& order, const MatrixSpec& a, SpaceId from,
                       SpaceId to, const ToleranceConfig& tol) {
  tol.validate();
  const int row = formula_row_for(from, to);
  Analyzer az(order, a, tol);
  return bounds_from(row, tail_limit(az, row));
}

CompactnessVerdict is_compact(const FracOrder& order, const MatrixSpec& a,
                              SpaceId from, SpaceId to, const ToleranceConfig& tol) {
  tol.validate();
  const int row = formula_row_for(from, to);
  Analyzer az(order, a, tol);
  const TailLimit t = tail_limit(az, row);

  CompactnessVerdict v;
  v.formula_row = row;
  v.iff = to != SpaceId::Linf;
  v.criterion = std::string(quantity_label(row)) + " vanishes as the cutoff grows";
  v.trail = t.trail;
  v.limit = t.limit;

  const double eps = tol.eps;
  if (t.limit.status == LimitStatus::converged &&
      std::fabs(t.limit.value) <= eps) {
    v.verdict = Compactness::compact;
    return v;
  }
  if (v.iff && t.trail.size() >= 3) {
    const std::size_t n = t.trail.size();
    const bool away = t.trail[n - 1].value >= 10.0 * eps &&
                      t.trail[n - 2].value >= 10.0 * eps &&
                      t.trail[n - 3].value >= 10.0 * eps;
    if (away) {
      v.verdict = Compactness::not_compact;
      return v;
    }
  }
  v.verdict = Compactness::undetermined;
  return v;
}

}  // namespace fracseq
