#include "fracseq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracseq/transform.hpp"
#include "subset_sup.hpp"

namespace fracseq {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LimitEstimate sup_to_limit(const SupEstimate& s) {
  LimitEstimate e;
  e.value = s.value;
  e.status = s.status;
  e.samples = s.trail;
  if (s.exact) {
    e.residual = 0.0;
  } else if (s.trail.size() >= 2) {
    e.residual = s.trail.back().value - s.trail[s.trail.size() - 2].value;
  }
  return e;
}

ConditionVerdict verdict_exists(LimitStatus s) {
  switch (s) {
    case LimitStatus::converged: return ConditionVerdict::holds;
    case LimitStatus::diverging: return ConditionVerdict::fails;
    default: return ConditionVerdict::undetermined;
  }
}

ConditionVerdict verdict_bounded(LimitStatus s) { return verdict_exists(s); }

ConditionVerdict verdict_zero(const LimitEstimate& e, double eps) {
  if (e.status == LimitStatus::diverging) return ConditionVerdict::fails;
  if (e.status == LimitStatus::converged)
    return std::fabs(e.value) <= eps ? ConditionVerdict::holds
                                     : ConditionVerdict::fails;
  return ConditionVerdict::undetermined;
}

std::string row_note(const Analyzer& az, bool complete) {
  std::ostringstream os;
  if (complete) {
    os << "all rows covered; rows at and beyond " << *az.row_count()
       << " vanish";
  } else {
    os << "sampled over rows below " << az.tail_rows();
  }
  return os.str();
}

struct RowQuantity {
  double value = 0.0;
  LimitStatus status = LimitStatus::converged;
  bool exact = true;
};

// Running sup of a per-row quantity over every row up to the horizon, with
// the running max recorded at geometric checkpoints.
template <typename F>
SupEstimate scan_rows(Analyzer& az, F&& row_value, bool* complete_out = nullptr) {
  const auto rc = az.row_count();
  const std::size_t horizon = rc ? std::min(*rc, az.tail_rows()) : az.tail_rows();
  const bool complete = rc && *rc <= az.tail_rows();
  if (complete_out) *complete_out = complete;

  double best = 0.0;
  std::size_t arg = 0;
  LimitStatus inner = LimitStatus::converged;
  bool all_exact = true;
  std::vector<LimitSample> trail;
  const auto marks =
      geometric_ladder(az.tol().window, std::max<std::size_t>(horizon, 1));
  std::size_t mi = 0;
  for (std::size_t n = 0; n < horizon; ++n) {
    const RowQuantity q = row_value(n);
    inner = worst(inner, q.status);
    all_exact = all_exact && q.exact;
    if (q.value > best) {
      best = q.value;
      arg = n;
    }
    while (mi < marks.size() && n + 1 >= marks[mi]) {
      trail.push_back({marks[mi], best});
      ++mi;
    }
  }
  for (; mi < marks.size(); ++mi) trail.push_back({marks[mi], best});

  SupEstimate out;
  if (complete) {
    out = exact_sup(best, arg);
    out.trail = std::move(trail);
    out.exact = all_exact;
  } else {
    out = classify_sup_trail(std::move(trail), az.tol().eps, arg);
    out.arg_index = arg;
  }
  out.status = worst(out.status, inner);
  return out;
}

RowQuantity hat_row_norm(Analyzer& az, std::size_t n, bool add_gamma) {
  const HatRow& row = az.hat_row(n);
  RowQuantity q{row.abs_sum, row.tail, row.exact};
  if (add_gamma) {
    const LimitEstimate g = az.gamma(n);
    q.value += std::fabs(g.value);
    q.status = worst(q.status, g.status);
    q.exact = q.exact && g.residual == 0.0;
  }
  return q;
}

SupEstimate row_norm_sup(Analyzer& az, bool add_gamma, bool* complete_out = nullptr) {
  return scan_rows(
      az, [&](std::size_t n) { return hat_row_norm(az, n, add_gamma); },
      complete_out);
}

// ---------------------------------------------------------------------------
// Finite-subset suprema (rows for the group norm, columns for condition 10A)

using detail::SubsetBest;
using detail::exhaustive_subsets;
using detail::row_subset_sup;

double column_group_value(Analyzer& az, std::size_t n_rows,
                          const std::vector<std::size_t>& cols) {
  double total = 0.0;
  for (std::size_t n = 0; n < n_rows; ++n) {
    const HatRow& row = az.hat_row(n);
    double s = 0.0;
    for (std::size_t k : cols) s += row.values[k];
    total += std::fabs(s);
  }
  return total;
}

std::pair<std::vector<std::size_t>, LimitStatus> effective_rows(Analyzer& az,
                                                                std::size_t limit,
                                                                bool add_gamma) {
  std::vector<std::size_t> eff;
  LimitStatus st = LimitStatus::converged;
  for (std::size_t n = 0; n < limit; ++n) {
    const RowQuantity q = hat_row_norm(az, n, add_gamma);
    st = worst(st, q.status);
    if (q.value > 0.0) eff.push_back(n);
  }
  return {eff, st};
}

// ---------------------------------------------------------------------------
// Primitive conditions

ConditionReport cond_1a(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "1A";
  bool complete = false;
  const SupEstimate s = row_norm_sup(az, false, &complete);
  r.witness = sup_to_limit(s);
  r.verdict = verdict_bounded(s.status);
  r.notes = "sup of transformed row l1 norms; " + row_note(az, complete);
  return r;
}

// Worst row of a per-row limit family, folded with the given verdict rule.
int verdict_rank(ConditionVerdict v) {
  return v == ConditionVerdict::fails ? 2
       : v == ConditionVerdict::undetermined ? 1 : 0;
}

template <typename PerRow, typename Verdicter>
ConditionReport forall_rows(Analyzer& az, const char* id, PerRow&& per_row,
                            Verdicter&& verdicter) {
  ConditionReport r;
  r.condition_id = id;
  r.verdict = ConditionVerdict::holds;
  const std::size_t horizon = az.eval_rows();
  bool have = false;
  ConditionVerdict wv = ConditionVerdict::holds;
  for (std::size_t n = 0; n < horizon; ++n) {
    const LimitEstimate e = per_row(n);
    const ConditionVerdict v = verdicter(e);
    if (!have || verdict_rank(v) > verdict_rank(wv) ||
        (verdict_rank(v) == verdict_rank(wv) &&
         std::fabs(e.value) > std::fabs(r.witness.value))) {
      r.witness = e;
      wv = v;
      have = true;
    }
    r.verdict = worse(r.verdict, v);
  }
  std::ostringstream os;
  os << "every row below " << horizon << " checked";
  if (az.row_count() && *az.row_count() <= horizon)
    os << "; later rows vanish";
  r.notes = os.str();
  return r;
}

ConditionReport cond_1b(Analyzer& az) {
  auto r = forall_rows(
      az, "1B", [&](std::size_t n) { return az.w_abs_limit(n); },
      [&](const LimitEstimate& e) { return verdict_zero(e, az.tol().eps); });
  return r;
}

ConditionReport cond_2a(Analyzer& az) {
  return forall_rows(
      az, "2A", [&](std::size_t n) { return sup_to_limit(az.w_abs_sup(n)); },
      [&](const LimitEstimate& e) { return verdict_bounded(e.status); });
}

ConditionReport cond_3a(Analyzer& az) {
  return forall_rows(
      az, "3A", [&](std::size_t n) { return az.gamma(n); },
      [&](const LimitEstimate& e) { return verdict_exists(e.status); });
}

ConditionReport cond_3b(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "3B";
  const SupEstimate s = scan_rows(az, [&](std::size_t n) {
    const HatRow& row = az.hat_row(n);
    const LimitEstimate g = az.gamma(n);
    return RowQuantity{std::fabs(row.sum - g.value),
                       worst(row.tail, g.status),
                       row.exact && g.residual == 0.0};
  });
  r.witness = sup_to_limit(s);
  if (s.value > az.tol().eps) {
    r.verdict = ConditionVerdict::fails;
  } else if (s.status == LimitStatus::converged) {
    r.verdict = ConditionVerdict::holds;
  } else {
    r.verdict = ConditionVerdict::undetermined;
  }
  r.notes =
      "zero-test of sup_n |row sum - gamma_n| as stated; a finite-sup reading "
      "may have been intended";
  return r;
}

ConditionReport cond_4a(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "4A";
  if (az.row_count()) {
    r.witness = exact_limit(0.0, std::max<std::size_t>(*az.row_count(), 1));
  } else {
    std::vector<LimitSample> samples;
    LimitStatus inner = LimitStatus::converged;
    for (std::size_t n : parity_ladder(az.tol().window, az.tail_rows() - 1)) {
      const HatRow& row = az.hat_row(n);
      inner = worst(inner, row.tail);
      samples.push_back({n, row.abs_sum});
    }
    r.witness = estimate_limit(std::move(samples), az.tol().eps);
    r.witness.status = worst(r.witness.status, inner);
  }
  r.verdict = verdict_zero(r.witness, az.tol().eps);
  r.notes = "row l1 norms along the row tail";
  return r;
}

template <typename Verdicter>
ConditionReport forall_columns(Analyzer& az, const char* id, Verdicter&& verdicter) {
  ConditionReport r;
  r.condition_id = id;
  r.verdict = ConditionVerdict::holds;
  bool have = false;
  ConditionVerdict wv = ConditionVerdict::holds;
  for (std::size_t k = 0; k < az.cols(); ++k) {
    const LimitEstimate e = az.alpha_hat(k);
    const ConditionVerdict v = verdicter(e);
    if (!have || verdict_rank(v) > verdict_rank(wv) ||
        (verdict_rank(v) == verdict_rank(wv) &&
         std::fabs(e.value) > std::fabs(r.witness.value))) {
      r.witness = e;
      wv = v;
      have = true;
    }
    r.verdict = worse(r.verdict, v);
  }
  std::ostringstream os;
  os << "column limits for k below " << az.cols();
  r.notes = os.str();
  return r;
}

ConditionReport cond_5a(Analyzer& az) {
  return forall_columns(az, "5A", [&](const LimitEstimate& e) {
    return verdict_zero(e, az.tol().eps);
  });
}

ConditionReport cond_6a(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "6A";
  r.witness = az.beta();
  r.verdict = verdict_zero(r.witness, az.tol().eps);
  r.notes = "limit of row sum minus gamma_n";
  return r;
}

ConditionReport cond_7a(Analyzer& az) {
  return forall_columns(az, "7A", [&](const LimitEstimate& e) {
    return verdict_exists(e.status);
  });
}

ConditionReport cond_7b(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "7B";
  LimitStatus rows = LimitStatus::converged;
  for (std::size_t n = 0; n < az.eval_rows(); ++n)
    rows = worst(rows, az.hat_row(n).tail);
  r.witness = az.alpha_abs_sum();
  r.verdict = worse(verdict_bounded(rows), verdict_bounded(r.witness.status));
  r.notes = "row l1 norms finite and the column-limit l1 series summable";
  return r;
}

ConditionReport cond_7c(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "7C";
  if (az.row_count()) {
    r.witness = exact_limit(0.0, std::max<std::size_t>(*az.row_count(), 1));
  } else {
    const LimitEstimate asum = az.alpha_sum();
    std::vector<LimitSample> samples;
    LimitStatus inner = asum.status;
    for (std::size_t n : parity_ladder(az.tol().window, az.tail_rows() - 1)) {
      const HatRow& row = az.hat_row(n);
      inner = worst(inner, row.tail);
      samples.push_back({n, row.sum - asum.value});
    }
    r.witness = estimate_limit(std::move(samples), az.tol().eps);
    r.witness.status = worst(r.witness.status, inner);
  }
  r.verdict = verdict_zero(r.witness, az.tol().eps);
  r.notes = "signed row sums relative to the summed column limits";
  return r;
}

ConditionReport cond_9a(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "9A";
  r.witness = az.beta();
  r.verdict = verdict_exists(r.witness.status);
  r.notes = "limit of row sum minus gamma_n exists";
  return r;
}

ConditionReport cond_10a(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "10A";
  const std::size_t budget = az.tol().subset_budget;

  auto effective_cols = [&](std::size_t n_rows) {
    std::vector<std::size_t> eff;
    for (std::size_t k = 0; k < az.cols(); ++k) {
      bool nonzero = false;
      for (std::size_t n = 0; n < n_rows && !nonzero; ++n)
        nonzero = az.hat_row(n).values[k] != 0.0;
      if (nonzero) eff.push_back(k);
    }
    return eff;
  };
  auto subset_sup = [&](std::size_t n_rows) {
    const auto eff = effective_cols(n_rows);
    if (eff.size() <= budget) {
      auto eval = [&](const std::vector<std::size_t>& sel) {
        return column_group_value(az, n_rows, sel);
      };
      return exhaustive_subsets(eff, eval);
    }
    return detail::greedy_columns(az, n_rows, eff);
  };
  auto row_tails = [&](std::size_t n_rows) {
    LimitStatus st = LimitStatus::converged;
    for (std::size_t n = 0; n < n_rows; ++n) st = worst(st, az.hat_row(n).tail);
    return st;
  };

  const auto rc = az.row_count();
  if (rc) {
    const std::size_t n_rows = std::min(*rc, az.tail_rows());
    const SubsetBest best = subset_sup(n_rows);
    LimitEstimate w;
    w.value = best.value;
    w.status = row_tails(n_rows);
    w.residual = w.status == LimitStatus::converged ? 0.0 : w.residual;
    w.samples = {{n_rows, best.value}};
    r.witness = w;
    r.verdict = verdict_bounded(w.status);
    r.notes = std::string("column-subset sup, ") + best.method +
              "; the row sum terminates at the declared row count";
  } else {
    std::vector<LimitSample> trail;
    double running = 0.0;
    const char* method = "greedy";
    std::size_t seed = 0;
    LimitStatus inner = LimitStatus::converged;
    for (std::size_t m : geometric_ladder(az.tol().window, az.tail_rows())) {
      const SubsetBest best = subset_sup(m);
      inner = worst(inner, row_tails(m));
      running = std::max(running, best.value);
      method = best.method;
      seed = best.seed;
      trail.push_back({m, running});
    }
    SupEstimate s = classify_sup_trail(std::move(trail), az.tol().eps, seed);
    s.status = worst(s.status, inner);
    r.witness = sup_to_limit(s);
    r.verdict = verdict_bounded(s.status);
    r.notes = std::string("column-subset sup over growing row horizons, ") + method;
  }
  return r;
}

ConditionReport cond_12a(Analyzer& az) {
  ConditionReport r;
  r.condition_id = "12A";
  const auto rc = az.row_count();
  LimitStatus inner = LimitStatus::converged;
  if (rc) {
    const std::size_t n_rows = std::min(*rc, az.tail_rows());
    double total = 0.0;
    for (std::size_t n = 0; n < n_rows; ++n) {
      const HatRow& row = az.hat_row(n);
      const LimitEstimate g = az.gamma(n);
      inner = worst(inner, worst(row.tail, g.status));
      total += std::fabs(row.sum - g.value);
    }
    r.witness = exact_limit(total, std::max<std::size_t>(n_rows, 1));
    r.witness.status = worst(r.witness.status, inner);
  } else {
    std::vector<LimitSample> partials;
    double acc = 0.0;
    const auto marks = geometric_ladder(az.tol().window, az.tail_rows());
    std::size_t mi = 0;
    for (std::size_t n = 0; n < az.tail_rows(); ++n) {
      const HatRow& row = az.hat_row(n);
      const LimitEstimate g = az.gamma(n);
      inner = worst(inner, worst(row.tail, g.status));
      acc += std::fabs(row.sum - g.value);
      while (mi < marks.size() && n + 1 >= marks[mi]) {
        partials.push_back({marks[mi], acc});
        ++mi;
      }
    }
    for (; mi < marks.size(); ++mi) partials.push_back({marks[mi], acc});
    r.witness = estimate_limit(std::move(partials), az.tol().eps);
    r.witness.status = worst(r.witness.status, inner);
  }
  r.verdict = verdict_bounded(r.witness.status);
  r.notes = "absolute series of row sum minus gamma_n";
  return r;
}

ConditionReport eval_condition(Analyzer& az, const std::string& id) {
  if (id == "1A") return cond_1a(az);
  if (id == "1B") return cond_1b(az);
  if (id == "2A") return cond_2a(az);
  if (id == "3A") return cond_3a(az);
  if (id == "3B") return cond_3b(az);
  if (id == "4A") return cond_4a(az);
  if (id == "5A") return cond_5a(az);
  if (id == "6A") return cond_6a(az);
  if (id == "7A") return cond_7a(az);
  if (id == "7B") return cond_7b(az);
  if (id == "7C") return cond_7c(az);
  if (id == "9A") return cond_9a(az);
  if (id == "10A") return cond_10a(az);
  if (id == "12A") return cond_12a(az);
  throw std::logic_error("unknown condition id: " + id);
}

struct Bundle {
  const char* label;
  std::vector<const char*> ids;
};

Bundle bundle_for(SpaceId from, SpaceId to) {
  const int f = from == SpaceId::LinfDelta ? 0 : from == SpaceId::C0Delta ? 1 : 2;
  switch (to) {
    case SpaceId::Linf:
      if (f == 0) return {"[1]", {"1A", "1B"}};
      if (f == 1) return {"[2]", {"1A", "2A"}};
      return {"[3]", {"1A", "2A", "3A", "3B"}};
    case SpaceId::C0:
      if (f == 0) return {"[4]", {"1B", "4A"}};
      if (f == 1) return {"[5]", {"1A", "2A", "5A"}};
      return {"[6]", {"1A", "2A", "3A", "5A", "6A"}};
    case SpaceId::C:
      if (f == 0) return {"[7]", {"1B", "7A", "7B", "7C"}};
      if (f == 1) return {"[8]", {"1A", "2A", "7A"}};
      return {"[9]", {"1A", "2A", "3A", "7A", "9A"}};
    case SpaceId::L1:
      if (f == 0) return {"[10]", {"1B", "10A"}};
      if (f == 1) return {"[11]", {"2A", "10A"}};
      return {"[12]", {"2A", "3A", "10A", "12A"}};
    default:
      throw std::invalid_argument("codomain must be one of c0, c, linf, l1");
  }
}

ClassVerdict membership_impl(Analyzer& az, SpaceId from, SpaceId to) {
  const Bundle b = bundle_for(from, to);
  ClassVerdict v;
  v.from = from;
  v.to = to;
  v.bundle = b.label;
  v.verdict = ConditionVerdict::holds;
  for (const char* id : b.ids) {
    v.conditions.push_back(eval_condition(az, id));
    v.verdict = worse(v.verdict, v.conditions.back().verdict);
  }
  v.notes.push_back(
      "domain-major bundles [1]-[12]; coarser summaries merge some of these cells");
  if (v.bundle == "[8]")
    v.notes.push_back(
        "this cell's listing names 2B, which has no stated definition; "
        "evaluated as 2A");
  return v;
}

void require_pair(SpaceId from, SpaceId to) {
  if (!is_delta_domain(from))
    throw std::invalid_argument("domain must be one of c0d, cd, linfd");
  if (to != SpaceId::C0 && to != SpaceId::C && to != SpaceId::Linf &&
      to != SpaceId::L1)
    throw std::invalid_argument("codomain must be one of c0, c, linf, l1");
}

}  // namespace

NormEstimate sup_norm(const FracOrder& order, const MatrixSpec& a, SpaceId from,
                      const ToleranceConfig& tol) {
  tol.validate();
  if (!is_delta_domain(from))
    throw std::invalid_argument("domain must be one of c0d, cd, linfd");
  Analyzer az(order, a, tol);
  bool complete = false;
  const SupEstimate s = row_norm_sup(az, from == SpaceId::CDelta, &complete);

  NormEstimate out;
  out.kind = NormEstimate::Kind::exact_identity;
  out.status = s.status;
  out.arg_index = s.arg_index;
  out.method = s.exact ? "exact" : "sampled";
  out.trail = s.trail;
  if (s.status == LimitStatus::diverging) {
    out.lower = kInf;
    out.upper = kInf;
  } else {
    out.lower = s.value;
    out.upper = s.value;
  }
  return out;
}

NormEstimate group_norm(const FracOrder& order, const MatrixSpec& a, SpaceId from,
                        std::size_t subset_budget, const ToleranceConfig& tol) {
  tol.validate();
  if (subset_budget > 24)
    throw std::invalid_argument("subset budget capped at 24");
  if (!is_delta_domain(from))
    throw std::invalid_argument("domain must be one of c0d, cd, linfd");
  Analyzer az(order, a, tol);
  const bool add_gamma = from == SpaceId::CDelta;
  const auto rc = az.row_count();

  NormEstimate out;
  out.kind = NormEstimate::Kind::sandwich;

  if (rc) {
    const std::size_t horizon = std::min(*rc, az.tail_rows());
    const auto [eff, st] = effective_rows(az, horizon, add_gamma);
    const SubsetBest best = row_subset_sup(az, eff, add_gamma, subset_budget);
    out.method = best.method;
    out.arg_index = best.seed;
    out.status = st;
    out.trail = {{horizon, best.value}};
    if (st == LimitStatus::diverging) {
      out.lower = kInf;
      out.upper = kInf;
    } else {
      out.lower = best.value;
      out.upper = 4.0 * best.value;
    }
  } else {
    std::vector<LimitSample> trail;
    double running = 0.0;
    const char* method = "greedy";
    std::size_t seed = 0;
    LimitStatus inner = LimitStatus::converged;
    for (std::size_t m : geometric_ladder(tol.window, az.tail_rows())) {
      const auto [eff, st] = effective_rows(az, m, add_gamma);
      inner = worst(inner, st);
      const SubsetBest best = row_subset_sup(az, eff, add_gamma, subset_budget);
      running = std::max(running, best.value);
      method = best.method;
      seed = best.seed;
      trail.push_back({m, running});
    }
    SupEstimate s = classify_sup_trail(std::move(trail), tol.eps, seed);
    s.status = worst(s.status, inner);
    out.method = method;
    out.arg_index = seed;
    out.status = s.status;
    out.trail = s.trail;
    if (s.status == LimitStatus::diverging) {
      out.lower = kInf;
      out.upper = kInf;
    } else {
      out.lower = s.value;
      out.upper = 4.0 * s.value;
    }
  }
  return out;
}

ClassVerdict class_membership(const FracOrder& order, const MatrixSpec& a,
                              SpaceId from, SpaceId to, const ToleranceConfig& tol) {
  tol.validate();
  require_pair(from, to);
  Analyzer az(order, a, tol);
  return membership_impl(az, from, to);
}

std::vector<ClassVerdict> class_table(const FracOrder& order, const MatrixSpec& a,
                                      const ToleranceConfig& tol) {
  tol.validate();
  Analyzer az(order, a, tol);
  std::vector<ClassVerdict> out;
  out.reserve(12);
  for (SpaceId to : {SpaceId::Linf, SpaceId::C0, SpaceId::C, SpaceId::L1})
    for (SpaceId from : {SpaceId::LinfDelta, SpaceId::C0Delta, SpaceId::CDelta})
      out.push_back(membership_impl(az, from, to));
  return out;
}

}  // namespace fracseq
