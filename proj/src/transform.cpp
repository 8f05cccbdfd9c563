#include "fracseq/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracseq {

namespace {

constexpr std::size_t kMinTailStart = 64;  // smallest inner sampling horizon

LimitEstimate merge_inner(LimitEstimate outer, LimitStatus inner) {
  outer.status = worst(outer.status, inner);
  return outer;
}

}  // namespace

std::vector<LimitEstimate> r_transform(const FracOrder& order, const Seq& a) {
  require_seq(a);
  const std::size_t m = a.size();
  const CoeffSeries c = frac_coeffs_unchecked(-order.value(), m);
  std::vector<LimitEstimate> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    double acc = 0.0;
    for (std::size_t j = k; j < m; ++j) acc += c.terms[j - k] * a[j];
    out[k] = exact_limit(acc, m);
  }
  return out;
}

Seq r_transform_values(const FracOrder& order, const Seq& a) {
  const auto est = r_transform(order, a);
  Seq v(est.size());
  for (std::size_t i = 0; i < est.size(); ++i) v[i] = est[i].value;
  return v;
}

std::vector<std::vector<double>> w_triangle(const FracOrder& order, const Seq& a,
                                            std::size_t m_max) {
  require_seq(a);
  if (m_max == 0) throw std::invalid_argument("triangle needs at least one row");
  const std::size_t sup = a.size();
  const CoeffSeries c = frac_coeffs_unchecked(-order.value(), std::max(sup, m_max));
  std::vector<std::vector<double>> w(m_max);
  for (std::size_t m = 0; m < m_max; ++m) {
    w[m].assign(m + 1, 0.0);
    for (std::size_t k = 0; k <= m; ++k) {
      double acc = 0.0;
      for (std::size_t j = std::max(m, k); j < sup; ++j) acc += c.terms[j - k] * a[j];
      w[m][k] = acc;
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Analyzer

struct Analyzer::Impl {
  FracOrder order;
  const MatrixSpec& a;
  ToleranceConfig tol;

  std::vector<double> c;  // coefficient prefix of the negated order
  std::vector<double> p;  // running prefix sums of c

  std::optional<std::size_t> rcount;
  std::size_t cols = 0;
  std::size_t eval_rows = 0;
  std::size_t tail_rows = 0;
  std::size_t m_horizon = 0;

  std::vector<std::optional<HatRow>> hat_cache;
  std::vector<std::optional<LimitEstimate>> gamma_cache;
  std::vector<std::optional<LimitEstimate>> wlim_cache;
  std::vector<std::optional<SupEstimate>> wsup_cache;
  std::vector<std::optional<LimitEstimate>> alpha_cache;
  std::optional<LimitEstimate> beta_cache;
  std::optional<LimitEstimate> asum_cache;
  std::optional<LimitEstimate> aabs_cache;

  Impl(const FracOrder& o, const MatrixSpec& m, const ToleranceConfig& t)
      : order(o), a(m), tol(t) {
    tol.validate();
    rcount = a.row_count();
    cols = tol.truncate_cols;
    const std::size_t hard_tail = 4 * tol.truncate_rows;
    eval_rows = std::min(rcount.value_or(tol.truncate_rows), tol.truncate_rows);
    tail_rows = std::min(rcount.value_or(hard_tail), hard_tail);
    m_horizon = hard_tail;
    hat_cache.resize(std::max<std::size_t>(tail_rows, 1));
    gamma_cache.resize(hat_cache.size());
    wlim_cache.resize(hat_cache.size());
    wsup_cache.resize(hat_cache.size());
    alpha_cache.resize(cols);
  }

  void ensure_c(std::size_t need) {
    if (c.size() >= need) return;
    const std::size_t old = c.size();
    c.resize(need);
    p.resize(need);
    if (old == 0) {
      c[0] = 1.0;
      p[0] = 1.0;
    }
    const double alpha = -order.value();
    for (std::size_t i = std::max<std::size_t>(old, 1); i < need; ++i) {
      const double di = static_cast<double>(i);
      c[i] = c[i - 1] * ((di - 1.0 - alpha) / di);
      p[i] = p[i - 1] + c[i];
    }
  }

  // prefix sum of c over [lo, hi] (inclusive), P[-1] treated as 0
  double prefix_between(std::size_t lo_minus_one_plus_one, std::size_t hi) {
    // call as prefix_between(j - m, j): sum_{i=j-m}^{j} c_i
    const std::size_t lo = lo_minus_one_plus_one;
    return lo == 0 ? p[hi] : p[hi] - p[lo - 1];
  }

  const HatRow& hat_row(std::size_t n) {
    if (n >= hat_cache.size()) hat_cache.resize(n + 1);
    auto& slot = hat_cache[n];
    if (slot) return *slot;

    HatRow row;
    row.values.assign(cols, 0.0);
    const auto support = a.row_support(n);
    const auto [lo, hi] = a.row_nonzero_range(n);

    if (support) {
      const std::size_t m = *support;
      ensure_c(std::max<std::size_t>(m, 1));
      const std::size_t end = std::min<std::size_t>(m, hi);
      for (std::size_t k = 0; k < end; ++k) {
        double acc = 0.0;
        for (std::size_t j = std::max(k, lo); j < end; ++j)
          acc += c[j - k] * a.entry(n, j);
        if (k < cols) row.values[k] = acc;
        row.abs_sum += std::fabs(acc);
        row.sum += acc;
      }
      row.exact = true;
      row.tail = LimitStatus::converged;
    } else {
      // Generator row: sample each entry's tail at geometric horizons.
      const std::size_t j0 = std::max<std::size_t>(kMinTailStart, cols);
      const std::size_t jmax = 4 * j0;
      ensure_c(jmax);
      LimitStatus tail = LimitStatus::converged;
      for (std::size_t k = 0; k < cols; ++k) {
        double acc = 0.0;
        std::vector<LimitSample> partials;
        std::size_t next = j0;
        for (std::size_t j = std::max(k, lo); j < std::min(jmax, hi); ++j) {
          acc += c[j - k] * a.entry(n, j);
          while (j + 1 >= next && partials.size() < 3) {
            partials.push_back({next, acc});
            next *= 2;
          }
        }
        while (partials.size() < 3) {
          partials.push_back({next, acc});
          next *= 2;
        }
        const LimitEstimate est = estimate_limit(std::move(partials), tol.eps);
        row.values[k] = est.value;
        tail = worst(tail, est.status);
      }
      // Column-direction partial sums, checked at geometric checkpoints.
      std::vector<LimitSample> sum_part, abs_part;
      double s = 0.0, ab = 0.0;
      const auto ladder = parity_ladder(std::max<std::size_t>(cols / 8, 4), cols);
      std::size_t li = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        s += row.values[k];
        ab += std::fabs(row.values[k]);
        if (li < ladder.size() && k + 1 >= ladder[li]) {
          sum_part.push_back({k + 1, s});
          abs_part.push_back({k + 1, ab});
          ++li;
        }
      }
      row.sum = s;
      row.abs_sum = ab;
      tail = worst(tail, estimate_limit(std::move(sum_part), tol.eps).status);
      tail = worst(tail, estimate_limit(std::move(abs_part), tol.eps).status);
      row.exact = false;
      row.tail = tail;
    }
    slot = std::move(row);
    return *slot;
  }

  // Sampled partial sums over the triangle rows of one matrix row:
  // value(m) = sum_{k<=m} w_mk (signed) or sum_{k<=m} |w_mk| (absolute).
  struct WSamples {
    std::vector<LimitSample> samples;
    LimitStatus inner = LimitStatus::converged;
  };

  double w_row_value_exact(std::size_t n, std::size_t m, bool absolute) {
    const auto support = a.row_support(n);
    const std::size_t end = std::min(*support, a.row_nonzero_range(n).second);
    const auto lo = a.row_nonzero_range(n).first;
    if (m >= end) return 0.0;
    ensure_c(end);
    if (!absolute) {
      double acc = 0.0;
      for (std::size_t j = std::max(m, lo); j < end; ++j)
        acc += a.entry(n, j) * prefix_between(j - m, j);
      return acc;
    }
    double total = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
      double acc = 0.0;
      for (std::size_t j = std::max(m, std::max(k, lo)); j < end; ++j)
        acc += c[j - k] * a.entry(n, j);
      total += std::fabs(acc);
    }
    return total;
  }

  WSamples w_row_samples(std::size_t n, bool absolute) {
    WSamples out;
    const auto [lo, hi] = a.row_nonzero_range(n);
    for (std::size_t m : parity_ladder(tol.window, m_horizon)) {
      const std::size_t j0 =
          std::max({kMinTailStart, 2 * (m + 1), cols});
      const std::size_t jmax = 4 * j0;
      ensure_c(jmax + 1);
      std::vector<LimitSample> partials;
      std::size_t next = j0;
      if (!absolute) {
        double acc = 0.0;
        for (std::size_t j = std::max(m, lo); j < std::min(jmax, hi); ++j) {
          acc += a.entry(n, j) * prefix_between(j - m, j);
          while (j + 1 >= next && partials.size() < 3) {
            partials.push_back({next, acc});
            next *= 2;
          }
        }
        while (partials.size() < 3) {
          partials.push_back({next, acc});
          next *= 2;
        }
      } else {
        std::vector<double> w(m + 1, 0.0);
        auto snapshot = [&](std::size_t at) {
          double t = 0.0;
          for (double v : w) t += std::fabs(v);
          partials.push_back({at, t});
        };
        for (std::size_t j = std::max(m, lo); j < std::min(jmax, hi); ++j) {
          const double aj = a.entry(n, j);
          if (aj != 0.0) {
            const std::size_t kend = std::min(m, j);
            for (std::size_t k = 0; k <= kend; ++k) w[k] += c[j - k] * aj;
          }
          while (j + 1 >= next && partials.size() < 3) {
            snapshot(next);
            next *= 2;
          }
        }
        while (partials.size() < 3) {
          snapshot(next);
          next *= 2;
        }
      }
      const LimitEstimate inner = estimate_limit(std::move(partials), tol.eps);
      out.inner = worst(out.inner, inner.status);
      out.samples.push_back({m, inner.value});
    }
    return out;
  }

  LimitEstimate gamma(std::size_t n) {
    if (n >= gamma_cache.size()) gamma_cache.resize(n + 1);
    auto& slot = gamma_cache[n];
    if (slot) return *slot;
    const auto support = a.row_support(n);
    if (support) {
      slot = exact_limit(0.0, std::max<std::size_t>(*support, 1));
    } else {
      auto ws = w_row_samples(n, false);
      slot = merge_inner(estimate_limit(std::move(ws.samples), tol.eps), ws.inner);
    }
    return *slot;
  }

  LimitEstimate w_abs_limit(std::size_t n) {
    if (n >= wlim_cache.size()) wlim_cache.resize(n + 1);
    auto& slot = wlim_cache[n];
    if (slot) return *slot;
    const auto support = a.row_support(n);
    if (support) {
      slot = exact_limit(0.0, std::max<std::size_t>(*support, 1));
    } else {
      auto ws = w_row_samples(n, true);
      slot = merge_inner(estimate_limit(std::move(ws.samples), tol.eps), ws.inner);
    }
    return *slot;
  }

  SupEstimate w_abs_sup(std::size_t n) {
    if (n >= wsup_cache.size()) wsup_cache.resize(n + 1);
    auto& slot = wsup_cache[n];
    if (slot) return *slot;
    const auto support = a.row_support(n);
    if (support) {
      // Rows at and beyond the support vanish, so the sup is a finite max.
      double best = 0.0;
      std::size_t arg = *support;  // the all-zero tail row
      for (std::size_t m = 0; m < *support; ++m) {
        const double v = w_row_value_exact(n, m, true);
        if (v > best) {
          best = v;
          arg = m;
        }
      }
      slot = exact_sup(best, arg);
    } else {
      auto ws = w_row_samples(n, true);
      std::vector<LimitSample> run;
      double best = 0.0;
      std::size_t arg = 0;
      for (const auto& s : ws.samples) {
        if (s.value > best) {
          best = s.value;
          arg = s.index;
        }
        run.push_back({s.index, best});
      }
      SupEstimate sup = classify_sup_trail(std::move(run), tol.eps, arg);
      sup.status = worst(sup.status, ws.inner);
      slot = sup;
    }
    return *slot;
  }

  LimitEstimate alpha_hat(std::size_t k) {
    if (k >= alpha_cache.size()) alpha_cache.resize(k + 1);
    auto& slot = alpha_cache[k];
    if (slot) return *slot;
    if (rcount) {
      slot = exact_limit(0.0, std::max<std::size_t>(*rcount, 1));
      return *slot;
    }
    // Sample rows beyond the column index: a banded or diagonal row pattern
    // would otherwise put its bump inside the sample window and mask the
    // settled tail.  Stays within the preallocated row cache.
    const std::size_t hi = tail_rows - 1;
    const std::size_t lo = std::min(k + 1, hi / 2);
    std::vector<LimitSample> samples;
    LimitStatus inner = LimitStatus::converged;
    for (std::size_t p : parity_ladder(tol.window, hi - lo)) {
      const std::size_t n = lo + p;
      const HatRow& row = hat_row(n);
      inner = worst(inner, row.tail);
      samples.push_back({n, k < row.values.size() ? row.values[k] : 0.0});
    }
    slot = merge_inner(estimate_limit(std::move(samples), tol.eps), inner);
    return *slot;
  }

  LimitEstimate beta() {
    if (beta_cache) return *beta_cache;
    if (rcount) {
      beta_cache = exact_limit(0.0, std::max<std::size_t>(*rcount, 1));
      return *beta_cache;
    }
    std::vector<LimitSample> samples;
    LimitStatus inner = LimitStatus::converged;
    for (std::size_t n : parity_ladder(tol.window, tail_rows - 1)) {
      const HatRow& row = hat_row(n);
      const LimitEstimate g = gamma(n);
      inner = worst(inner, worst(row.tail, g.status));
      samples.push_back({n, row.sum - g.value});
    }
    beta_cache = merge_inner(estimate_limit(std::move(samples), tol.eps), inner);
    return *beta_cache;
  }

  LimitEstimate column_sum(bool absolute) {
    auto& slot = absolute ? aabs_cache : asum_cache;
    if (slot) return *slot;
    if (rcount) {
      slot = exact_limit(0.0, std::max<std::size_t>(*rcount, 1));
      return *slot;  // every column limit is exactly zero
    }
    LimitStatus inner = LimitStatus::converged;
    std::vector<LimitSample> partials;
    double acc = 0.0;
    const auto ladder = parity_ladder(std::max<std::size_t>(cols / 8, 4), cols);
    std::size_t li = 0;
    for (std::size_t k = 0; k < cols; ++k) {
      const LimitEstimate ak = alpha_hat(k);
      inner = worst(inner, ak.status);
      acc += absolute ? std::fabs(ak.value) : ak.value;
      if (li < ladder.size() && k + 1 >= ladder[li]) {
        partials.push_back({k + 1, acc});
        ++li;
      }
    }
    slot = merge_inner(estimate_limit(std::move(partials), tol.eps), inner);
    return *slot;
  }

  LimitEstimate delta(std::size_t n) {
    const LimitEstimate asum = column_sum(false);
    const LimitEstimate g = gamma(n);
    const LimitEstimate b = beta();
    LimitEstimate d;
    d.value = asum.value - g.value + b.value;
    d.samples = {{n, d.value}};
    if (asum.status == LimitStatus::converged && g.status == LimitStatus::converged &&
        b.status == LimitStatus::converged) {
      d.status = LimitStatus::converged;
      d.residual = asum.residual + g.residual + b.residual;
    } else {
      d.status = LimitStatus::undetermined;
    }
    return d;
  }

  double bhat_abs_row_sum(std::size_t n) {
    if (rcount) return hat_row(n).abs_sum;  // all column limits vanish exactly
    // Centered mass over the examined columns, plus the row's own mass
    // beyond them (column limits past the truncation are unexamined and
    // enter as zero, matching the plain row sums).
    double acc = 0.0;
    double stored = 0.0;
    for (std::size_t k = 0; k < cols; ++k) {
      const double v = hat_row(n).values[k];
      acc += std::fabs(v - alpha_hat(k).value);
      stored += std::fabs(v);
    }
    return acc + (hat_row(n).abs_sum - stored);
  }

  LimitStatus alpha_status() {
    LimitStatus s = LimitStatus::converged;
    for (std::size_t k = 0; k < cols; ++k) s = worst(s, alpha_hat(k).status);
    return s;
  }
};

Analyzer::Analyzer(const FracOrder& order, const MatrixSpec& a, const ToleranceConfig& tol)
    : impl_(new Impl(order, a, tol)) {}

Analyzer::~Analyzer() = default;

const ToleranceConfig& Analyzer::tol() const { return impl_->tol; }
double Analyzer::order() const { return impl_->order.value(); }
std::size_t Analyzer::cols() const { return impl_->cols; }
std::size_t Analyzer::eval_rows() const { return impl_->eval_rows; }
std::size_t Analyzer::tail_rows() const { return impl_->tail_rows; }
std::optional<std::size_t> Analyzer::row_count() const { return impl_->rcount; }
const HatRow& Analyzer::hat_row(std::size_t n) { return impl_->hat_row(n); }
LimitEstimate Analyzer::gamma(std::size_t n) { return impl_->gamma(n); }
LimitEstimate Analyzer::w_abs_limit(std::size_t n) { return impl_->w_abs_limit(n); }
SupEstimate Analyzer::w_abs_sup(std::size_t n) { return impl_->w_abs_sup(n); }
LimitEstimate Analyzer::alpha_hat(std::size_t k) { return impl_->alpha_hat(k); }
LimitEstimate Analyzer::beta() { return impl_->beta(); }
LimitEstimate Analyzer::alpha_sum() { return impl_->column_sum(false); }
LimitEstimate Analyzer::alpha_abs_sum() { return impl_->column_sum(true); }
LimitEstimate Analyzer::delta(std::size_t n) { return impl_->delta(n); }
double Analyzer::bhat_abs_row_sum(std::size_t n) { return impl_->bhat_abs_row_sum(n); }
LimitStatus Analyzer::alpha_status() { return impl_->alpha_status(); }

// ---------------------------------------------------------------------------
// Free operations on top of the analyzer

HatMatrix hat_matrix(const FracOrder& order, const MatrixSpec& a, std::size_t rows,
                     std::size_t cols, const ToleranceConfig& tol) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("hat matrix needs positive dimensions");
  ToleranceConfig t = tol;
  t.truncate_rows = std::max(t.truncate_rows, rows);
  t.truncate_cols = std::max(t.truncate_cols, cols);
  Analyzer az(order, a, t);
  HatMatrix h;
  h.order = order.value();
  h.cols = cols;
  h.rows.reserve(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    HatRow row = az.hat_row(n);
    row.values.resize(cols);
    h.rows.push_back(std::move(row));
  }
  return h;
}

std::vector<LimitEstimate> gamma_sequence(const FracOrder& order, const MatrixSpec& a,
                                          std::size_t n_max, const ToleranceConfig& tol) {
  if (n_max == 0) throw std::invalid_argument("need at least one row");
  ToleranceConfig t = tol;
  t.truncate_rows = std::max(t.truncate_rows, n_max);
  Analyzer az(order, a, t);
  std::vector<LimitEstimate> out;
  out.reserve(n_max);
  for (std::size_t n = 0; n < n_max; ++n) out.push_back(az.gamma(n));
  return out;
}

LimitEstimate beta_limit(const FracOrder& order, const MatrixSpec& a,
                         const ToleranceConfig& tol) {
  Analyzer az(order, a, tol);
  return az.beta();
}

AlphaHatResult alpha_hat(const FracOrder& order, const MatrixSpec& a, std::size_t k_max,
                         const ToleranceConfig& tol) {
  if (k_max == 0) throw std::invalid_argument("need at least one column");
  ToleranceConfig t = tol;
  t.truncate_cols = std::max(t.truncate_cols, k_max);
  t.truncate_rows = std::max(t.truncate_rows, k_max);
  Analyzer az(order, a, t);
  AlphaHatResult r;
  r.alpha.reserve(k_max);
  for (std::size_t k = 0; k < k_max; ++k) r.alpha.push_back(az.alpha_hat(k));
  r.beta = az.beta();
  r.delta.reserve(k_max);
  for (std::size_t n = 0; n < k_max; ++n) r.delta.push_back(az.delta(n));
  return r;
}

}  // namespace fracseq
