#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fracseq/transform.hpp"

// Finite-subset suprema shared by the group norm, condition 10A, and the
// subset rows of the noncompactness table.

namespace fracseq::detail {

struct SubsetBest {
  double value = 0.0;
  std::size_t seed = 0;  // bitmask (exhaustive) or first index (greedy)
  const char* method = "exhaustive";
};

template <typename Eval>
SubsetBest exhaustive_subsets(const std::vector<std::size_t>& pool, Eval&& eval) {
  SubsetBest best;
  const std::size_t e = pool.size();
  std::vector<std::size_t> sel;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e); ++mask) {
    sel.clear();
    for (std::size_t i = 0; i < e; ++i)
      if (mask & (std::uint64_t{1} << i)) sel.push_back(pool[i]);
    const double v = eval(sel);
    if (v > best.value) {
      best.value = v;
      best.seed = static_cast<std::size_t>(mask);
    }
  }
  return best;
}

/// sum_k |sum_{n in rows} hat(n,k)|, plus |sum gamma_n| when add_gamma.
inline double group_value(Analyzer& az, const std::vector<std::size_t>& rows,
                          bool add_gamma) {
  double total = 0.0;
  for (std::size_t k = 0; k < az.cols(); ++k) {
    double s = 0.0;
    for (std::size_t n : rows) s += az.hat_row(n).values[k];
    total += std::fabs(s);
  }
  if (add_gamma) {
    double g = 0.0;
    for (std::size_t n : rows) g += az.gamma(n).value;
    total += std::fabs(g);
  }
  return total;
}

/// Greedy over large row pools: best singleton, then best-improvement
/// additions.  Keeps running column sums so each candidate costs one pass
/// over the columns instead of one pass per selected row.
inline SubsetBest greedy_rows(Analyzer& az, const std::vector<std::size_t>& pool,
                              bool add_gamma) {
  SubsetBest best;
  best.method = "greedy";
  if (pool.empty()) return best;

  const std::size_t cols = az.cols();
  std::vector<const double*> vals(pool.size());
  std::vector<double> gam(pool.size(), 0.0);
  for (std::size_t i = 0; i < pool.size(); ++i) az.hat_row(pool[i]);  // build caches
  for (std::size_t i = 0; i < pool.size(); ++i) {
    vals[i] = az.hat_row(pool[i]).values.data();
    if (add_gamma) gam[i] = az.gamma(pool[i]).value;
  }

  std::vector<double> sum(cols, 0.0);
  double gsum = 0.0;
  auto gain = [&](std::size_t i) {
    double t = 0.0;
    for (std::size_t k = 0; k < cols; ++k) t += std::fabs(sum[k] + vals[i][k]);
    if (add_gamma) t += std::fabs(gsum + gam[i]);
    return t;
  };

  std::vector<char> used(pool.size(), 0);
  double cur = 0.0;
  for (;;) {
    double bv = cur;
    std::size_t bi = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      const double v = gain(i);
      if (v > bv) {
        bv = v;
        bi = i;
      }
    }
    if (bi == pool.size()) break;
    used[bi] = 1;
    if (cur == 0.0) best.seed = pool[bi];
    for (std::size_t k = 0; k < cols; ++k) sum[k] += vals[bi][k];
    gsum += gam[bi];
    cur = bv;
  }
  best.value = cur;
  return best;
}

inline SubsetBest row_subset_sup(Analyzer& az, const std::vector<std::size_t>& pool,
                                 bool add_gamma, std::size_t budget) {
  if (pool.size() <= budget) {
    auto eval = [&](const std::vector<std::size_t>& sel) {
      return group_value(az, sel, add_gamma);
    };
    return exhaustive_subsets(pool, eval);
  }
  return greedy_rows(az, pool, add_gamma);
}

/// Column-subset counterpart for the summable-codomain condition:
/// sum_{n < n_rows} |sum_{k in cols} hat(n,k)|, with running row sums.
inline SubsetBest greedy_columns(Analyzer& az, std::size_t n_rows,
                                 const std::vector<std::size_t>& pool) {
  SubsetBest best;
  best.method = "greedy";
  if (pool.empty()) return best;

  std::vector<const double*> rows(n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) az.hat_row(n);
  for (std::size_t n = 0; n < n_rows; ++n) rows[n] = az.hat_row(n).values.data();

  std::vector<double> sum(n_rows, 0.0);
  auto gain = [&](std::size_t c) {
    double t = 0.0;
    for (std::size_t n = 0; n < n_rows; ++n) t += std::fabs(sum[n] + rows[n][c]);
    return t;
  };

  std::vector<char> used(pool.size(), 0);
  double cur = 0.0;
  for (;;) {
    double bv = cur;
    std::size_t bi = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      const double v = gain(pool[i]);
      if (v > bv) {
        bv = v;
        bi = i;
      }
    }
    if (bi == pool.size()) break;
    used[bi] = 1;
    if (cur == 0.0) best.seed = pool[bi];
    for (std::size_t n = 0; n < n_rows; ++n) sum[n] += rows[n][pool[bi]];
    cur = bv;
  }
  best.value = cur;
  return best;
}

}  // namespace fracseq::detail
