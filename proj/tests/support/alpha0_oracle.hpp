#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Independent oracle for matrix-class verdicts at order zero on finite dense
// matrices.  At order zero the transformed matrix equals the matrix itself,
// the triangle collapses to single entries, and every row limit is the
// eventual value of the finitely supported data, so each summability
// condition can be evaluated directly on the stored rows with no shared code
// with the library's evidence machinery.
namespace oracle {

class DenseConditions {
public:
  DenseConditions(std::vector<std::vector<double>> rows, double eps)
      : rows_(std::move(rows)), eps_(eps) {}

  bool holds(const std::string& id) const {
    if (id == "1A") return std::isfinite(max_row_abs_sum());
    if (id == "1B") return true;   // triangle rows are single entries of a
                                   // finitely supported row: they vanish
    if (id == "2A") return std::isfinite(max_row_abs_sum());
    if (id == "3A") return true;   // gamma_n is the row tail value: zero
    if (id == "3B") return max_abs_row_sum() <= eps_;
    if (id == "4A") return row_abs_sum_beyond_support() <= eps_;
    if (id == "5A") return true;   // columns vanish beyond the stored rows
    if (id == "6A") return row_sum_beyond_support() <= eps_;
    if (id == "7A") return true;   // column limits are exactly zero
    if (id == "7B") return std::isfinite(max_row_abs_sum());
    if (id == "7C") return row_sum_beyond_support() <= eps_;
    if (id == "9A") return true;   // the row-sum limit exists (it is zero)
    if (id == "10A") return std::isfinite(subset_sup());
    if (id == "12A") return std::isfinite(total_abs_row_sum());
    throw std::logic_error("oracle: unknown condition " + id);
  }

  bool bundle_holds(const std::vector<std::string>& ids) const {
    for (const auto& id : ids)
      if (!holds(id)) return false;
    return true;
  }

private:
  double row_abs_sum(std::size_t n) const {
    double s = 0.0;
    for (double v : rows_[n]) s += std::fabs(v);
    return s;
  }

  double row_sum(std::size_t n) const {
    double s = 0.0;
    for (double v : rows_[n]) s += v;
    return s;
  }

  double max_row_abs_sum() const {
    double m = 0.0;
    for (std::size_t n = 0; n < rows_.size(); ++n) m = std::max(m, row_abs_sum(n));
    return m;
  }

  double max_abs_row_sum() const {
    double m = 0.0;
    for (std::size_t n = 0; n < rows_.size(); ++n) m = std::max(m, std::fabs(row_sum(n)));
    return m;
  }

  // Rows past the stored ones are exactly zero; the limits in 4A/6A/7C are
  // their eventual values.
  double row_abs_sum_beyond_support() const { return 0.0; }
  double row_sum_beyond_support() const { return 0.0; }

  double total_abs_row_sum() const {
    double s = 0.0;
    for (std::size_t n = 0; n < rows_.size(); ++n) s += std::fabs(row_sum(n));
    return s;
  }

  // Exhaustive over all column subsets (the matrices are small).
  double subset_sup() const {
    std::size_t cols = 0;
    for (const auto& r : rows_) cols = std::max(cols, r.size());
    double best = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << cols); ++mask) {
      double v = 0.0;
      for (std::size_t n = 0; n < rows_.size(); ++n) {
        double s = 0.0;
        for (std::size_t k = 0; k < rows_[n].size(); ++k)
          if (mask & (std::size_t{1} << k)) s += rows_[n][k];
        v += std::fabs(s);
      }
      best = std::max(best, v);
    }
    return best;
  }

  std::vector<std::vector<double>> rows_;
  double eps_;
};

// Domain-major condition bundles, stated independently of the library.
inline std::vector<std::string> bundle_ids(int bundle) {
  switch (bundle) {
    case 1: return {"1A", "1B"};
    case 2: return {"1A", "2A"};
    case 3: return {"1A", "2A", "3A", "3B"};
    case 4: return {"1B", "4A"};
    case 5: return {"1A", "2A", "5A"};
    case 6: return {"1A", "2A", "3A", "5A", "6A"};
    case 7: return {"1B", "7A", "7B", "7C"};
    case 8: return {"1A", "2A", "7A"};
    case 9: return {"1A", "2A", "3A", "7A", "9A"};
    case 10: return {"1B", "10A"};
    case 11: return {"2A", "10A"};
    case 12: return {"2A", "3A", "10A", "12A"};
    default: throw std::logic_error("oracle: unknown bundle");
  }
}

}  // namespace oracle
