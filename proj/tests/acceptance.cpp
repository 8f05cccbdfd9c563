// Acceptance gate: one line per criterion, [PASS] or [FAIL], with the
// tolerance and the measured quantity.  Exit status is the number of
// failures.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fracseq/classify.hpp"
#include "fracseq/coeffs.hpp"
#include "fracseq/compact.hpp"
#include "fracseq/dual.hpp"
#include "fracseq/spaces.hpp"
#include "fracseq/transform.hpp"
#include "support/alpha0_oracle.hpp"

using namespace fracseq;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
const ToleranceConfig kTol;

// Trails collected from every measure/compactness call in this suite; the
// monotonicity criterion is asserted over all of them at the end.
std::vector<std::vector<LimitSample>> g_trails;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

HmncBounds tracked_hmnc(const FracOrder& o, const MatrixSpec& a, SpaceId f, SpaceId t) {
  HmncBounds b = hmnc_bounds(o, a, f, t, kTol);
  g_trails.push_back(b.trail);
  return b;
}

CompactnessVerdict tracked_compact(const FracOrder& o, const MatrixSpec& a, SpaceId f,
                                   SpaceId t) {
  CompactnessVerdict v = is_compact(o, a, f, t, kTol);
  g_trails.push_back(v.trail);
  return v;
}

// --------------------------------------------------------------------------

void criterion_coefficients() {
  const struct {
    double alpha;
    std::array<double, 5> want;
  } cases[] = {
      {0.5, {1.0, -0.5, -1.0 / 8, -1.0 / 16, -5.0 / 128}},
      {-0.5, {1.0, 0.5, 3.0 / 8, 5.0 / 16, 35.0 / 128}},
      {2.0 / 3.0, {1.0, -2.0 / 3, -1.0 / 9, -4.0 / 81, -7.0 / 243}},
  };
  const auto t0 = Clock::now();
  double max_rel = 0.0;
  for (const auto& c : cases) {
    const CoeffSeries s = frac_coeffs(FracOrder(c.alpha), 5);
    for (std::size_t i = 0; i < 5; ++i) {
      const double denom = std::max(1.0, std::fabs(c.want[i]));
      max_rel = std::max(max_rel, std::fabs(s[i] - c.want[i]) / denom);
    }
  }
  const double secs = seconds_since(t0);
  report("coefficient reproduction (orders 1/2, -1/2, 2/3; first 5 terms)",
         max_rel <= 1e-12 && secs < 1e-3,
         "max relative error " + fmt(max_rel) + " (tol 1e-12), " + fmt(secs * 1e3) +
             " ms (limit 1)");
}

void criterion_series_identities() {
  std::mt19937 rng(1001);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const auto t0 = Clock::now();
  double worst_dev = 0.0;
  int done = 0;
  while (done < 100) {
    const double a = dist(rng), b = dist(rng);
    if (FracOrder::is_pole(a) || FracOrder::is_pole(b) || FracOrder::is_pole(a + b))
      continue;
    ++done;
    const CoeffSeries ca = frac_coeffs(FracOrder(a), 64);
    const CoeffSeries cb = frac_coeffs(FracOrder(b), 64);
    const CoeffSeries cs = frac_coeffs_unchecked(a + b, 64);
    const std::vector<double> conv = convolve(ca, cb);
    for (std::size_t i = 0; i < 64; ++i)
      worst_dev = std::max(worst_dev, std::fabs(conv[i] - cs.terms[i]));

    const CoeffSeries inv = frac_coeffs_unchecked(-a, 64);
    const std::vector<double> unit = convolve(ca, inv);
    worst_dev = std::max(worst_dev, std::fabs(unit[0] - 1.0));
    for (std::size_t i = 1; i < 64; ++i) worst_dev = std::max(worst_dev, std::fabs(unit[i]));
  }
  const double secs = seconds_since(t0);
  report("series identities (semigroup + inverse pair, 100 random order pairs, N=64)",
         worst_dev <= 1e-10 && secs < 1.0,
         "max deviation " + fmt(worst_dev) + " (tol 1e-10), " + fmt(secs) + " s (limit 1)");
}

void criterion_round_trip() {
  std::mt19937 rng(1002);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  std::uniform_real_distribution<double> ord(-2.0, 2.0);
  const auto t0 = Clock::now();
  double worst_rel = 0.0;
  int done = 0;
  while (done < 100) {
    const double alpha = ord(rng);
    if (FracOrder::is_pole(alpha)) continue;
    ++done;
    Seq x(200);
    for (double& v : x) v = val(rng);
    const Seq z = apply_inverse(FracOrder(alpha), apply_forward(FracOrder(alpha), x));
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double denom = std::max(1.0, std::fabs(x[k]));
      worst_rel = std::max(worst_rel, std::fabs(z[k] - x[k]) / denom);
    }
  }
  const double secs = seconds_since(t0);
  report("round trip (inverse after forward, 100 random length-200 sequences)",
         worst_rel <= 1e-9 && secs < 1.0,
         "max relative error " + fmt(worst_rel) + " (tol 1e-9), " + fmt(secs) +
             " s (limit 1)");
}

void criterion_pairing() {
  std::mt19937 rng(1003);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  const auto t0 = Clock::now();
  double worst_disc = 0.0;
  for (SpaceId space : {SpaceId::C0Delta, SpaceId::CDelta, SpaceId::LinfDelta}) {
    for (int trial = 0; trial < 200; ++trial) {
      const double alpha = trial % 2 == 0 ? 0.5 : 2.0 / 3.0;
      Seq a(1 + trial % 6);
      for (double& v : a) v = val(rng);

      Seq y(40, 0.0);
      if (space == SpaceId::C0Delta) {
        for (std::size_t i = 0; i < 6; ++i) y[i] = val(rng);
      } else if (space == SpaceId::CDelta) {
        const double xi = val(rng) + 2.0;
        y.assign(40, xi);
        for (std::size_t i = 0; i < 5; ++i) y[i] += val(rng);
      } else {
        for (std::size_t i = 0; i < y.size(); ++i)
          y[i] = (i % 2 == 0 ? 1.0 : -1.0) * (0.5 + 0.5 * val(rng));
      }
      const Seq x = apply_inverse(FracOrder(alpha), y);
      const PairingResult p = pairing(FracOrder(alpha), a, x, space, kTol);
      worst_disc = std::max(worst_disc, p.discrepancy);
    }
  }
  const double secs = seconds_since(t0);
  report("duality pairing (200 finite-support trials per domain space)",
         worst_disc <= 1e-8 && secs < 2.0,
         "max discrepancy " + fmt(worst_disc) + " (tol 1e-8), " + fmt(secs) +
             " s (limit 2)");
}

void criterion_norm_monte_carlo() {
  std::mt19937 rng(1004);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_int_distribution<std::size_t> nrows(1, 6), ncols(1, 5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);

  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  for (int m = 0; m < 20 && ok; ++m) {
    std::vector<std::vector<double>> rows(nrows(rng));
    std::size_t width = 0;
    for (auto& r : rows) {
      r.resize(ncols(rng));
      for (double& v : r) v = val(rng);
      width = std::max(width, r.size());
    }
    const MatrixSpec a = MatrixSpec::finite_rank(rows);

    for (double alpha : {0.0, 0.5}) {
      const NormEstimate n = sup_norm(FracOrder(alpha), a, SpaceId::C0Delta, kTol);
      const double v = n.upper;
      double best = 0.0;
      for (int s = 0; s < 500; ++s) {
        Seq y(width);
        if (s % 2 == 0)
          for (double& t : y) t = coin(rng) ? 1.0 : -1.0;
        else
          for (double& t : y) t = unit(rng);
        const Seq x = apply_inverse(FracOrder(alpha), y);
        double norm_ax = 0.0;
        for (const auto& r : rows) {
          double dot = 0.0;
          for (std::size_t k = 0; k < r.size(); ++k) dot += r[k] * x[k];
          norm_ax = std::max(norm_ax, std::fabs(dot));
        }
        if (norm_ax > v * (1.0 + 1e-6)) {
          ok = false;
          why = "sample exceeded the norm: " + fmt(norm_ax) + " > " + fmt(v);
          break;
        }
        best = std::max(best, norm_ax);
      }
      if (ok && best < 0.9 * v) {
        ok = false;
        why = "samples reached only " + fmt(best) + " of norm " + fmt(v);
      }
    }
  }
  const double secs = seconds_since(t0);
  if (ok && secs >= 10.0) {
    ok = false;
    why = "overtime";
  }
  if (ok) why = "500 unit-ball samples per matrix stayed within the identity and reached 90%";
  report("norm identity, Monte-Carlo (20 random finite-rank, orders 0 and 1/2)", ok,
         why + ", " + fmt(secs) + " s (limit 10)");
}

void criterion_group_norm_oracle() {
  std::mt19937 rng(1005);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_int_distribution<std::size_t> nrows(1, 10), ncols(1, 5);

  const auto t0 = Clock::now();
  bool ok = true;
  std::string why = "subset suprema bitwise equal, upper = 4 x lower";
  for (int m = 0; m < 30 && ok; ++m) {
    std::vector<std::vector<double>> rows(nrows(rng));
    std::size_t width = 0;
    for (auto& r : rows) {
      r.resize(ncols(rng));
      for (double& v : r) v = val(rng);
      width = std::max(width, r.size());
    }
    const MatrixSpec a = MatrixSpec::finite_rank(rows);
    const FracOrder half(0.5);
    const NormEstimate g = group_norm(half, a, SpaceId::C0Delta, 20, kTol);

    std::vector<Seq> hat;
    for (const auto& r : rows) hat.push_back(r_transform_values(half, r));
    double best = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << rows.size()); ++mask) {
      double v = 0.0;
      for (std::size_t k = 0; k < width; ++k) {
        double s = 0.0;
        for (std::size_t n = 0; n < rows.size(); ++n)
          if ((mask & (std::size_t{1} << n)) && k < hat[n].size()) s += hat[n][k];
        v += std::fabs(s);
      }
      if (v > best) best = v;
    }
    if (g.lower != best) {
      ok = false;
      why = "matrix " + std::to_string(m) + ": library " + fmt(g.lower) + " vs oracle " +
            fmt(best);
    } else if (g.upper != 4.0 * g.lower) {
      ok = false;
      why = "sandwich upper is not 4 x lower";
    }
  }
  const double secs = seconds_since(t0);
  if (ok && secs >= 5.0) {
    ok = false;
    why = "overtime";
  }
  report("group-norm oracle (30 random matrices, <= 10 effective rows, exact equality)",
         ok, why + ", " + fmt(secs) + " s (limit 5)");
}

void criterion_alpha_zero_reduction() {
  std::mt19937 rng(1006);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_int_distribution<std::size_t> nrows(1, 5), ncols(1, 4);

  const auto t0 = Clock::now();
  bool ok = true;
  std::string why = "all 12 bundle verdicts coincide on every matrix";
  for (int m = 0; m < 20 && ok; ++m) {
    std::vector<std::vector<double>> rows(nrows(rng));
    for (auto& r : rows) {
      r.resize(ncols(rng));
      for (double& v : r) v = val(rng);
    }
    if (m % 4 == 0) {
      for (auto& r : rows) {
        double s = 0.0;
        for (double v : r) s += v;
        r.push_back(-s);  // balanced rows exercise the zero test's pass side
      }
    }
    const MatrixSpec a = MatrixSpec::finite_rank(rows);
    const oracle::DenseConditions direct(rows, kTol.eps);
    const auto table = class_table(FracOrder(0.0), a, kTol);
    for (const auto& cell : table) {
      const int bundle = std::stoi(cell.bundle.substr(1, cell.bundle.size() - 2));
      const bool want = direct.bundle_holds(oracle::bundle_ids(bundle));
      const ConditionVerdict want_v = want ? ConditionVerdict::holds : ConditionVerdict::fails;
      if (cell.verdict != want_v) {
        ok = false;
        why = "matrix " + std::to_string(m) + " bundle " + cell.bundle + ": library " +
              to_string(cell.verdict) + " vs oracle " + to_string(want_v);
        break;
      }
    }
  }
  const double secs = seconds_since(t0);
  if (ok && secs >= 5.0) {
    ok = false;
    why = "overtime";
  }
  report("order-zero reduction (20 random finite-rank, direct predicates on the rows)",
         ok, why + ", " + fmt(secs) + " s (limit 5)");
}

void criterion_compactness_laws() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  const std::vector<SpaceId> froms{SpaceId::LinfDelta, SpaceId::C0Delta, SpaceId::CDelta};
  const std::vector<SpaceId> tos{SpaceId::Linf, SpaceId::C0, SpaceId::C, SpaceId::L1};

  const MatrixSpec fr =
      MatrixSpec::finite_rank({{1.0, -2.0, 3.0}, {0.5, 0.5}, {4.0, 0.0, -1.0, 2.0}});
  for (double order : {0.0, 0.5}) {
    for (SpaceId f : froms)
      for (SpaceId t : tos) {
        const HmncBounds b = tracked_hmnc(FracOrder(order), fr, f, t);
        const CompactnessVerdict v = tracked_compact(FracOrder(order), fr, f, t);
        if (b.lower != 0.0 || b.upper != 0.0 || v.verdict != Compactness::compact) {
          ok = false;
          why = std::string("finite rank not compact at (") + std::string(space_tag(f)) +
                "," + std::string(space_tag(t)) + ")";
        }
      }
  }

  const MatrixSpec id = MatrixSpec::diagonal([](std::size_t) { return 1.0; });
  if (ok) {
    const HmncBounds b = tracked_hmnc(FracOrder(0.0), id, SpaceId::C0Delta, SpaceId::C0);
    const CompactnessVerdict v =
        tracked_compact(FracOrder(0.0), id, SpaceId::C0Delta, SpaceId::C0);
    if (std::fabs(b.lower - 1.0) > 1e-9 || std::fabs(b.upper - 1.0) > 1e-9) {
      ok = false;
      why = "identity measure bounds are not 1 +/- 1e-9";
    } else if (v.verdict != Compactness::not_compact) {
      ok = false;
      why = "identity verdict is not not_compact";
    }
  }

  if (ok) {
    const MatrixSpec d = MatrixSpec::diagonal(
        [](std::size_t n) { return std::pow(2.0, -static_cast<double>(n)); });
    const HmncBounds b = tracked_hmnc(FracOrder(0.0), d, SpaceId::C0Delta, SpaceId::C0);
    const CompactnessVerdict v =
        tracked_compact(FracOrder(0.0), d, SpaceId::C0Delta, SpaceId::C0);
    if (v.verdict != Compactness::compact) {
      ok = false;
      why = "geometric diagonal not compact";
    } else {
      for (const auto& s : b.trail) {
        const double want = std::pow(2.0, -static_cast<double>(s.index + 1));
        if (std::fabs(s.value - want) > 1e-12) {
          ok = false;
          why = "geometric diagonal trail differs from 2^-(r+1) at r=" +
                std::to_string(s.index);
          break;
        }
      }
    }
  }

  const double secs = seconds_since(t0);
  if (ok && secs >= 5.0) {
    ok = false;
    why = "overtime";
  }
  if (ok)
    why = "finite rank compact everywhere; identity bounds [1,1]; geometric trail 2^-(r+1)";
  report("compactness laws (finite rank, identity, geometric diagonal)", ok,
         why + ", " + fmt(secs) + " s (limit 5)");
}

void criterion_trail_monotonicity() {
  bool ok = true;
  std::string why = "all " + std::to_string(g_trails.size()) + " collected trails nonincreasing";
  for (const auto& trail : g_trails) {
    for (std::size_t i = 1; i < trail.size(); ++i) {
      if (trail[i].value > trail[i - 1].value + 1e-12) {
        ok = false;
        why = "a tail-quantity trail increased at r=" + std::to_string(trail[i].index);
        break;
      }
    }
    if (!ok) break;
  }
  report("trail monotonicity (every measure/compactness trail in this suite)", ok, why);
}

#if defined(FRACSEQ_CLI_PATH) && defined(FRACSEQ_GOLDEN_DIR)
std::string run_capture(const std::string& cmd, int* exit_code) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_cli_determinism() {
  const std::array<std::pair<const char*, const char*>, 3> cases{{
      {"coeffs --alpha 1/2 --n 5", "coeffs_half.json"},
      {"coeffs --alpha -1/2 --n 5", "coeffs_neg_half.json"},
      {"coeffs --alpha 2/3 --n 5", "coeffs_two_thirds.json"},
  }};
  bool ok = true;
  std::string why = "two runs byte-identical and equal to the goldens";
  for (const auto& [args, golden] : cases) {
    int e1 = 0, e2 = 0;
    const std::string cmd = std::string(FRACSEQ_CLI_PATH) + " " + args;
    const std::string a = run_capture(cmd, &e1);
    const std::string b = run_capture(cmd, &e2);
    std::ifstream gf(std::string(FRACSEQ_GOLDEN_DIR) + "/" + golden);
    std::ostringstream ss;
    ss << gf.rdbuf();
    if (e1 != 0 || e2 != 0 || a != b || a != ss.str() || a.empty()) {
      ok = false;
      why = std::string("mismatch for '") + args + "'";
      break;
    }
  }
  report("command-line determinism (three golden coefficient reports, repeated runs)", ok,
         why);
}
#endif

}  // namespace

int main() {
  criterion_coefficients();
  criterion_series_identities();
  criterion_round_trip();
  criterion_pairing();
  criterion_norm_monte_carlo();
  criterion_group_norm_oracle();
  criterion_alpha_zero_reduction();
  criterion_compactness_laws();
  criterion_trail_monotonicity();
#if defined(FRACSEQ_CLI_PATH) && defined(FRACSEQ_GOLDEN_DIR)
  criterion_cli_determinism();
#endif
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return g_failures;
}
