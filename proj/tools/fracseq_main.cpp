#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fracseq/classify.hpp"
#include "fracseq/coeffs.hpp"
#include "fracseq/compact.hpp"
#include "fracseq/dual.hpp"
#include "fracseq/io.hpp"
#include "fracseq/report.hpp"
#include "fracseq/spaces.hpp"
#include "fracseq/transform.hpp"

namespace {

using namespace fracseq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndetermined = 2;

// Orders accept plain decimals and "p/q" fractions, so exact thirds and
// halves survive the command line.
double parse_order(const std::string& s) {
  auto to_d = [](const std::string& t) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse order: " + t);
    }
    if (pos != t.size()) throw std::invalid_argument("cannot parse order: " + t);
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return to_d(s);
  const double num = to_d(s.substr(0, slash));
  const double den = to_d(s.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in order: " + s);
  return num / den;
}

SpaceId parse_space(const std::string& tag) {
  const auto s = parse_space_tag(tag);
  if (!s) throw std::invalid_argument("unknown space tag: " + tag);
  return *s;
}

struct Options {
  std::string alpha = "0";
  std::string beta;
  std::size_t n = kDefaultSeriesLength;
  std::string input;
  std::string pair;
  std::string matrix;
  std::string from_tag;
  std::string to_tag;
  std::string space_tag;
  std::size_t rows = 8;
  std::size_t cols = 8;
  bool inverse = false;
  bool group = false;
  std::string format = "json";

  ToleranceConfig tol;
  std::vector<CLI::Option*> eps_opts;

  FracOrder order() const { return FracOrder(parse_order(alpha)); }

  bool eps_flag_given() const {
    for (const CLI::Option* opt : eps_opts)
      if (opt->count() > 0) return true;
    return false;
  }

  ToleranceConfig tolerance() const {
    ToleranceConfig t = tol;
    if (!eps_flag_given()) {
      if (const char* env = std::getenv("FRACSEQ_EPS")) {
        try {
          t.eps = std::stod(env);
        } catch (const std::exception&) {
          throw std::invalid_argument(std::string("FRACSEQ_EPS is not a number: ") + env);
        }
      }
    }
    t.validate();
    return t;
  }
};

void add_tolerance_flags(CLI::App* cmd, Options& o) {
  o.eps_opts.push_back(cmd->add_option("--eps", o.tol.eps,
                                       "convergence / zero-test tolerance "
                                       "(FRACSEQ_EPS overrides the default)"));
  cmd->add_option("--window", o.tol.window, "trailing-window length");
  cmd->add_option("--subset-budget", o.tol.subset_budget,
                  "exhaustive subset enumeration up to 2^budget");
  cmd->add_option("--truncate-rows", o.tol.truncate_rows, "matrix row truncation");
  cmd->add_option("--truncate-cols", o.tol.truncate_cols, "matrix column truncation");
}

int status_exit(LimitStatus s) {
  return s == LimitStatus::undetermined ? kExitUndetermined : kExitOk;
}

void emit(const Report& r) { std::cout << dump_report(r); }

// ---------------------------------------------------------------------------

int run_coeffs(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const CoeffSeries c = frac_coeffs(order, o.n);

  Report result{{"order", c.order}, {"terms", c.terms}};
  result["tail"] = tail_bound_json(tail_sum_bound(c));
  std::vector<std::string> notes;
  if (!o.beta.empty()) {
    const FracOrder other(parse_order(o.beta));
    const CoeffSeries cb = frac_coeffs(other, o.n);
    const CoeffSeries sum = frac_coeffs_unchecked(order.value() + other.value(), o.n);
    const auto conv = convolve(c, cb);
    double dev = 0.0;
    for (std::size_t i = 0; i < conv.size(); ++i)
      dev = std::max(dev, std::fabs(conv[i] - sum.terms[i]));
    result["semigroup"] = Report{{"beta", other.value()},
                                 {"sum_order", order.value() + other.value()},
                                 {"max_deviation", dev}};
    notes.push_back("convolving the two series must reproduce the summed order");
  }
  emit(make_report("coeffs", tol,
                   Report{{"alpha", order.value()}, {"n", o.n}}, result, notes));
  return kExitOk;
}

int run_apply(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const Seq x = load_seq_file(o.input);
  const Seq y = o.inverse ? apply_inverse(order, x) : apply_forward(order, x);
  emit(make_report(
      "apply", tol,
      Report{{"alpha", order.value()}, {"input", o.input}, {"inverse", o.inverse}},
      Report{{"terms", y}}));
  return kExitOk;
}

int run_classify_seq(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const Seq x = load_seq_file(o.input);
  const MembershipVerdict v = classify_sequence(order, x, tol);
  emit(make_report("classify-seq", tol,
                   Report{{"alpha", order.value()}, {"input", o.input}},
                   membership_json(v),
                   {"verdict read from the trailing window of the transformed "
                    "sequence"}));
  return v.status == MembershipStatus::undetermined ? kExitUndetermined : kExitOk;
}

int run_hat(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const MatrixSpec a = load_matrix_file(o.matrix);
  const HatMatrix h = hat_matrix(order, a, o.rows, o.cols, tol);
  LimitStatus worst_tail = LimitStatus::converged;
  for (const auto& row : h.rows) worst_tail = worst(worst_tail, row.tail);
  emit(make_report("hat", tol,
                   Report{{"alpha", order.value()},
                          {"matrix", o.matrix},
                          {"rows", o.rows},
                          {"cols", o.cols}},
                   hat_json(h),
                   {"hat(n,k) = sum_{j>=k} c_{j-k}(-alpha) A(n,j)"}));
  return status_exit(worst_tail);
}

int run_beta_dual(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const Seq a = load_seq_file(o.input);
  const SpaceId space = parse_space(o.space_tag);
  const BetaDualReport rep = check_beta_dual(order, a, space, tol);

  Report result = beta_dual_json(rep);
  std::vector<std::string> notes{
      "triangle conditions evaluated on w rows (w form)"};
  if (!o.pair.empty()) {
    const Seq x = load_seq_file(o.pair);
    result["pairing"] = pairing_json(pairing(order, a, x, space, tol));
    notes.push_back(
        "pairing compares sum a_k x_k against the transformed series");
  }
  emit(make_report("beta-dual", tol,
                   Report{{"alpha", order.value()},
                          {"input", o.input},
                          {"space", o.space_tag}},
                   std::move(result), notes));
  return rep.overall == ConditionVerdict::undetermined ? kExitUndetermined
                                                       : kExitOk;
}

int run_class(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const MatrixSpec a = load_matrix_file(o.matrix);
  const ClassVerdict v = class_membership(order, a, parse_space(o.from_tag),
                                          parse_space(o.to_tag), tol);
  emit(make_report("class", tol,
                   Report{{"alpha", order.value()},
                          {"matrix", o.matrix},
                          {"from", o.from_tag},
                          {"to", o.to_tag}},
                   class_json(v),
                   {"condition ids follow the domain-major bundles [1]-[12]"}));
  return v.verdict == ConditionVerdict::undetermined ? kExitUndetermined : kExitOk;
}

const char* class_verdict_word(ConditionVerdict v) {
  return v == ConditionVerdict::holds ? "member" : to_string(v);
}

int run_class_table(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const MatrixSpec a = load_matrix_file(o.matrix);
  const std::vector<ClassVerdict> table = class_table(order, a, tol);

  bool any_undetermined = false;
  for (const auto& v : table)
    any_undetermined =
        any_undetermined || v.verdict == ConditionVerdict::undetermined;

  if (o.format == "table") {
    const std::vector<SpaceId> froms{SpaceId::LinfDelta, SpaceId::C0Delta,
                                     SpaceId::CDelta};
    std::cout << std::left << std::setw(8) << "to\\from";
    for (SpaceId f : froms) std::cout << std::setw(16) << space_tag(f);
    std::cout << "\n";
    for (std::size_t row = 0; row < 4; ++row) {
      std::cout << std::setw(8) << space_tag(table[3 * row].to);
      for (std::size_t col = 0; col < 3; ++col) {
        const auto& v = table[3 * row + col];
        std::ostringstream cell;
        cell << v.bundle << " " << class_verdict_word(v.verdict);
        std::cout << std::setw(16) << cell.str();
      }
      std::cout << "\n";
    }
  } else {
    Report cells = Report::array();
    for (const auto& v : table) cells.push_back(class_json(v));
    emit(make_report("class-table", tol,
                     Report{{"alpha", order.value()}, {"matrix", o.matrix}},
                     Report{{"cells", std::move(cells)}},
                     {"condition ids follow the domain-major bundles [1]-[12]"}));
  }
  return any_undetermined ? kExitUndetermined : kExitOk;
}

int run_norm(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const MatrixSpec a = load_matrix_file(o.matrix);
  const SpaceId from = parse_space(o.from_tag);
  const NormEstimate n = o.group
                             ? group_norm(order, a, from, tol.subset_budget, tol)
                             : sup_norm(order, a, from, tol);
  std::vector<std::string> notes;
  if (o.group) {
    notes.push_back("sandwich: the operator norm lies in [lower, 4*lower]");
  } else {
    notes.push_back(from == SpaceId::CDelta
                        ? "identity: sup of transformed row l1 norms plus |gamma_n|"
                        : "identity: sup of transformed row l1 norms");
  }
  emit(make_report("norm", tol,
                   Report{{"alpha", order.value()},
                          {"matrix", o.matrix},
                          {"from", o.from_tag},
                          {"group", o.group}},
                   norm_json(n), notes));
  return status_exit(n.status);
}

std::vector<std::string> tail_notes(int row) {
  std::vector<std::string> notes{
      "tail sups drop rows up to and including the cutoff r"};
  if (row == 3 || row == 5)
    notes.push_back("the (linf,linf) norm is read as the sup of row l1 norms");
  if (row == 6)
    notes.push_back(
        "delta_n is evaluated as sum_k alpha_hat_k - gamma_n + beta (the "
        "+beta form)");
  return notes;
}

int run_hmnc(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const MatrixSpec a = load_matrix_file(o.matrix);
  const HmncBounds b =
      hmnc_bounds(order, a, parse_space(o.from_tag), parse_space(o.to_tag), tol);
  emit(make_report("hmnc", tol,
                   Report{{"alpha", order.value()},
                          {"matrix", o.matrix},
                          {"from", o.from_tag},
                          {"to", o.to_tag}},
                   hmnc_json(b), tail_notes(b.formula_row)));
  return status_exit(b.status);
}

int run_compact(const Options& o) {
  const ToleranceConfig tol = o.tolerance();
  const FracOrder order = o.order();
  const MatrixSpec a = load_matrix_file(o.matrix);
  const CompactnessVerdict v =
      is_compact(order, a, parse_space(o.from_tag), parse_space(o.to_tag), tol);
  auto notes = tail_notes(v.formula_row);
  if (!v.iff)
    notes.push_back(
        "bounded codomain: the criterion is one-directional, so a nonzero "
        "limit stays undetermined");
  emit(make_report("compact", tol,
                   Report{{"alpha", order.value()},
                          {"matrix", o.matrix},
                          {"from", o.from_tag},
                          {"to", o.to_tag}},
                   compact_json(v), notes));
  return v.verdict == Compactness::undetermined ? kExitUndetermined : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional-order difference sequence-space toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* coeffs = app.add_subcommand("coeffs", "coefficient series of the operator");
  coeffs->add_option("--alpha", o.alpha, "fractional order (decimal or p/q)")->required();
  coeffs->add_option("--n", o.n, "number of terms");
  coeffs->add_option("--beta", o.beta, "second order for the semigroup check");
  add_tolerance_flags(coeffs, o);

  auto* apply = app.add_subcommand("apply", "apply the difference operator to a sequence");
  apply->add_option("--alpha", o.alpha)->required();
  apply->add_option("--input", o.input, "sequence JSON file")->required();
  apply->add_flag("--inverse", o.inverse, "apply the inverse operator");
  add_tolerance_flags(apply, o);

  auto* cseq = app.add_subcommand("classify-seq", "domain-space membership of a sequence");
  cseq->add_option("--alpha", o.alpha)->required();
  cseq->add_option("--input", o.input, "sequence JSON file")->required();
  add_tolerance_flags(cseq, o);

  auto* hat = app.add_subcommand("hat", "transformed matrix rows");
  hat->add_option("--alpha", o.alpha)->required();
  hat->add_option("--matrix", o.matrix, "matrix JSON file")->required();
  hat->add_option("--rows", o.rows, "rows to report");
  hat->add_option("--cols", o.cols, "columns to report");
  add_tolerance_flags(hat, o);

  auto* dual = app.add_subcommand("beta-dual", "coordinate-functional conditions");
  dual->add_option("--alpha", o.alpha)->required();
  dual->add_option("--input", o.input, "functional JSON file")->required();
  dual->add_option("--space", o.space_tag, "domain space: c0d | cd | linfd")->required();
  dual->add_option("--pair", o.pair, "sequence JSON file for the pairing check");
  add_tolerance_flags(dual, o);

  auto* cls = app.add_subcommand("class", "matrix-class membership for one pair");
  cls->add_option("--alpha", o.alpha)->required();
  cls->add_option("--matrix", o.matrix)->required();
  cls->add_option("--from", o.from_tag, "domain: c0d | cd | linfd")->required();
  cls->add_option("--to", o.to_tag, "codomain: c0 | c | linf | l1")->required();
  add_tolerance_flags(cls, o);

  auto* table = app.add_subcommand("class-table", "matrix-class sweep over all pairs");
  table->add_option("--alpha", o.alpha)->required();
  table->add_option("--matrix", o.matrix)->required();
  table->add_option("--format", o.format, "json | table");
  add_tolerance_flags(table, o);

  auto* norm = app.add_subcommand("norm", "operator norm");
  norm->add_option("--alpha", o.alpha)->required();
  norm->add_option("--matrix", o.matrix)->required();
  norm->add_option("--from", o.from_tag)->required();
  norm->add_flag("--group", o.group, "group norm (summable codomain) instead of sup norm");
  add_tolerance_flags(norm, o);

  auto* hmnc = app.add_subcommand("hmnc", "noncompactness measure bounds");
  hmnc->add_option("--alpha", o.alpha)->required();
  hmnc->add_option("--matrix", o.matrix)->required();
  hmnc->add_option("--from", o.from_tag)->required();
  hmnc->add_option("--to", o.to_tag)->required();
  add_tolerance_flags(hmnc, o);

  auto* compact = app.add_subcommand("compact", "compactness verdict");
  compact->add_option("--alpha", o.alpha)->required();
  compact->add_option("--matrix", o.matrix)->required();
  compact->add_option("--from", o.from_tag)->required();
  compact->add_option("--to", o.to_tag)->required();
  add_tolerance_flags(compact, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(o);
    if (apply->parsed()) return run_apply(o);
    if (cseq->parsed()) return run_classify_seq(o);
    if (hat->parsed()) return run_hat(o);
    if (dual->parsed()) return run_beta_dual(o);
    if (cls->parsed()) return run_class(o);
    if (table->parsed()) return run_class_table(o);
    if (norm->parsed()) return run_norm(o);
    if (hmnc->parsed()) return run_hmnc(o);
    if (compact->parsed()) return run_compact(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
