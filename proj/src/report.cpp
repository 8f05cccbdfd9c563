#include "fracseq/report.hpp"

#include <cmath>

namespace fracseq {
namespace {

// JSON has no infinities; bound sentinels become self-describing strings.
Report finite_or_tag(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

Report tolerance_json(const ToleranceConfig& t) {
  return Report{{"eps", t.eps},
                {"window", t.window},
                {"subset_budget", t.subset_budget},
                {"truncate_rows", t.truncate_rows},
                {"truncate_cols", t.truncate_cols}};
}

Report samples_json(const std::vector<LimitSample>& samples) {
  Report arr = Report::array();
  for (const auto& s : samples)
    arr.push_back(Report{{"index", s.index}, {"value", s.value}});
  return arr;
}

Report limit_json(const LimitEstimate& e) {
  return Report{{"value", e.value},
                {"status", to_string(e.status)},
                {"residual", finite_or_tag(e.residual)},
                {"samples", samples_json(e.samples)}};
}

Report condition_json(const ConditionReport& c) {
  return Report{{"id", c.condition_id},
                {"verdict", to_string(c.verdict)},
                {"witness", limit_json(c.witness)},
                {"notes", c.notes}};
}

Report membership_json(const MembershipVerdict& v) {
  Report r{{"space", std::string(space_tag(v.space))},
           {"status", to_string(v.status)},
           {"limit", nullptr},
           {"norm", v.norm},
           {"trailing_mean", v.trailing_mean},
           {"trailing_oscillation", v.trailing_oscillation},
           {"trailing_abs_max", v.trailing_abs_max},
           {"monotone_growth", v.monotone_growth},
           {"window", v.window}};
  if (v.limit) r["limit"] = *v.limit;
  return r;
}

Report beta_dual_json(const BetaDualReport& r) {
  Report out{{"space", std::string(space_tag(r.space))},
             {"overall", to_string(r.overall)}};
  Report conds = Report::array();
  for (const auto& c : r.conditions) conds.push_back(condition_json(c));
  out["conditions"] = std::move(conds);
  out["rho"] = r.rho ? limit_json(*r.rho) : Report(nullptr);
  return out;
}

Report pairing_json(const PairingResult& p) {
  return Report{{"lhs", p.lhs},
                {"rhs", p.rhs},
                {"discrepancy", p.discrepancy},
                {"rho", p.rho},
                {"xi", p.xi}};
}

Report tail_bound_json(const TailBound& t) {
  return Report{{"total", finite_or_tag(t.total)},
                {"prefix", t.prefix},
                {"tail_estimate", finite_or_tag(t.tail_estimate)},
                {"unbounded_tail", t.unbounded_tail}};
}

Report hat_json(const HatMatrix& h) {
  Report rows = Report::array();
  for (const auto& row : h.rows) {
    rows.push_back(Report{{"values", row.values},
                          {"abs_sum", row.abs_sum},
                          {"sum", row.sum},
                          {"tail", to_string(row.tail)},
                          {"exact", row.exact}});
  }
  return Report{{"order", h.order}, {"cols", h.cols}, {"rows", std::move(rows)}};
}

Report norm_json(const NormEstimate& n) {
  return Report{
      {"lower", finite_or_tag(n.lower)},
      {"upper", finite_or_tag(n.upper)},
      {"kind", n.kind == NormEstimate::Kind::exact_identity ? "exact_identity"
                                                            : "sandwich"},
      {"status", to_string(n.status)},
      {"arg_index", n.arg_index},
      {"method", n.method},
      {"trail", samples_json(n.trail)}};
}

Report class_json(const ClassVerdict& v) {
  Report conds = Report::array();
  for (const auto& c : v.conditions) conds.push_back(condition_json(c));
  return Report{
      {"from", std::string(space_tag(v.from))},
      {"to", std::string(space_tag(v.to))},
      {"bundle", v.bundle},
      {"verdict",
       v.verdict == ConditionVerdict::holds ? "member" : to_string(v.verdict)},
      {"conditions", std::move(conds)},
      {"notes", v.notes}};
}

Report hmnc_json(const HmncBounds& b) {
  return Report{{"formula_row", b.formula_row},
                {"lower", finite_or_tag(b.lower)},
                {"upper", finite_or_tag(b.upper)},
                {"status", to_string(b.status)},
                {"quantity", b.quantity},
                {"trail", samples_json(b.trail)},
                {"limit", limit_json(b.limit)}};
}

Report compact_json(const CompactnessVerdict& v) {
  return Report{{"verdict", to_string(v.verdict)},
                {"criterion", v.criterion},
                {"iff", v.iff},
                {"formula_row", v.formula_row},
                {"trail", samples_json(v.trail)},
                {"limit", limit_json(v.limit)}};
}

Report make_report(const std::string& command, const ToleranceConfig& tol,
                   Report params, Report result, std::vector<std::string> notes) {
  Report r;
  r["command"] = command;
  r["params"] = std::move(params);
  r["tolerance"] = tolerance_json(tol);
  r["result"] = std::move(result);
  r["notes"] = notes;
  return r;
}

std::string dump_report(const Report& r) { return r.dump(2) + "\n"; }

}  // namespace fracseq
