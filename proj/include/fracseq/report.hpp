#pragma once

#include "json.hpp"

#include "fracseq/classify.hpp"
#include "fracseq/coeffs.hpp"
#include "fracseq/compact.hpp"
#include "fracseq/dual.hpp"
#include "fracseq/spaces.hpp"
#include "fracseq/tolerance.hpp"
#include "fracseq/transform.hpp"

namespace fracseq {

/// Reports use insertion-ordered JSON and the library's shortest round-trip
/// float form, so identical inputs produce byte-identical text.
using Report = nlohmann::ordered_json;

Report tolerance_json(const ToleranceConfig& t);
Report limit_json(const LimitEstimate& e);
Report samples_json(const std::vector<LimitSample>& samples);
Report condition_json(const ConditionReport& c);
Report membership_json(const MembershipVerdict& v);
Report beta_dual_json(const BetaDualReport& r);
Report pairing_json(const PairingResult& p);
Report tail_bound_json(const TailBound& t);
Report hat_json(const HatMatrix& h);
Report norm_json(const NormEstimate& n);
Report class_json(const ClassVerdict& v);
Report hmnc_json(const HmncBounds& b);
Report compact_json(const CompactnessVerdict& v);

/// Common envelope: command, inputs echo, tolerance, result, notes.
Report make_report(const std::string& command, const ToleranceConfig& tol,
                   Report params, Report result, std::vector<std::string> notes = {});

std::string dump_report(const Report& r);  // stable two-space indent + newline

}  // namespace fracseq
