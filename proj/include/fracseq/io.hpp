#pragma once

#include <string>

#include "json.hpp"

#include "fracseq/fracop.hpp"
#include "fracseq/matrix_spec.hpp"

namespace fracseq {

/// Parses {"terms": [...]}; throws std::invalid_argument on shape errors.
Seq seq_from_json(const nlohmann::json& j);

/// Parses a matrix description:
///   {"kind":"explicit","rows":[[...],...]}    {"kind":"finite_rank","rows":[[...]]}
///   {"kind":"diagonal","terms":[...]}         {"kind":"band","offsets":[...],"values":[...]}
///   {"kind":"rank_one","u":[...],"v":[...]}   {"kind":"zero"}
/// All kinds admit "truncate": {"rows": R, "cols": C}.
MatrixSpec matrix_from_json(const nlohmann::json& j);

Seq load_seq_file(const std::string& path);
MatrixSpec load_matrix_file(const std::string& path);

}  // namespace fracseq
