#include "fracseq/io.hpp"

#include <fstream>
#include <stdexcept>

namespace fracseq {
namespace {

using nlohmann::json;

[[noreturn]] void shape_error(const std::string& what) {
  throw std::invalid_argument(what);
}

std::vector<double> number_array(const json& j, const char* where) {
  if (!j.is_array())
    shape_error(std::string(where) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number())
      shape_error(std::string(where) + " must contain numbers only");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<long> integer_array(const json& j, const char* where) {
  if (!j.is_array())
    shape_error(std::string(where) + " must be an array of integers");
  std::vector<long> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      shape_error(std::string(where) + " must contain integers only");
    out.push_back(v.get<long>());
  }
  return out;
}

std::vector<std::vector<double>> row_arrays(const json& j, const char* where) {
  if (!j.is_array())
    shape_error(std::string(where) + " must be an array of rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(j.size());
  for (const auto& r : j) rows.push_back(number_array(r, where));
  return rows;
}

const json& field(const json& j, const char* name, const char* kind) {
  if (!j.contains(name))
    shape_error(std::string("matrix kind \"") + kind + "\" needs a \"" + name +
                "\" field");
  return j.at(name);
}

std::optional<std::size_t> size_field(const json& j, const char* name) {
  if (!j.contains(name)) return std::nullopt;
  const auto& v = j.at(name);
  if (!v.is_number_unsigned())
    shape_error(std::string("\"") + name + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Seq seq_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    shape_error("sequence JSON must be an object with a \"terms\" array");
  return number_array(j.at("terms"), "\"terms\"");
}

MatrixSpec matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    shape_error("matrix JSON must be an object with a \"kind\" string");
  const std::string kind = j.at("kind").get<std::string>();

  MatrixSpec m = MatrixSpec::zero();
  if (kind == "zero") {
    m = MatrixSpec::zero();
  } else if (kind == "explicit") {
    m = MatrixSpec::explicit_rows(row_arrays(field(j, "rows", "explicit"), "\"rows\""));
  } else if (kind == "finite_rank") {
    m = MatrixSpec::finite_rank(row_arrays(field(j, "rows", "finite_rank"), "\"rows\""));
  } else if (kind == "diagonal") {
    m = MatrixSpec::diagonal(number_array(field(j, "terms", "diagonal"), "\"terms\""));
  } else if (kind == "band") {
    m = MatrixSpec::band(integer_array(field(j, "offsets", "band"), "\"offsets\""),
                         number_array(field(j, "values", "band"), "\"values\""));
  } else if (kind == "rank_one") {
    m = MatrixSpec::rank_one(
        SeqSource::of(number_array(field(j, "u", "rank_one"), "\"u\"")),
        SeqSource::of(number_array(field(j, "v", "rank_one"), "\"v\"")));
  } else {
    shape_error("unknown matrix kind: " + kind);
  }

  if (j.contains("truncate")) {
    const auto& t = j.at("truncate");
    if (!t.is_object()) shape_error("\"truncate\" must be an object");
    m.truncate(size_field(t, "rows"), size_field(t, "cols"));
  }
  return m;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte offset of the failure
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace

Seq load_seq_file(const std::string& path) { return seq_from_json(parse_file(path)); }

MatrixSpec load_matrix_file(const std::string& path) {
  return matrix_from_json(parse_file(path));
}

}  // namespace fracseq
