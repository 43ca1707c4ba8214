#include "flagflow/groupspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace flagflow {

namespace {

using nlohmann::json;

CMat parse_matrix(const json& rows, int d, Field field) {
  if (!rows.is_array() || (int)rows.size() != d)
    throw ParseError("matrix must have d rows");
  CMat M(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || (int)row.size() != d)
      throw ParseError("matrix row has wrong length");
    for (int j = 0; j < d; ++j) {
      const auto& e = row[j];
      if (field == Field::Real) {
        if (!e.is_number()) throw ParseError("real matrix entry must be a number");
        M(i, j) = e.get<double>();
      } else {
        if (!e.is_array() || e.size() != 2)
          throw ParseError("complex matrix entry must be an [re, im] pair");
        M(i, j) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
      }
    }
  }
  return M;
}

json matrix_to_json(const CMat& M, Field field) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) {
      if (field == Field::Real)
        row.push_back(M(i, j).real());
      else
        row.push_back(json::array({M(i, j).real(), M(i, j).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec JSON: ") + e.what());
  }
  GroupSpec spec;
  if (!j.contains("d") || !j["d"].is_number_integer())
    throw ParseError("spec requires an integer field 'd'");
  spec.d = j["d"].get<int>();
  if (spec.d < 2) throw ParseError("spec requires d >= 2");
  const std::string f = j.value("field", "R");
  if (f == "R")
    spec.field = Field::Real;
  else if (f == "C")
    spec.field = Field::Complex;
  else
    throw ParseError("field must be \"R\" or \"C\"");
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    throw ParseError("spec requires a non-empty generator list");
  for (const auto& g : j["generators"]) {
    GeneratorSpec gen;
    gen.label = g.value("label", "");
    if (gen.label.empty()) throw ParseError("generator requires a label");
    if (!g.contains("matrix")) throw ParseError("generator requires a matrix");
    gen.matrix = make_group_element(parse_matrix(g["matrix"], spec.d, spec.field));
    spec.generators.push_back(gen);
  }
  if (j.contains("theta")) {
    std::vector<int> t;
    for (const auto& v : j["theta"]) t.push_back(v.get<int>());
    spec.theta = make_theta(t, spec.d);
  } else {
    spec.theta = full_theta(spec.d);
  }
  spec.notes = j.value("notes", "");
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_spec(ss.str());
}

std::string group_spec_to_json(const GroupSpec& spec) {
  json j;
  j["d"] = spec.d;
  j["field"] = field_name(spec.field);
  j["generators"] = json::array();
  for (const auto& g : spec.generators)
    j["generators"].push_back(
        {{"label", g.label}, {"matrix", matrix_to_json(g.matrix, spec.field)}});
  j["theta"] = spec.theta;
  j["notes"] = spec.notes;
  return j.dump(2) + "\n";
}

}  // namespace flagflow
