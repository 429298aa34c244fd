#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropolocate/location.hpp"
#include "tropolocate/oracle.hpp"

namespace tropo::io {

using nlohmann::json;

/// Canonical serialization used for every emitted document: two-space
/// indent, sorted keys (json object order), trailing newline.  Fixed
/// input therefore yields byte-stable output.
inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

inline json scalar_to_json(Scalar s) {
  if (s.is_zero()) return nullptr;
  return s.value();
}

inline json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Scalar e : v) arr.push_back(scalar_to_json(e));
  return arr;
}

namespace detail {

inline double finite_number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ParseError("\"" + key + "\" must contain numbers");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError("\"" + key + "\" must contain finite numbers");
  return v;
}

inline Scalar entry_from_json(const json& j, const std::string& key) {
  if (j.is_null()) return Scalar::zero();
  return Scalar(finite_number(j, key));
}

}  // namespace detail

/// Problem document: {"points": [[...]], "weights": [...],
/// "constraint": {"kind": ..., "matrix": [[...]]}}, where null encodes
/// the bottom element inside the constraint matrix.
inline LocationProblem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw ParseError("\"points\" must be a non-empty array");

  std::vector<Vector> points;
  std::size_t n = 0;
  for (const json& row : doc["points"]) {
    if (!row.is_array() || row.empty()) throw ParseError("\"points\" rows must be non-empty arrays");
    if (n == 0) n = row.size();
    if (row.size() != n) throw ParseError("\"points\" rows must have equal length");
    std::vector<Scalar> coords;
    coords.reserve(n);
    for (const json& e : row) coords.emplace_back(detail::finite_number(e, "points"));
    points.emplace_back(std::move(coords));
  }

  std::vector<double> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array() || doc["weights"].size() != points.size())
      throw ParseError("\"weights\" must be an array with one entry per point");
    for (const json& w : doc["weights"]) weights.push_back(detail::finite_number(w, "weights"));
  }

  if (!doc.contains("constraint")) return LocationProblem(std::move(points), std::move(weights));

  const json& cons = doc["constraint"];
  if (!cons.is_object() || !cons.contains("kind") || !cons.contains("matrix"))
    throw ParseError("\"constraint\" must be an object with \"kind\" and \"matrix\"");
  ConstraintKind kind;
  if (cons["kind"] == "equality")
    kind = ConstraintKind::equality;
  else if (cons["kind"] == "inequality")
    kind = ConstraintKind::inequality;
  else
    throw ParseError("\"constraint.kind\" must be \"equality\" or \"inequality\"");

  const json& rows = cons["matrix"];
  if (!rows.is_array() || rows.size() != n)
    throw ParseError("\"constraint.matrix\" must be a square array of the point dimension");
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("\"constraint.matrix\" must be a square array of the point dimension");
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = detail::entry_from_json(rows[i][j], "constraint.matrix");
  }
  return LocationProblem(std::move(points), std::move(weights), kind, std::move(a));
}

inline const char* kind_name(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::none: return "none";
    case ConstraintKind::equality: return "equality";
    case ConstraintKind::inequality: return "inequality";
  }
  return "none";
}

inline json report_to_json(const SolutionReport& report,
                           const std::optional<oracle::GridResult>& oracle_result = std::nullopt,
                           std::optional<double> oracle_step = std::nullopt) {
  json doc;
  doc["delta"] = report.delta;
  doc["witness"] = vector_to_json(report.witness);
  if (report.box_lower) doc["box_lower"] = vector_to_json(*report.box_lower);
  if (report.box_upper) doc["box_upper"] = vector_to_json(*report.box_upper);
  doc["p"] = vector_to_json(report.p);
  doc["q"] = vector_to_json(report.q);
  doc["constraint_kind"] = kind_name(report.kind);
  if (oracle_result) {
    doc["oracle"]["value"] = oracle_result->value;
    doc["oracle"]["argmin"] = oracle_result->argmin;
    doc["oracle"]["step"] = oracle_step.value_or(0.0);
  }
  return doc;
}

inline std::string emit_report(const SolutionReport& report,
                               const std::optional<oracle::GridResult>& oracle_result = std::nullopt,
                               std::optional<double> oracle_step = std::nullopt) {
  return dump(report_to_json(report, oracle_result, oracle_step));
}

}  // namespace tropo::io
