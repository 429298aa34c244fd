#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "tropolocate/problem_io.hpp"

using namespace tropo;
using nlohmann::json;

TEST_CASE("problem files parse with defaults", "[io]") {
  const auto prob = io::parse_problem(R"({"points": [[-2, 5], [6, 13]]})");
  CHECK(prob.site_count() == 2);
  CHECK(prob.dimension() == 2);
  CHECK(prob.weight(0) == 0.0);
  CHECK(prob.kind() == ConstraintKind::none);
  CHECK(prob.point(1) == Vector::column({6, 13}));
}

TEST_CASE("constraint matrices parse with null as the bottom element", "[io]") {
  const auto prob = io::parse_problem(R"({
    "points": [[0, 0]],
    "weights": [1.5],
    "constraint": {"kind": "inequality", "matrix": [[null, -3], [-5, null]]}
  })");
  CHECK(prob.kind() == ConstraintKind::inequality);
  CHECK(prob.constraint()(0, 0).is_zero());
  CHECK(prob.constraint()(0, 1) == Scalar(-3));
  CHECK(prob.constraint()(1, 0) == Scalar(-5));
}

TEST_CASE("schema violations are rejected with the offending key named", "[io]") {
  CHECK_THROWS_AS(io::parse_problem("not json"), ParseError);
  CHECK_THROWS_AS(io::parse_problem("[1, 2]"), ParseError);
  CHECK_THROWS_AS(io::parse_problem(R"({"points": []})"), ParseError);
  CHECK_THROWS_WITH(io::parse_problem(R"({"points": [[1, 2], [3]]})"),
                    Catch::Matchers::ContainsSubstring("points"));
  // Number overflow is caught at the token level and names the literal.
  CHECK_THROWS_AS(io::parse_problem(R"({"points": [[1, 1e999]]})"), ParseError);
  CHECK_THROWS_WITH(io::parse_problem(R"({"points": [[1, 1e999]]})"),
                    Catch::Matchers::ContainsSubstring("1e999"));
  CHECK_THROWS_WITH(io::parse_problem(R"({"points": [[1, null]]})"),
                    Catch::Matchers::ContainsSubstring("points"));
  CHECK_THROWS_WITH(io::parse_problem(R"({"points": [[1, 2]], "weights": [0, 0]})"),
                    Catch::Matchers::ContainsSubstring("weights"));
  CHECK_THROWS_WITH(
      io::parse_problem(
          R"({"points": [[1, 2]], "constraint": {"kind": "equality", "matrix": [[0]]}})"),
      Catch::Matchers::ContainsSubstring("constraint.matrix"));
  CHECK_THROWS_WITH(
      io::parse_problem(
          R"({"points": [[1, 2]], "constraint": {"kind": "both", "matrix": [[0, 0], [0, 0]]}})"),
      Catch::Matchers::ContainsSubstring("constraint.kind"));
}

TEST_CASE("reports serialize deterministically and round-trip", "[io]") {
  const auto prob = io::parse_problem(R"({"points": [[-2, 5], [6, 13]]})");
  const auto report = solve(prob);
  const std::string bytes = io::emit_report(report);

  // Emitting twice gives identical bytes; parsing and re-dumping does too.
  CHECK(bytes == io::emit_report(report));
  CHECK(bytes == io::dump(json::parse(bytes)));

  const json doc = json::parse(bytes);
  CHECK(doc["delta"] == 4.0);
  CHECK(doc["witness"] == json::array({2.0, 9.0}));
  CHECK(doc["box_lower"] == json::array({2.0, 9.0}));
  CHECK(doc["box_upper"] == json::array({2.0, 9.0}));
  CHECK(doc["p"] == json::array({6.0, 13.0}));
  CHECK(doc["q"] == json::array({-2.0, 5.0}));
  CHECK(doc["constraint_kind"] == "none");
  CHECK_FALSE(doc.contains("oracle"));
}

TEST_CASE("oracle results embed in the report", "[io]") {
  const auto prob = io::parse_problem(R"({"points": [[0, 0]]})");
  const auto report = solve(prob);
  const oracle::GridResult grid{0.0, {0.0, 0.0}};
  const json doc = json::parse(io::emit_report(report, grid, 0.05));
  CHECK(doc["oracle"]["value"] == 0.0);
  CHECK(doc["oracle"]["argmin"] == json::array({0.0, 0.0}));
  CHECK(doc["oracle"]["step"] == 0.05);
}

TEST_CASE("bottom entries serialize as null", "[io]") {
  CHECK(io::scalar_to_json(Scalar::zero()).is_null());
  CHECK(io::scalar_to_json(Scalar(2.5)) == json(2.5));
  CHECK(io::vector_to_json(Vector::column({1, kBottom})) == json::array({1.0, nullptr}));
}
