#include <doctest.h>

#include "flagflow/anosov.hpp"
#include "flagflow/groupspec.hpp"

using namespace flagflow;

TEST_CASE("builtin specs round trip through JSON") {
  for (const auto& name : builtin_spec_names()) {
    const GroupSpec spec = builtin_spec(name);
    const GroupSpec back = parse_group_spec(group_spec_to_json(spec));
    CHECK(back.d == spec.d);
    CHECK(back.field == spec.field);
    CHECK(back.theta == spec.theta);
    REQUIRE(back.generators.size() == spec.generators.size());
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      CHECK(back.generators[i].label == spec.generators[i].label);
      CHECK((back.generators[i].matrix - spec.generators[i].matrix).norm() <
            1e-14);
    }
  }
}

TEST_CASE("parser validation") {
  CHECK_THROWS_AS(parse_group_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(R"({"d": 1, "generators": []})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_group_spec(
          R"({"d": 2, "field": "Q", "generators": [{"label": "a",
              "matrix": [[1,0],[0,1]]}]})"),
      ParseError);
  CHECK_THROWS_AS(parse_group_spec(R"({"d": 2, "generators": []})"),
                  ParseError);
  // determinant != 1
  CHECK_THROWS_AS(
      parse_group_spec(
          R"({"d": 2, "generators": [{"label": "a",
              "matrix": [[2,0],[0,1]]}]})"),
      Error);
}

TEST_CASE("complex entries parse as [re, im] pairs") {
  const std::string text = R"({
    "d": 2, "field": "C",
    "generators": [{"label": "a",
      "matrix": [[[0,1],[0,0]],[[0,0],[0,-1]]]}],
    "theta": [1]
  })";
  const GroupSpec spec = parse_group_spec(text);
  CHECK(spec.field == Field::Complex);
  CHECK(spec.generators[0].matrix(0, 0) == std::complex<double>(0, 1));
  CHECK(spec.generators[0].matrix(1, 1) == std::complex<double>(0, -1));
}

TEST_CASE("theta defaults to the full set") {
  const GroupSpec spec = parse_group_spec(
      R"({"d": 3, "generators": [{"label": "a",
          "matrix": [[4,0,0],[0,1,0],[0,0,0.25]]}]})");
  CHECK(spec.theta == ThetaSet{1, 2});
}
