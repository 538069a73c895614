#include "helpers.hpp"

#include "cstar/errors.hpp"
#include "cstar/serialize.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("serialize") {
  TEST_CASE("float formatting") {
    CHECK(format_double(0.1) == "1.0000000000000001e-01");
    CHECK(format_double(2.0) == "2.0000000000000000e+00");
    CHECK(format_double(kInfinity) == "inf");
  }

  TEST_CASE("operator round trip") {
    const AlgebraShape s({1, 2});
    const AdjointableMap f = AdjointableMap::scalar_lift(s, mat({{1, 2}, {0, 3}}));
    const AdjointableMap g = operator_from_json(parse_json_text(dump_json(to_json(f)), "roundtrip"));
    CHECK(distance(f, g) == 0.0);
    CHECK(dump_json(to_json(f)) == dump_json(to_json(g)));
  }

  TEST_CASE("submodule round trip") {
    const AlgebraShape s({2});
    const Submodule n = submodule_span(s, 2, {ModuleVector::unit(s, 2, 1)});
    CHECK(same_submodule(submodule_from_json(to_json(n)), n));
  }

  TEST_CASE("parse errors carry a position") {
    try {
      parse_json_text("{\n  \"shape\": [1,\n}", "broken.json");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      const std::string what = e.what();
      CHECK(what.find("broken.json") != std::string::npos);
      CHECK(what.find("broken.json:3:") != std::string::npos);
    }
  }

  TEST_CASE("field errors name the field") {
    const Json bad = parse_json_text(R"({"shape":[2],"domain":1,"codomain":1,"entries":[[[[1,0]]]]})", "x");
    try {
      operator_from_json(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("entries") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_format("xml"), ParseError);
  }

  TEST_CASE("csv tables") {
    Json j;
    j["rows"] = Json::array({Json{{"n", 1}, {"g", 0.5}}, Json{{"n", 2}, {"g", 0.25}}});
    const std::string csv = render(j, Format::Csv, "rows");
    CHECK(csv.rfind("n,g\n", 0) == 0);
  }
}
