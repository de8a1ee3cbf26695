#include <doctest.h>

#include "../support/helpers.hpp"
#include "polyarc/errors.hpp"
#include "polyarc/serialize.hpp"

using namespace polyarc;
using io::Json;
using testing::q;

TEST_CASE("rational schema") {
  const Rational big = q("-123456789012345678901234567891/7");
  const Json j = io::to_json(big);
  CHECK(j.dump() == R"({"num":"-123456789012345678901234567891","den":"7"})");
  CHECK(io::rational_from_json(j) == big);
  CHECK_THROWS_AS(io::rational_from_json(Json{{"num", 1}, {"den", "2"}}), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json::parse(R"({"num":"1"})")), ParseError);
}

TEST_CASE("sexagesimal schema") {
  const auto s = Sexagesimal::parse("-1,20;30,15");
  const Json j = io::to_json(s);
  CHECK(j.dump() == R"({"sign":"-","int":[1,20],"frac":[30,15]})");
  CHECK(io::sexagesimal_from_json(j) == s);
  CHECK_THROWS_AS(io::sexagesimal_from_json(Json::parse(R"({"sign":"?","int":[0],"frac":[]})")), ParseError);
  CHECK_THROWS_AS(io::sexagesimal_from_json(Json::parse(R"({"sign":"+","int":[0],"frac":[61]})")), DomainError);
}

TEST_CASE("context schema") {
  const Json j = io::to_json(alt_sqrt3_context());
  CHECK(j.dump() == R"({"PI":"3/1","SQRT2":"17/12","SQRT3":"26/15"})");
  CHECK(io::context_from_json(j, "alt-sqrt3") == alt_sqrt3_context());
  CHECK_THROWS_AS(io::context_from_json(Json::parse(R"({"SQRT5":"9/4"})")), ParseError);
  CHECK_THROWS_AS(io::context_from_json(Json::parse(R"({"PI":3})")), ParseError);
  CHECK_THROWS_AS(io::context_from_json(Json::parse(R"({"PI":"-3"})")), DomainError);
}

TEST_CASE("metrics round-trip in both modes") {
  for (const auto family : kAllFamilies) {
    CAPTURE(family_name(family));
    const int n = family == Family::kRegularConcave ? 6 : family == Family::kRegularConvex ? 4 : 0;
    const auto exact = compute_metrics(PolyarcSpec::named(family, q("3/2"), n), ExactMode{30});
    const Json j = io::to_json(exact);
    CHECK(j.at("mode") == "exact");
    CHECK(j.at("precision") == 30);
    CHECK(j.at("area").contains("decimal"));
    const auto back = io::metrics_from_json(j);
    CHECK(back.family == exact.family);
    CHECK(io::to_json(back) == j);
  }
  const auto context = compute_metrics(PolyarcSpec::named(Family::kBarleyField), ContextMode{standard_context()});
  const Json j = io::to_json(context, 5);
  CHECK(j.at("context") == "standard");
  CHECK(j.at("area").at("rational").at("num") == "2");
  CHECK(j.at("area").at("sexagesimal").at("frac") == Json::array({13, 20}));
  const auto back = io::metrics_from_json(j);
  CHECK(std::get<Rational>(back.area) == q("2/9"));
  CHECK(std::get<ContextMode>(back.mode).context == standard_context());
}

TEST_CASE("no binary floating point in the output") {
  const auto exact = compute_metrics(PolyarcSpec::named(Family::kConvex6), ExactMode{30});
  std::function<void(const Json&)> walk = [&](const Json& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured()) {
      for (const auto& item : j) walk(item);
    }
  };
  walk(io::to_json(exact));
  for (const auto& r : tablet::verify_all()) walk(io::to_json(r));
  walk(io::to_json(tablet::scribe_error_l6()));
}

TEST_CASE("reports and tables round-trip") {
  for (const auto& r : tablet::verify_all()) {
    const Json j = io::to_json(r);
    CHECK(io::to_json(io::report_from_json(j)) == j);
  }
  for (const auto& cell : tablet::reproduce_table2()) {
    const Json j = io::to_json(cell);
    CHECK(io::to_json(io::table_cell_from_json(j)) == j);
  }
  const auto grid = tablet::default_table3_candidates();
  const auto row = tablet::table3_search(grid.sqrt3, grid.sqrt21).front();
  CHECK(io::to_json(io::table3_row_from_json(io::to_json(row))) == io::to_json(row));
  const auto trace = heron_sequence(21, 4, 3);
  const auto back = io::heron_from_json(io::to_json(trace));
  CHECK(back.iterates == trace.iterates);
}
