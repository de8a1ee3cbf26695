#include <doctest.h>

#include <cmath>

#include "../oracles/oracle_constants.hpp"
#include "../support/helpers.hpp"
#include "polyarc/construction.hpp"
#include "polyarc/errors.hpp"
#include "polyarc/geometry.hpp"

using namespace polyarc;
using testing::oracle_real;
using testing::q;
using testing::relatively_close;

namespace {

const EvalMode kExact40 = ExactMode{40};
const EvalMode kStandard = ContextMode{standard_context()};

Value area(Family family, const EvalMode& mode, int n = 0) {
  return compute_metrics(PolyarcSpec::named(family, 1, n), mode).area;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (const auto family : kAllFamilies) {
    CHECK(family_from_name(family_name(family)) == family);
  }
  CHECK(natural_size_kind(Family::kOxEye) == SizeKind::kArcLength);
  CHECK(natural_size_kind(Family::kConvex6) == SizeKind::kRadius);
  CHECK(measure_from_name("half_angle_alpha") == Measure::kHalfAngleAlpha);
}

TEST_CASE("exact areas agree with the polar-integration oracle") {
  CHECK(relatively_close(area(Family::kBarleyField, kExact40), oracle_real(oracle::kBarleyFieldArea), "1e-35"));
  CHECK(relatively_close(area(Family::kOxEye, kExact40), oracle_real(oracle::kOxEyeArea), "1e-35"));
  CHECK(relatively_close(area(Family::kConvex4, kExact40), oracle_real(oracle::kConvex4Area), "1e-35"));
  CHECK(relatively_close(area(Family::kConvex6, kExact40), oracle_real(oracle::kConvex6Area), "1e-35"));
  CHECK(relatively_close(area(Family::kApusamikkum4, kExact40), oracle_real(oracle::kApusamikkum4Area), "1e-35"));
  CHECK(relatively_close(area(Family::kApusamikkum3, kExact40), oracle_real(oracle::kApusamikkum3Area), "1e-35"));
}

TEST_CASE("general formulas agree with the oracle") {
  const std::pair<int, const char*> convex[] = {{2, oracle::kConvexGeneralN2},
                                                {4, oracle::kConvexGeneralN4},
                                                {6, oracle::kConvexGeneralN6},
                                                {8, oracle::kConvexGeneralN8}};
  for (const auto& [n, expected] : convex) {
    CAPTURE(n);
    CHECK(relatively_close(convex_area_general(n, Rational(1), kExact40), oracle_real(expected), "1e-35"));
  }
  const std::pair<int, const char*> concave[] = {{3, oracle::kConcaveUnitArcN3},  {4, oracle::kConcaveUnitArcN4},
                                                 {5, oracle::kConcaveUnitArcN5},  {6, oracle::kConcaveUnitArcN6},
                                                 {8, oracle::kConcaveUnitArcN8},  {12, oracle::kConcaveUnitArcN12}};
  for (const auto& [n, expected] : concave) {
    CAPTURE(n);
    CHECK(relatively_close(concave_area_general(n, Rational(1), kExact40), oracle_real(expected), "1e-35"));
  }
}

TEST_CASE("convex 6-arc measures") {
  const auto m = compute_metrics(PolyarcSpec::named(Family::kConvex6), kExact40);
  CHECK(relatively_close(m.at(Measure::kHexagonSide), oracle_real(oracle::kHexagonSide), "1e-35"));
  CHECK(relatively_close(m.at(Measure::kHexagonArea), oracle_real(oracle::kHexagonArea), "1e-35"));
  CHECK(relatively_close(m.at(Measure::kHalfAngleAlpha), oracle_real(oracle::kHalfAngleAlpha), "1e-35"));
  CHECK(relatively_close(m.at(Measure::kAlpha), oracle_real(oracle::kHalfAngleAlpha) * 2, "1e-35"));
  // Partition: hexagon plus six segments.
  const ExactReal sum = to_exact(m.at(Measure::kHexagonArea), 40) + to_exact(m.at(Measure::kSegmentArea), 40) * 6;
  CHECK(relatively_close(sum, oracle_real(oracle::kConvex6Area), "1e-35"));
  // Six triangles make the hexagon.
  CHECK(relatively_close(to_exact(m.at(Measure::kTriangleArea), 40) * 6, oracle_real(oracle::kHexagonArea), "1e-35"));
  CHECK_THROWS_AS((void)m.at(Measure::kDiagonal), std::out_of_range);
}

TEST_CASE("context-mode constants in the scribe's arithmetic") {
  CHECK(std::get<Rational>(area(Family::kBarleyField, kStandard)) == q("2/9"));
  CHECK(std::get<Rational>(area(Family::kOxEye, kStandard)) == q("9/32"));
  CHECK(std::get<Rational>(area(Family::kApusamikkum4, kStandard)) == q("4/9"));
  CHECK(std::get<Rational>(area(Family::kApusamikkum3, kStandard)) == q("1/4"));
  CHECK(std::get<Rational>(area(Family::kConvex4, kStandard)) == q("1/4"));

  const auto barley = compute_metrics(PolyarcSpec::named(Family::kBarleyField), kStandard);
  CHECK(std::get<Rational>(barley.at(Measure::kLength)) == q("17/18"));
  CHECK(std::get<Rational>(barley.at(Measure::kWidth)) == q("7/18"));
  const auto ox = compute_metrics(PolyarcSpec::named(Family::kOxEye), kStandard);
  CHECK(std::get<Rational>(ox.at(Measure::kLength)) == q("7/8"));
  CHECK(std::get<Rational>(ox.at(Measure::kWidth)) == q("1/2"));
  const auto apus = compute_metrics(PolyarcSpec::named(Family::kApusamikkum4), kStandard);
  CHECK(std::get<Rational>(apus.at(Measure::kDiagonal)) == q("4/3"));
  CHECK(std::get<Rational>(apus.at(Measure::kTransversal)) == q("5/9"));

  const auto alt = compute_metrics(PolyarcSpec::named(Family::kConvex4), ContextMode{alt_sqrt3_context()});
  CHECK(std::get<Rational>(alt.area) == q("4/15"));
  CHECK(std::get<Rational>(alt.at(Measure::kSquareArea)) == q("4/15"));
}

TEST_CASE("context mode needs the right surrogates") {
  CHECK_THROWS_AS(area(Family::kConvex6, ContextMode{ApproximationContext("empty", {})}), MissingSurrogate);
  CHECK_THROWS_AS(convex_area_general(4, Rational(1), kStandard), DomainError);
  CHECK_THROWS_AS(concave_area_general(5, Rational(1), kStandard), DomainError);
  const auto ctx = standard_context().with(Irrational::kSqrt21, q("367/80"), "t3");
  const auto m = compute_metrics(PolyarcSpec::named(Family::kConvex6), ContextMode{ctx});
  CHECK(std::get<Rational>(m.area) == q("693/2560"));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PolyarcSpec::named(Family::kRegularConcave, 1, 2).validate(), DomainError);
  CHECK_THROWS_AS(PolyarcSpec::named(Family::kRegularConvex, 1, 3).validate(), DomainError);
  CHECK_THROWS_AS(PolyarcSpec::named(Family::kOxEye, Rational(-1)).validate(), DomainError);
  CHECK(PolyarcSpec::named(Family::kConvex6).arc_count() == 6);
  CHECK(PolyarcSpec::named(Family::kRegularConcave, 1, 7).arc_count() == 7);
}

TEST_CASE("size conversion between arc length and radius") {
  // Ox-eye arcs subtend 120°, so a = 2πr/3.
  PolyarcSpec by_radius = PolyarcSpec::named(Family::kOxEye);
  by_radius.size_kind = SizeKind::kRadius;
  const auto m = compute_metrics(by_radius, kExact40);
  CHECK(relatively_close(m.at(Measure::kRadius), ExactReal(1, 40), "1e-35"));
  const ExactReal pi = ExactReal::pi(40);
  const ExactReal expected = pi * 2 / 3 - sqrt(ExactReal(3, 40)) / 2;
  CHECK(relatively_close(m.area, expected, "1e-35"));
  CHECK_THROWS_AS(compute_metrics(by_radius, kStandard), DomainError);
}

TEST_CASE("homogeneity of degree two") {
  for (const auto family : kAllFamilies) {
    CAPTURE(family_name(family));
    const int n = family == Family::kRegularConcave ? 5 : family == Family::kRegularConvex ? 8 : 0;
    const auto one = compute_metrics(PolyarcSpec::named(family, 1, n), kExact40).area;
    const auto three = compute_metrics(PolyarcSpec::named(family, 3, n), kExact40).area;
    CHECK(relatively_close(three, to_exact(one, 40) * 9, "1e-35"));
  }
}

TEST_CASE("chain radius") {
  CHECK(relatively_close(chain_radius(6, Rational(1), 40), ExactReal(2, 40), "1e-35"));
  CHECK(relatively_close(chain_radius(4, ExactReal(1, 40)), sqrt(ExactReal(2, 40)), "1e-35"));
  CHECK_THROWS_AS(chain_radius(2, Rational(1)), DomainError);
}

TEST_CASE("polygonal oracle converges to the closed forms") {
  for (const auto family : kAllFamilies) {
    CAPTURE(family_name(family));
    const int n = family == Family::kRegularConcave ? 7 : family == Family::kRegularConvex ? 6 : 0;
    const PolyarcSpec spec = PolyarcSpec::named(family, 1, n);
    const double exact = to_exact(compute_metrics(spec, kExact40).area, 40).to_double();
    CHECK(std::abs(oracle_area(spec, 2048) - exact) < 1e-6);
  }
  CHECK_THROWS_AS(oracle_area(PolyarcSpec::named(Family::kOxEye), 4), DomainError);
}
