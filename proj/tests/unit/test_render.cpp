#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "../support/helpers.hpp"
#include "polyarc/errors.hpp"
#include "polyarc/render.hpp"

using namespace polyarc;
using namespace polyarc::render;

namespace {

RenderRequest construction(Family family, int n = 0, bool guides = false) {
  RenderRequest request{ConstructionSubject{PolyarcSpec::named(family, 1, n)}, {}};
  request.options.show_guides = guides;
  return request;
}

}  // namespace

TEST_CASE("svg document shape") {
  const std::string svg = render::render(construction(Family::kConvex4));
  CHECK(svg.starts_with("<?xml version=\"1.0\""));
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<!-- coordinates:") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
  CHECK(testing::svg_circles(svg).size() == 4);
  CHECK(testing::svg_arcs(svg).size() == 4);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("class=\"guide\"") == std::string::npos);
}

TEST_CASE("concave chain tangency in user units") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const auto circles = testing::svg_circles(render::render(construction(Family::kRegularConcave, n)));
    REQUIRE(circles.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const auto& a = circles[static_cast<std::size_t>(k)];
      const auto& b = circles[static_cast<std::size_t>((k + 1) % n)];
      CHECK(std::abs(std::hypot(a.cx - b.cx, a.cy - b.cy) - 2 * a.r) <= 1e-9);
    }
  }
}

TEST_CASE("regular concave 8-arc") {
  const std::string svg = render::render(construction(Family::kRegularConcave, 8, true));
  const auto circles = testing::svg_circles(svg);
  REQUIRE(circles.size() == 8);
  for (const auto& c : circles) {
    const double big = std::hypot(c.cx - 240, c.cy - 240);
    CHECK(big / c.r == doctest::Approx(1 / std::sin(std::numbers::pi / 8)).epsilon(1e-12));
  }
  CHECK(testing::svg_arcs(svg).size() == 8);
  CHECK(svg.find("class=\"guide\"") != std::string::npos);
}

TEST_CASE("ox-eye arcs subtend 120 degrees in the path data") {
  const auto arcs = testing::svg_arcs(render::render(construction(Family::kOxEye)));
  REQUIRE(arcs.size() == 2);
  for (const auto& arc : arcs) {
    CHECK(testing::central_angle(arc) == doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-9));
  }
}

TEST_CASE("barley-field uses circles of radius 2a/pi") {
  const std::string svg = render::render(construction(Family::kBarleyField, 0, true));
  const auto circles = testing::svg_circles(svg);
  REQUIRE(circles.size() == 2);
  for (const auto& arc : testing::svg_arcs(svg)) {
    CHECK(testing::central_angle(arc) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    CHECK(arc.r == doctest::Approx(circles[0].r));
  }
  CHECK(svg.find("class=\"guide\"") != std::string::npos);
}

TEST_CASE("every path arc lies on a constructive circle") {
  std::vector<RenderRequest> requests;
  for (const auto family : kAllFamilies) {
    requests.push_back(construction(family, family == Family::kRegularConcave ? 7 : 6));
  }
  requests.push_back({Sb23397Subject{}, {}});
  for (const auto& request : requests) {
    const std::string svg = render::render(request);
    const auto circles = testing::svg_circles(svg);
    for (const auto& arc : testing::svg_arcs(svg)) {
      const auto [cx, cy] = testing::arc_center(arc);
      const bool found = std::any_of(circles.begin(), circles.end(), [&](const testing::SvgCircle& c) {
        return std::hypot(c.cx - cx, c.cy - cy) < 1e-6 && std::abs(c.r - arc.r) < 1e-9;
      });
      CHECK(found);
    }
  }
}

TEST_CASE("output is deterministic") {
  for (const auto& id : supported_figures()) {
    CAPTURE(id);
    RenderRequest request{FigureSubject{id}, {}};
    request.options.show_guides = true;
    const std::string first = render::render(request);
    CHECK(first == render::render(request));
    CHECK(first.find("<path class=\"polyarc\"") != std::string::npos);
  }
}

TEST_CASE("sb23397 pattern") {
  const std::string svg = render::render({Sb23397Subject{}, {}});
  CHECK(svg.find("five unit circles") != std::string::npos);
  const auto circles = testing::svg_circles(svg);
  REQUIRE(circles.size() == 6);
  const auto& middle = circles.back();
  for (int k = 0; k < 5; ++k) {
    const auto& a = circles[static_cast<std::size_t>(k)];
    const auto& b = circles[static_cast<std::size_t>((k + 1) % 5)];
    CHECK(std::abs(std::hypot(a.cx - b.cx, a.cy - b.cy) - 2 * a.r) <= 1e-9);
    CHECK(std::abs(std::hypot(a.cx - middle.cx, a.cy - middle.cy) - (a.r + middle.r)) <= 1e-9);
  }
  CHECK(testing::svg_arcs(svg).size() == 15);
}

TEST_CASE("figure guides") {
  const auto has_guides = [](const std::string& id) {
    return render::render({FigureSubject{id}, {}}).find("class=\"guide\"") != std::string::npos;
  };
  CHECK(has_guides("6"));
  CHECK(has_guides("9"));
  CHECK(has_guides("11"));
  CHECK_FALSE(has_guides("4"));
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(render::render({FigureSubject{"13"}, {}}), DomainError);
  RenderRequest request = construction(Family::kOxEye);
  request.options.width = 0;
  CHECK_THROWS_AS(render::render(request), DomainError);
  CHECK_THROWS_AS(render::render(construction(Family::kRegularConcave, 2)), DomainError);
}

TEST_CASE("style options reach the document") {
  RenderRequest request = construction(Family::kConvex6);
  request.options.style.stroke = "navy";
  request.options.style.fill = "#abcdef";
  request.options.width = 300;
  request.options.height = 200;
  const std::string svg = render::render(request);
  CHECK(svg.find("stroke=\"navy\"") != std::string::npos);
  CHECK(svg.find("fill=\"#abcdef\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 300 200\"") != std::string::npos);
}
