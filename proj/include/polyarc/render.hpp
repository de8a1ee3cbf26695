#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyarc/construction.hpp"
#include "polyarc/geometry.hpp"

namespace polyarc::render {

struct Style {
  std::string stroke = "#1f2937";
  std::string fill = "#e9c46a";
  double stroke_width = 1.5;
};

struct RenderOptions {
  double width = 480;
  double height = 480;
  Style style;
  bool show_guides = false;
};

/// Circles and polyarc of one figure family at a given size.
struct ConstructionSubject {
  PolyarcSpec spec;
};
/// One of the reproduced figures: "1a".."1e" (polyarc constructions) or
/// "1".."12" (the tablet figures).
struct FigureSubject {
  std::string id;
};
/// Five tangent circles around a sixth, gaps filled by concave 3-arcs.
struct Sb23397Subject {};

using Subject = std::variant<ConstructionSubject, FigureSubject, Sb23397Subject>;

struct RenderRequest {
  Subject subject;
  RenderOptions options;
};

/// Geometry of a rendering in figure units (origin at the figure centre, y up).
struct Scene {
  std::string title;
  std::vector<std::string> notes;
  std::vector<Circle> circles;
  std::vector<std::vector<ArcPiece>> regions;
  std::vector<Segment> guides;
  std::vector<Vec2> points;
};

const std::vector<std::string>& supported_figures();

/// Throws DomainError for an unsupported figure id or an invalid spec.
Scene build_scene(const RenderRequest& request);

/// SVG 1.1 document. Arcs use elliptical-arc path commands; output depends
/// only on the request.
std::string to_svg(const Scene& scene, const RenderOptions& options);

std::string render(const RenderRequest& request);

}  // namespace polyarc::render
