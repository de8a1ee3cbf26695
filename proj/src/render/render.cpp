#include "polyarc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "polyarc/errors.hpp"

namespace polyarc::render {

namespace {

constexpr double kPi = std::numbers::pi;

void add_construction(Scene& scene, const Construction& c, bool guides) {
  scene.circles.insert(scene.circles.end(), c.circles.begin(), c.circles.end());
  scene.regions.push_back(c.boundary);
  if (guides) {
    scene.guides.insert(scene.guides.end(), c.guides.begin(), c.guides.end());
    for (const auto& circle : c.circles) {
      scene.points.push_back(circle.center);
    }
    scene.points.insert(scene.points.end(), c.vertices.begin(), c.vertices.end());
  }
}

Construction shifted(Construction c, Vec2 offset) {
  for (auto& circle : c.circles) circle.center = circle.center + offset;
  for (auto& arc : c.boundary) arc.center = arc.center + offset;
  for (auto& v : c.vertices) v = v + offset;
  for (auto& g : c.guides) g = {g.a + offset, g.b + offset};
  return c;
}

// Lays the panels out row by row in a grid centred on the origin.
void add_panels(Scene& scene, const std::vector<Construction>& panels, double spacing, bool guides,
                std::size_t columns = 0) {
  if (columns == 0) columns = panels.size();
  const std::size_t rows = (panels.size() + columns - 1) / columns;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double x = (static_cast<double>(i % columns) - static_cast<double>(columns - 1) / 2) * spacing;
    const double y = (static_cast<double>(rows - 1) / 2 - static_cast<double>(i / columns)) * spacing;
    add_construction(scene, shifted(panels[i], {x, y}), guides);
  }
}

Scene sb23397_scene(bool guides) {
  Scene scene;
  scene.title = "SB23397 pattern reconstruction";
  scene.notes.push_back(
      "reconstruction: five unit circles on R = 1/sin(pi/5), pairwise tangent; the central circle "
      "of radius R - 1 touches all five; the five gaps are concave 3-arcs");
  const Construction chain = concave_chain(5, 1.0, kPi / 2);
  const double big = 1.0 / std::sin(kPi / 5);
  const Circle middle{{0, 0}, big - 1.0};
  scene.circles = chain.circles;
  scene.circles.push_back(middle);
  for (int k = 0; k < 5; ++k) {
    const Circle& a = chain.circles[static_cast<std::size_t>(k)];
    const Circle& b = chain.circles[static_cast<std::size_t>((k + 1) % 5)];
    const Vec2 touch = chain.vertices[static_cast<std::size_t>(k)];
    const Vec2 on_a = (middle.radius / norm(a.center)) * a.center;
    const Vec2 on_b = (middle.radius / norm(b.center)) * b.center;
    // A point inside the gap, used to choose the short arcs.
    const Vec2 inside = (0.5 * (norm(touch) + middle.radius) / norm(touch)) * touch;
    scene.regions.push_back({arc_between(a, on_a, touch, inside), arc_between(b, touch, on_b, inside),
                             arc_between(middle, on_b, on_a, inside)});
  }
  if (guides) {
    scene.guides = chain.guides;
    for (const auto& c : scene.circles) {
      scene.points.push_back(c.center);
    }
  }
  return scene;
}

PolyarcSpec unit(Family family) { return PolyarcSpec::named(family, 1); }

Scene figure_scene(const std::string& id, bool guides) {
  Scene scene;
  scene.title = "figure " + id;
  const auto simple = [&](Family family, bool with_guides) {
    add_construction(scene, construct(unit(family)), with_guides);
  };
  if (id == "1a") {
    // Irregular 2- and 3-arcs from unequal circles next to a regular 6-arc.
    const Construction two = disk_intersection({{{-0.45, 0}, 1.0}, {{0.55, 0}, 0.8}});
    const Construction three =
        disk_intersection({{{0, 0.55}, 1.0}, {{-0.5, -0.35}, 0.9}, {{0.55, -0.3}, 1.15}});
    const Construction six = rotated_circles(6, 1.0, 1.0 / std::numbers::sqrt2, kPi / 2);
    add_panels(scene, {two, three, six}, 3.2, guides);
  } else if (id == "1b") {
    add_panels(scene,
               {rotated_circles(2, 1.0, 1.0 / std::numbers::sqrt2, kPi / 2),
                rotated_circles(3, 1.0, 0.6, kPi / 2), concave_chain(3, 0.5, kPi / 2),
                rotated_circles(4, 1.0, 1.0 / std::numbers::sqrt2, kPi / 2),
                concave_chain(4, 0.5, kPi / 4), rotated_circles(6, 1.0, 1.0 / std::numbers::sqrt2, kPi / 2)},
               3.0, guides, 3);
  } else if (id == "1c") {
    add_construction(scene, concave_chain(8, 1.0, kPi / 2), true);
  } else if (id == "1d") {
    const double offset = 0.6;
    add_construction(scene, rotated_circles(5, 1.0, offset, kPi / 2), true);
    scene.circles.push_back({{0, 0}, offset});
  } else if (id == "1e") {
    add_construction(scene, rotated_circles(6, 1.0, 1.0 / std::numbers::sqrt2, kPi / 2), guides);
  } else if (id == "1") {
    simple(Family::kBarleyField, true);
  } else if (id == "2") {
    simple(Family::kOxEye, guides);
  } else if (id == "3") {
    add_construction(scene, construct(unit(Family::kOxEye)), true);
    const Construction c = construct(unit(Family::kOxEye));
    for (const auto& circle : c.circles) {
      for (const auto& v : c.vertices) {
        scene.guides.push_back({circle.center, v});
      }
    }
  } else if (id == "4") {
    simple(Family::kConvex4, guides);
  } else if (id == "5") {
    simple(Family::kConvex4, true);
  } else if (id == "6") {
    const Construction c = construct(unit(Family::kConvex4));
    add_construction(scene, c, true);
    // Triangle from one quadrant centre to the two nearest vertices.
    const Vec2 centre = c.circles.front().center;
    std::vector<Vec2> near = c.vertices;
    std::sort(near.begin(), near.end(),
              [&](Vec2 a, Vec2 b) { return distance(a, centre) > distance(b, centre); });
    scene.guides.push_back({centre, near[0]});
    scene.guides.push_back({centre, near[1]});
  } else if (id == "7") {
    simple(Family::kConvex6, guides);
  } else if (id == "8") {
    simple(Family::kConvex6, true);
  } else if (id == "9") {
    const Construction c = construct(unit(Family::kConvex6));
    add_construction(scene, c, true);
    const ArcPiece& arc = c.boundary.front();
    scene.guides.push_back({arc.center, arc.from()});
    scene.guides.push_back({arc.center, arc.to()});
    scene.guides.push_back({arc.center, Vec2{}});
  } else if (id == "10") {
    simple(Family::kApusamikkum4, guides);
  } else if (id == "11") {
    simple(Family::kApusamikkum4, true);
  } else if (id == "12") {
    simple(Family::kApusamikkum3, true);
  } else {
    throw DomainError("unsupported figure id '" + id + "'");
  }
  return scene;
}

std::string num(double v) {
  if (std::abs(v) < 5e-13) {
    v = 0;  // no "-0.000000000000"
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s(buf);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') {
    s.pop_back();
  }
  return s;
}

struct Viewport {
  double cx;
  double cy;
  double scale;
  double x(Vec2 p) const { return cx + scale * p.x; }
  double y(Vec2 p) const { return cy - scale * p.y; }
};

Viewport fit(const Scene& scene, const RenderOptions& options) {
  double ex = 1e-9;
  double ey = 1e-9;
  const auto grow = [&](Vec2 p, double pad) {
    ex = std::max(ex, std::abs(p.x) + pad);
    ey = std::max(ey, std::abs(p.y) + pad);
  };
  for (const auto& c : scene.circles) grow(c.center, c.radius);
  for (const auto& region : scene.regions)
    for (const auto& arc : region) grow(arc.from(), 0);
  for (const auto& g : scene.guides) {
    grow(g.a, 0);
    grow(g.b, 0);
  }
  const double scale = 0.9 * std::min(options.width / (2 * ex), options.height / (2 * ey));
  return {options.width / 2, options.height / 2, scale};
}

std::string path_data(const std::vector<ArcPiece>& region, const Viewport& vp) {
  std::ostringstream d;
  const Vec2 start = region.front().from();
  d << "M " << num(vp.x(start)) << ' ' << num(vp.y(start));
  for (const auto& arc : region) {
    const Vec2 end = arc.to();
    const double r = arc.radius * vp.scale;
    const int large = std::abs(arc.sweep) > kPi ? 1 : 0;
    // The y flip turns counterclockwise arcs into negative-angle ones in SVG
    // coordinates, i.e. sweep-flag 0.
    const int sweep = arc.sweep > 0 ? 0 : 1;
    d << " A " << num(r) << ' ' << num(r) << " 0 " << large << ' ' << sweep << ' '
      << num(vp.x(end)) << ' ' << num(vp.y(end));
  }
  d << " Z";
  return d.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& supported_figures() {
  static const std::vector<std::string> ids = {"1a", "1b", "1c", "1d", "1e", "1", "2", "3", "4",
                                               "5",  "6",  "7",  "8",  "9",  "10", "11", "12"};
  return ids;
}

Scene build_scene(const RenderRequest& request) {
  const auto& o = request.options;
  if (!(o.width > 0) || !(o.height > 0)) {
    throw DomainError("canvas size must be positive");
  }
  if (const auto* c = std::get_if<ConstructionSubject>(&request.subject)) {
    Scene scene;
    scene.title = std::string(family_name(c->spec.family)) + " construction";
    add_construction(scene, construct(c->spec), o.show_guides);
    return scene;
  }
  if (const auto* f = std::get_if<FigureSubject>(&request.subject)) {
    return figure_scene(f->id, o.show_guides);
  }
  return sb23397_scene(o.show_guides);
}

std::string to_svg(const Scene& scene, const RenderOptions& options) {
  const Viewport vp = fit(scene, options);
  const auto& st = options.style;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(options.width)
      << "\" height=\"" << num(options.height) << "\" viewBox=\"0 0 " << num(options.width) << ' '
      << num(options.height) << "\">\n"
      << "<!-- coordinates: figure centre at the canvas centre, y axis flipped to point up; "
      << "1 figure unit = " << num(vp.scale) << " user units -->\n";
  for (const auto& note : scene.notes) {
    out << "<!-- " << note << " -->\n";
  }
  out << "<title>" << escape(scene.title) << "</title>\n";
  out << "<g id=\"figure\" fill=\"" << escape(st.fill) << "\" fill-opacity=\"0.7\" stroke=\""
      << escape(st.stroke) << "\" stroke-width=\"" << num(st.stroke_width * 1.5) << "\">\n";
  for (const auto& region : scene.regions) {
    if (!region.empty()) {
      out << "<path class=\"polyarc\" d=\"" << path_data(region, vp) << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<g id=\"circles\" fill=\"none\" stroke=\"" << escape(st.stroke) << "\" stroke-width=\""
      << num(st.stroke_width) << "\">\n";
  for (const auto& c : scene.circles) {
    out << "<circle class=\"constructive\" cx=\"" << num(vp.x(c.center)) << "\" cy=\""
        << num(vp.y(c.center)) << "\" r=\"" << num(c.radius * vp.scale) << "\"/>\n";
  }
  out << "</g>\n";
  if (!scene.guides.empty() || !scene.points.empty()) {
    out << "<g id=\"guides\" stroke=\"#6b7280\" stroke-width=\"" << num(st.stroke_width * 0.75)
        << "\" stroke-dasharray=\"4 3\" fill=\"#6b7280\">\n";
    for (const auto& g : scene.guides) {
      out << "<line class=\"guide\" x1=\"" << num(vp.x(g.a)) << "\" y1=\"" << num(vp.y(g.a))
          << "\" x2=\"" << num(vp.x(g.b)) << "\" y2=\"" << num(vp.y(g.b)) << "\"/>\n";
    }
    for (const auto& p : scene.points) {
      out << "<circle class=\"point\" cx=\"" << num(vp.x(p)) << "\" cy=\"" << num(vp.y(p))
          << "\" r=\"" << num(st.stroke_width * 1.5) << "\" stroke=\"none\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render(const RenderRequest& request) { return to_svg(build_scene(request), request.options); }

}  // namespace polyarc::render
