#include "polyarc/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyarc/errors.hpp"

namespace polyarc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOnCircle = 1e-7;
constexpr double kInside = 1e-9;

Vec2 polar(double radius, double angle) { return {radius * std::cos(angle), radius * std::sin(angle)}; }

double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// Counterclockwise angle from a to b in [0, 2π).
double ccw_delta(double a, double b) {
  double d = std::fmod(b - a, 2 * kPi);
  if (d < 0) {
    d += 2 * kPi;
  }
  return d;
}

bool inside_all(Vec2 p, const std::vector<Circle>& disks) {
  return std::all_of(disks.begin(), disks.end(), [&](const Circle& c) {
    return distance(p, c.center) <= c.radius + kInside;
  });
}

std::vector<Vec2> circle_intersections(const Circle& a, const Circle& b) {
  const double d = distance(a.center, b.center);
  if (d == 0 || d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) {
    return {};
  }
  const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  const Vec2 u = (1 / d) * (b.center - a.center);
  const Vec2 base = a.center + along * u;
  const Vec2 perp{-u.y, u.x};
  return {base + h * perp, base - h * perp};
}

Vec2 centroid(const std::vector<Vec2>& points) {
  Vec2 sum;
  for (const auto& p : points) {
    sum = sum + p;
  }
  return (1.0 / static_cast<double>(points.size())) * sum;
}

void add_polygon(Construction& c, const std::vector<Vec2>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    c.guides.push_back({points[i], points[(i + 1) % points.size()]});
  }
}

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }
double distance(Vec2 a, Vec2 b) { return norm(a - b); }

Vec2 ArcPiece::point_at(double t) const { return center + polar(radius, start + t * sweep); }

ArcPiece arc_between(const Circle& circle, Vec2 from, Vec2 to, Vec2 toward) {
  const double a = angle_of(from - circle.center);
  const double ccw = ccw_delta(a, angle_of(to - circle.center));
  const ArcPiece counter{circle.center, circle.radius, a, ccw};
  const ArcPiece clockwise{circle.center, circle.radius, a, ccw - 2 * kPi};
  return distance(counter.point_at(0.5), toward) <= distance(clockwise.point_at(0.5), toward)
             ? counter
             : clockwise;
}

Construction concave_chain(int n, double r, double phase) {
  if (n < 3) {
    throw DomainError("a tangent chain needs n >= 3 circles");
  }
  const double big = r / std::sin(kPi / n);
  Construction c;
  for (int k = 0; k < n; ++k) {
    c.circles.push_back({polar(big, phase + 2 * kPi * k / n), r});
  }
  for (int k = 0; k < n; ++k) {
    const auto& a = c.circles[static_cast<std::size_t>(k)];
    const auto& b = c.circles[static_cast<std::size_t>((k + 1) % n)];
    c.vertices.push_back(0.5 * (a.center + b.center));
  }
  // Vertex k sits between circles k and k+1, so circle k+1 carries the arc
  // from vertex k to vertex k+1.
  for (int k = 0; k < n; ++k) {
    const auto& carrier = c.circles[static_cast<std::size_t>((k + 1) % n)];
    c.boundary.push_back(arc_between(carrier, c.vertices[static_cast<std::size_t>(k)],
                                     c.vertices[static_cast<std::size_t>((k + 1) % n)], Vec2{}));
  }
  std::vector<Vec2> centers;
  for (const auto& circle : c.circles) {
    centers.push_back(circle.center);
  }
  add_polygon(c, centers);
  return c;
}

Construction disk_intersection(const std::vector<Circle>& disks) {
  Construction c;
  c.circles = disks;
  std::vector<Vec2> vertices;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      for (const Vec2& p : circle_intersections(disks[i], disks[j])) {
        const bool seen = std::any_of(vertices.begin(), vertices.end(),
                                      [&](Vec2 q) { return distance(p, q) < 1e-9; });
        if (!seen && inside_all(p, disks)) {
          vertices.push_back(p);
        }
      }
    }
  }
  if (vertices.size() < 2) {
    throw DomainError("disks do not bound a polyarc");
  }
  const Vec2 middle = centroid(vertices);
  std::sort(vertices.begin(), vertices.end(),
            [&](Vec2 a, Vec2 b) { return angle_of(a - middle) < angle_of(b - middle); });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vec2 from = vertices[i];
    const Vec2 to = vertices[(i + 1) % vertices.size()];
    bool found = false;
    for (const auto& disk : disks) {
      if (std::abs(distance(from, disk.center) - disk.radius) > kOnCircle ||
          std::abs(distance(to, disk.center) - disk.radius) > kOnCircle) {
        continue;
      }
      // Convex boundary arcs run counterclockwise about their own centre.
      const double a = angle_of(from - disk.center);
      const ArcPiece arc{disk.center, disk.radius, a, ccw_delta(a, angle_of(to - disk.center))};
      if (inside_all(arc.point_at(0.5), disks)) {
        c.boundary.push_back(arc);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("no boundary arc between consecutive vertices");
    }
  }
  c.vertices = std::move(vertices);
  return c;
}

Construction rotated_circles(int n, double r, double offset, double phase) {
  std::vector<Circle> disks;
  for (int k = 0; k < n; ++k) {
    disks.push_back({polar(offset, phase + 2 * kPi * k / n), r});
  }
  return disk_intersection(disks);
}

double constructive_radius(const PolyarcSpec& spec) {
  spec.validate();
  const double size = spec.size.to_double();
  const int n = spec.arc_count();
  const bool arc = spec.size_kind == SizeKind::kArcLength;
  switch (spec.family) {
    case Family::kRegularConcave:
    case Family::kApusamikkum4:
    case Family::kApusamikkum3:
      // Concave arcs span the interior angle (n-2)π/n of the centre polygon.
      return arc ? n * size / ((n - 2) * kPi) : size;
    case Family::kBarleyField:
      return arc ? 2 * size / kPi : size;
    case Family::kOxEye:
      return arc ? 3 * size / (2 * kPi) : size;
    case Family::kRegularConvex:
    case Family::kConvex4:
    case Family::kConvex6:
      if (arc) {
        throw DomainError(std::string(family_name(spec.family)) +
                          " is parameterised by the quadrant radius only");
      }
      return size;
  }
  throw std::logic_error("unhandled family");
}

Construction construct(const PolyarcSpec& spec) {
  const double r = constructive_radius(spec);
  const int n = spec.arc_count();
  switch (spec.family) {
    case Family::kRegularConcave:
      return concave_chain(n, r, kPi / 2);
    case Family::kApusamikkum3:
      // Centres form a triangle with side 2r, one side horizontal at the bottom.
      return concave_chain(3, r, kPi / 2);
    case Family::kApusamikkum4: {
      // Corners of the square of side 2r.
      Construction c = concave_chain(4, r, kPi / 4);
      const Vec2 corner = c.circles[0].center;
      const Vec2 unit = (1 / norm(corner)) * corner;
      c.guides.push_back({c.vertices[0], c.vertices[2]});  // diagonal HF = 2r
      c.guides.push_back({corner - r * unit, -1.0 * corner + r * unit});  // transversal KL
      return c;
    }
    case Family::kBarleyField: {
      // Lens from two circles whose centres lie r/√2 either side of the origin.
      Construction c = rotated_circles(2, r, r / std::numbers::sqrt2, kPi / 2);
      c.guides.push_back({c.vertices[0], c.vertices[1]});                      // length
      c.guides.push_back({c.boundary[0].point_at(0.5), c.boundary[1].point_at(0.5)});  // width
      return c;
    }
    case Family::kOxEye: {
      // Each centre lies on the other circle.
      Construction c = rotated_circles(2, r, r / 2, kPi / 2);
      c.guides.push_back({c.vertices[0], c.vertices[1]});
      c.guides.push_back({c.circles[0].center, c.circles[1].center});
      return c;
    }
    case Family::kRegularConvex:
    case Family::kConvex4:
    case Family::kConvex6: {
      // m lenses rotated by π/m: 2m quadrant circles at r/√2 from the centre.
      Construction c = rotated_circles(n, r, r / std::numbers::sqrt2, kPi / 2);
      add_polygon(c, c.vertices);
      if (n == 6) {
        for (const auto& v : c.vertices) {
          c.guides.push_back({Vec2{}, v});
        }
      }
      return c;
    }
  }
  throw std::logic_error("unhandled family");
}

std::vector<Vec2> sample_boundary(const std::vector<ArcPiece>& boundary, int chords_per_arc) {
  std::vector<Vec2> points;
  points.reserve(boundary.size() * static_cast<std::size_t>(chords_per_arc));
  for (const auto& arc : boundary) {
    for (int j = 0; j < chords_per_arc; ++j) {
      points.push_back(arc.point_at(static_cast<double>(j) / chords_per_arc));
    }
  }
  return points;
}

double shoelace_area(const std::vector<Vec2>& polygon) {
  double twice = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Vec2 a = polygon[i];
    const Vec2 b = polygon[(i + 1) % polygon.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

double oracle_area(const PolyarcSpec& spec, int chords_per_arc) {
  if (chords_per_arc < 8) {
    throw DomainError("the oracle needs at least 8 chords per arc");
  }
  return shoelace_area(sample_boundary(construct(spec).boundary, chords_per_arc));
}

}  // namespace polyarc
