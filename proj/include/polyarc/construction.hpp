#pragma once

#include <string>
#include <vector>

#include "polyarc/geometry.hpp"

namespace polyarc {

struct Vec2 {
  double x = 0;
  double y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
};

double norm(Vec2 v);
double distance(Vec2 a, Vec2 b);

struct Circle {
  Vec2 center;
  double radius = 0;
};

/// Arc of a circle from angle `start` through signed `sweep` (radians,
/// positive = counterclockwise).
struct ArcPiece {
  Vec2 center;
  double radius = 0;
  double start = 0;
  double sweep = 0;

  Vec2 point_at(double t) const;  // t in [0, 1]
  Vec2 from() const { return point_at(0); }
  Vec2 to() const { return point_at(1); }
};

/// The arc of `circle` from `from` to `to` whose midpoint lies nearer to
/// `toward`; the two candidates are the counterclockwise and clockwise arcs.
ArcPiece arc_between(const Circle& circle, Vec2 from, Vec2 to, Vec2 toward);

struct Segment {
  Vec2 a;
  Vec2 b;
};

/// A figure laid out in the plane: the constructive circles, the closed
/// boundary as a counterclockwise chain of arcs, and auxiliary lines.
struct Construction {
  std::vector<Circle> circles;
  std::vector<ArcPiece> boundary;
  std::vector<Vec2> vertices;
  std::vector<Segment> guides;
};

/// n circles of radius r, pairwise tangent, centres on r / sin(π/n) with the
/// first centre at angle `phase`. Boundary is the inner concave n-arc.
Construction concave_chain(int n, double r, double phase);

/// Boundary of the intersection of the given disks (assumed to have a
/// non-empty interior bounded by at least two arcs).
Construction disk_intersection(const std::vector<Circle>& disks);

/// n disks of radius r with centres at distance `offset` from the origin,
/// equally spaced in angle; the innermost n arcs form a regular convex n-arc.
Construction rotated_circles(int n, double r, double offset, double phase = 0);

/// Construction of a named figure at its spec size, with the guides the
/// figure's dimensions refer to (length/width, diagonal/transversal, ...).
Construction construct(const PolyarcSpec& spec);

/// Radius of the constructive circles of `spec`, in floating point.
double constructive_radius(const PolyarcSpec& spec);

/// Points of the boundary with every arc split into `chords_per_arc` chords.
std::vector<Vec2> sample_boundary(const std::vector<ArcPiece>& boundary, int chords_per_arc);

/// Signed shoelace area (positive for counterclockwise order).
double shoelace_area(const std::vector<Vec2>& polygon);

}  // namespace polyarc
