#pragma once

#include <cmath>
#include <algorithm>
#include <regex>
#include <utility>
#include <sstream>
#include <string>
#include <vector>

#include "polyarc/exact_real.hpp"
#include "polyarc/rational.hpp"
#include "polyarc/value.hpp"

namespace testing {

// Oracle strings carry 40 significant digits.
inline polyarc::ExactReal oracle_real(const char* text) { return polyarc::ExactReal::parse(text, 45); }

inline polyarc::Rational q(const char* text) { return polyarc::Rational::parse(text); }

/// |a − b| ≤ tol · |b|, evaluated in high precision.
inline bool relatively_close(const polyarc::ExactReal& a, const polyarc::ExactReal& b, const char* tol) {
  const polyarc::ExactReal bound = abs(b) * polyarc::ExactReal::parse(tol, 45);
  return abs(a - b) <= bound;
}

inline bool relatively_close(const polyarc::Value& a, const polyarc::ExactReal& b, const char* tol) {
  return relatively_close(polyarc::to_exact(a, 45), b, tol);
}

struct SvgCircle {
  double cx;
  double cy;
  double r;
};

inline std::vector<SvgCircle> svg_circles(const std::string& svg, const std::string& cls = "constructive") {
  const std::regex pattern("<circle class=\"" + cls + "\" cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\" r=\"([-0-9.]+)\"");
  std::vector<SvgCircle> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pattern); it != std::sregex_iterator(); ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
  }
  return out;
}

struct SvgArc {
  double x0, y0, r;
  int large, sweep;
  double x1, y1;
};

/// Arc commands of every path, with the start point of each arc.
inline std::vector<SvgArc> svg_arcs(const std::string& svg) {
  std::vector<SvgArc> out;
  const std::regex path("d=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator(); ++it) {
    std::istringstream d((*it)[1].str());
    std::string cmd;
    double x = 0;
    double y = 0;
    while (d >> cmd) {
      if (cmd == "M") {
        d >> x >> y;
      } else if (cmd == "A") {
        SvgArc arc{};
        double ry = 0;
        double rotation = 0;
        arc.x0 = x;
        arc.y0 = y;
        d >> arc.r >> ry >> rotation >> arc.large >> arc.sweep >> arc.x1 >> arc.y1;
        x = arc.x1;
        y = arc.y1;
        out.push_back(arc);
      }
    }
  }
  return out;
}

/// Central angle of an SVG arc of a circle (radians).
inline double central_angle(const SvgArc& arc) {
  const double chord = std::hypot(arc.x1 - arc.x0, arc.y1 - arc.y0);
  const double minor = 2 * std::asin(std::min(1.0, chord / (2 * arc.r)));
  return arc.large ? 2 * M_PI - minor : minor;
}

/// Centre of an SVG circular arc, from its endpoints and flags (SVG 1.1
/// implementation notes, endpoint to centre conversion).
inline std::pair<double, double> arc_center(const SvgArc& arc) {
  const double hx = (arc.x0 - arc.x1) / 2;
  const double hy = (arc.y0 - arc.y1) / 2;
  const double h2 = hx * hx + hy * hy;
  const double factor = std::sqrt(std::max(0.0, (arc.r * arc.r - h2) / h2));
  const double sign = arc.large != arc.sweep ? 1.0 : -1.0;
  return {sign * factor * hy + (arc.x0 + arc.x1) / 2, sign * factor * -hx + (arc.y0 + arc.y1) / 2};
}

}  // namespace testing
