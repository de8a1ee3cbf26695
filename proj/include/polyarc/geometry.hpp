#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <variant>

#include "polyarc/babylon.hpp"
#include "polyarc/exact_real.hpp"
#include "polyarc/rational.hpp"
#include "polyarc/value.hpp"

namespace polyarc {

enum class Family {
  kRegularConcave,
  kRegularConvex,
  kBarleyField,
  kOxEye,
  kConvex4,
  kConvex6,
  kApusamikkum4,
  kApusamikkum3,
};

inline constexpr Family kAllFamilies[] = {
    Family::kRegularConcave, Family::kRegularConvex, Family::kBarleyField, Family::kOxEye,
    Family::kConvex4,        Family::kConvex6,       Family::kApusamikkum4, Family::kApusamikkum3};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

enum class SizeKind { kArcLength, kRadius };

/// The size parameter each figure's formulas are stated in: arc length a for
/// the concave family, barley-field, ox-eye and apusamikkum; quadrant radius r
/// for the convex family, the 4- and 6-arc lens overlaps and the 3-vertex
/// apusamikkum.
SizeKind natural_size_kind(Family family);

struct PolyarcSpec {
  Family family = Family::kBarleyField;
  int n = 0;  // arc count; only read for the two generic families
  SizeKind size_kind = SizeKind::kArcLength;
  Rational size = 1;

  static PolyarcSpec named(Family family, const Rational& size = 1, int n = 0);

  /// Arc count of the figure (n for the generic families, fixed otherwise).
  int arc_count() const;
  /// Throws DomainError for n < 3 (concave), odd or n < 2 (convex), size <= 0.
  void validate() const;
};

enum class Measure {
  kLength,
  kWidth,
  kDiagonal,
  kTransversal,
  kRadius,
  kSquareSide,
  kSquareArea,
  kSegmentArea,
  kTriangleArea,
  kHexagonSide,
  kHexagonArea,
  kAlpha,
  kHalfAngleAlpha,
};

std::string_view measure_name(Measure measure);
std::optional<Measure> measure_from_name(std::string_view name);

struct ExactMode {
  int precision = kDefaultPrecision;
};
struct ContextMode {
  ApproximationContext context;
};
/// EXACT evaluates the closed forms at working precision; CONTEXT substitutes
/// rational surrogates into the same final formulas (the scribe's path).
using EvalMode = std::variant<ExactMode, ContextMode>;

struct FigureMetrics {
  Family family = Family::kBarleyField;
  int n = 0;
  EvalMode mode;
  Value area;
  std::map<Measure, Value> measures;

  bool has(Measure m) const { return measures.contains(m); }
  /// Throws std::out_of_range when the figure does not define `m`.
  const Value& at(Measure m) const;
};

// Regular concave n-arc with arc length a. CONTEXT mode needs a surrogate for
// cot(π/n) and so only covers n ∈ {3, 4, 6}.
Value concave_area_general(int n, const Rational& a, const EvalMode& mode);
ExactReal concave_area_general(int n, const ExactReal& a);

// Regular convex n-arc (n even) from rotated lenses with quadrant radius r.
// EXACT only; arcsine has no surrogate.
Value convex_area_general(int n, const Rational& r, const EvalMode& mode);
ExactReal convex_area_general(int n, const ExactReal& r);

FigureMetrics barley_field_metrics(const Rational& a, const EvalMode& mode);
FigureMetrics barley_field_metrics(const ExactReal& a);
FigureMetrics ox_eye_metrics(const Rational& a, const EvalMode& mode);
FigureMetrics ox_eye_metrics(const ExactReal& a);
FigureMetrics convex4_metrics(const Rational& r, const EvalMode& mode);
FigureMetrics convex4_metrics(const ExactReal& r);
FigureMetrics convex6_metrics(const Rational& r, const EvalMode& mode);
FigureMetrics convex6_metrics(const ExactReal& r);
FigureMetrics apusamikkum4_metrics(const Rational& a, const EvalMode& mode);
FigureMetrics apusamikkum4_metrics(const ExactReal& a);
FigureMetrics apusamikkum3_metrics(const Rational& r, const EvalMode& mode);
FigureMetrics apusamikkum3_metrics(const ExactReal& r);

/// Radius of the circle carrying the centres of a chain of n pairwise tangent
/// circles of radius r: r / sin(π/n).
ExactReal chain_radius(int n, const ExactReal& r);
ExactReal chain_radius(int n, const Rational& r, int precision = kDefaultPrecision);

/// Dispatch on spec.family. A size given in the non-natural kind is converted
/// in EXACT mode and rejected in CONTEXT mode.
FigureMetrics compute_metrics(const PolyarcSpec& spec, const EvalMode& mode);

/// Independent numeric check: builds the figure from circles, replaces every
/// boundary arc by `chords_per_arc` chords and returns the shoelace area.
double oracle_area(const PolyarcSpec& spec, int chords_per_arc);

}  // namespace polyarc
