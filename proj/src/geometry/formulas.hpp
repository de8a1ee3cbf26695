#pragma once

// Closed forms written once and instantiated for both evaluation modes.
// ExactField evaluates irrationals at working precision; ContextField looks
// them up in an ApproximationContext.

#include <type_traits>

#include "polyarc/babylon.hpp"
#include "polyarc/errors.hpp"
#include "polyarc/geometry.hpp"

namespace polyarc::formulas {

struct ExactField {
  using V = ExactReal;
  static constexpr bool kExact = true;
  int digits;

  V pi() const { return ExactReal::pi(digits); }
  V root(int radicand) const { return sqrt(ExactReal(radicand, digits)); }
  EvalMode mode() const { return ExactMode{digits}; }
};

struct ContextField {
  using V = Rational;
  static constexpr bool kExact = false;
  const ApproximationContext& context;

  V pi() const { return context.at(Irrational::kPi); }
  V root(int radicand) const {
    const auto symbol = sqrt_symbol(radicand);
    if (!symbol) {
      throw MissingSurrogate("no surrogate symbol for sqrt(" + std::to_string(radicand) + ")");
    }
    return context.at(*symbol);
  }
  EvalMode mode() const { return ContextMode{context}; }
};

template <class F>
FigureMetrics start(const F& f, Family family, int n = 0) {
  FigureMetrics m;
  m.family = family;
  m.n = n;
  m.mode = f.mode();
  return m;
}

template <class F>
typename F::V concave_area(const F& f, int n, const typename F::V& a) {
  using V = typename F::V;
  const V pi = f.pi();
  V cot_pi_n;
  if constexpr (F::kExact) {
    cot_pi_n = cot(pi / n);
  } else {
    switch (n) {
      case 3: cot_pi_n = 1 / f.root(3); break;
      case 4: cot_pi_n = 1; break;
      case 6: cot_pi_n = f.root(3); break;
      default:
        throw DomainError("cot(pi/" + std::to_string(n) + ") has no surrogate; use exact mode");
    }
  }
  const long n2 = static_cast<long>(n) - 2;
  const long n3 = static_cast<long>(n) * n * n;
  const long nn = static_cast<long>(n) * n;
  return (n3 / (pi * pi * (n2 * n2)) * cot_pi_n - nn / (2 * pi * n2)) * a * a;
}

inline ExactReal convex_area(const ExactField& f, int n, const ExactReal& r) {
  const ExactReal angle = f.pi() / n;
  const ExactReal s = sin(angle);
  const ExactReal c = cos(angle);
  const ExactReal s2 = sin(2 * angle);
  const ExactReal w = s * sqrt(1 + c * c);
  const ExactReal root2 = f.root(2);
  const ExactReal first = n * asin(w / root2 - s2 / (2 * root2));
  const ExactReal second = n * (w / 2 - s2 / 4);
  return (first - second) * r * r;
}

template <class F>
FigureMetrics barley_field(const F& f, const typename F::V& a) {
  const auto pi = f.pi();
  const auto s2 = f.root(2);
  auto m = start(f, Family::kBarleyField, 2);
  m.measures[Measure::kRadius] = 2 * a / pi;
  m.measures[Measure::kLength] = 2 * s2 * a / pi;
  m.measures[Measure::kWidth] = 2 * (2 - s2) * a / pi;
  m.area = 2 * (pi - 2) * a * a / (pi * pi);
  return m;
}

template <class F>
FigureMetrics ox_eye(const F& f, const typename F::V& a) {
  const auto pi = f.pi();
  const auto s3 = f.root(3);
  auto m = start(f, Family::kOxEye, 2);
  m.measures[Measure::kRadius] = 3 * a / (2 * pi);
  m.measures[Measure::kWidth] = 3 * a / (2 * pi);
  m.measures[Measure::kLength] = 3 * s3 * a / (2 * pi);
  m.area = (3 / (2 * pi) - 9 * s3 / (8 * pi * pi)) * a * a;
  return m;
}

template <class F>
FigureMetrics convex4(const F& f, const typename F::V& r) {
  const auto pi = f.pi();
  const auto s3 = f.root(3);
  auto m = start(f, Family::kConvex4, 4);
  m.measures[Measure::kRadius] = r;
  if constexpr (F::kExact) {
    m.measures[Measure::kSquareSide] = sqrt(2 - s3) * r;
  }
  m.measures[Measure::kSquareArea] = (2 - s3) * r * r;
  m.measures[Measure::kSegmentArea] = (pi / 3 - 1) * r * r / 4;
  m.area = (pi / 3 + 1 - s3) * r * r;
  return m;
}

template <class F>
FigureMetrics convex6(const F& f, const typename F::V& r) {
  const auto s3 = f.root(3);
  const auto s21 = f.root(21);
  auto m = start(f, Family::kConvex6, 6);
  m.measures[Measure::kRadius] = r;
  const auto hexagon = 3 * s3 / 8 * (5 - s21) * r * r;
  m.measures[Measure::kHexagonArea] = hexagon;
  if constexpr (F::kExact) {
    // Side of the inscribed hexagon: positive root of x² + (√6/2·r)x = r²/2.
    const ExactReal x = solve_quadratic_takiltum(f.root(6) * r / 2, r * r / 2);
    const ExactReal half_alpha = asin(x / (2 * r));
    const ExactReal alpha = 2 * half_alpha;
    const ExactReal s7 = f.root(7);
    m.measures[Measure::kHexagonSide] = x;
    m.measures[Measure::kTriangleArea] = s3 / 16 * (5 - s21) * r * r;
    m.measures[Measure::kHalfAngleAlpha] = half_alpha;
    m.measures[Measure::kAlpha] = alpha;
    m.measures[Measure::kSegmentArea] = alpha * r * r / 2 + (s7 - 3 * s3) / 16 * r * r;
    m.area = (6 * half_alpha + 3 * (s3 - s7) / 4) * r * r;
  } else {
    // Segments need α, which the scribe could not evaluate: the tablet value
    // is the inscribed hexagon alone.
    m.area = hexagon;
  }
  return m;
}

template <class F>
FigureMetrics apusamikkum4(const F& f, const typename F::V& a) {
  const auto pi = f.pi();
  const auto s2 = f.root(2);
  auto m = start(f, Family::kApusamikkum4, 4);
  m.measures[Measure::kRadius] = 2 * a / pi;
  m.measures[Measure::kDiagonal] = 4 * a / pi;
  m.measures[Measure::kTransversal] = 4 * (s2 - 1) * a / pi;
  m.area = (16 - 4 * pi) * a * a / (pi * pi);
  return m;
}

template <class F>
FigureMetrics apusamikkum3(const F& f, const typename F::V& r) {
  const auto pi = f.pi();
  const auto s3 = f.root(3);
  auto m = start(f, Family::kApusamikkum3, 3);
  m.measures[Measure::kRadius] = r;
  m.area = (s3 - pi / 2) * r * r;
  return m;
}

}  // namespace polyarc::formulas
