#include "polyarc/geometry.hpp"

#include <stdexcept>
#include <string>

#include "formulas.hpp"
#include "polyarc/errors.hpp"

namespace polyarc {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  SizeKind natural;
  int arcs;  // 0 for the generic families
};

constexpr FamilyInfo kFamilies[] = {
    {Family::kRegularConcave, "regular-concave", SizeKind::kArcLength, 0},
    {Family::kRegularConvex, "regular-convex", SizeKind::kRadius, 0},
    {Family::kBarleyField, "barley-field", SizeKind::kArcLength, 2},
    {Family::kOxEye, "ox-eye", SizeKind::kArcLength, 2},
    {Family::kConvex4, "convex-4", SizeKind::kRadius, 4},
    {Family::kConvex6, "convex-6", SizeKind::kRadius, 6},
    {Family::kApusamikkum4, "apusamikkum-4", SizeKind::kArcLength, 4},
    {Family::kApusamikkum3, "apusamikkum-3", SizeKind::kRadius, 3},
};

const FamilyInfo& info(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) {
      return f;
    }
  }
  throw std::logic_error("unknown family");
}

constexpr std::pair<Measure, std::string_view> kMeasureNames[] = {
    {Measure::kLength, "length"},
    {Measure::kWidth, "width"},
    {Measure::kDiagonal, "diagonal"},
    {Measure::kTransversal, "transversal"},
    {Measure::kRadius, "radius"},
    {Measure::kSquareSide, "square_side"},
    {Measure::kSquareArea, "square_area"},
    {Measure::kSegmentArea, "segment_area"},
    {Measure::kTriangleArea, "triangle_area"},
    {Measure::kHexagonSide, "hexagon_side"},
    {Measure::kHexagonArea, "hexagon_area"},
    {Measure::kAlpha, "alpha"},
    {Measure::kHalfAngleAlpha, "half_angle_alpha"},
};

void require_positive(const Rational& size) {
  if (size.sign() <= 0) {
    throw DomainError("size parameter must be positive");
  }
}

void require_positive(const ExactReal& size) {
  if (size.sign() <= 0) {
    throw DomainError("size parameter must be positive");
  }
}

void require_concave_n(int n) {
  if (n < 3) {
    throw DomainError("regular concave polyarc needs n >= 3");
  }
}

void require_convex_n(int n) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("regular convex polyarc needs an even n >= 2");
  }
}

// Rational size evaluated in either mode through the shared template.
template <class Formula>
FigureMetrics evaluate(const Rational& size, const EvalMode& mode, Formula&& formula) {
  require_positive(size);
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    formulas::ExactField f{exact->precision};
    return formula(f, ExactReal(size, exact->precision));
  }
  formulas::ContextField f{std::get<ContextMode>(mode).context};
  return formula(f, size);
}

template <class Formula>
FigureMetrics evaluate_exact(const ExactReal& size, Formula&& formula) {
  require_positive(size);
  formulas::ExactField f{size.digits()};
  return formula(f, size);
}

#define POLYARC_FIGURE(fn, tmpl)                                                       \
  FigureMetrics fn(const Rational& size, const EvalMode& mode) {                       \
    return evaluate(size, mode, [](const auto& f, const auto& s) { return formulas::tmpl(f, s); }); \
  }                                                                                    \
  FigureMetrics fn(const ExactReal& size) {                                            \
    return evaluate_exact(size, [](const auto& f, const auto& s) { return formulas::tmpl(f, s); }); \
  }

}  // namespace

std::string_view family_name(Family family) { return info(family).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) {
      return f.family;
    }
  }
  return std::nullopt;
}

SizeKind natural_size_kind(Family family) { return info(family).natural; }

std::string_view measure_name(Measure measure) {
  for (const auto& [m, name] : kMeasureNames) {
    if (m == measure) {
      return name;
    }
  }
  throw std::logic_error("unknown measure");
}

std::optional<Measure> measure_from_name(std::string_view name) {
  for (const auto& [m, n] : kMeasureNames) {
    if (n == name) {
      return m;
    }
  }
  return std::nullopt;
}

PolyarcSpec PolyarcSpec::named(Family family, const Rational& size, int n) {
  return PolyarcSpec{family, n, natural_size_kind(family), size};
}

int PolyarcSpec::arc_count() const {
  const int fixed = info(family).arcs;
  return fixed == 0 ? n : fixed;
}

void PolyarcSpec::validate() const {
  if (family == Family::kRegularConcave) {
    require_concave_n(n);
  } else if (family == Family::kRegularConvex) {
    require_convex_n(n);
  }
  require_positive(size);
}

const Value& FigureMetrics::at(Measure m) const {
  const auto it = measures.find(m);
  if (it == measures.end()) {
    throw std::out_of_range("figure " + std::string(family_name(family)) + " has no " +
                            std::string(measure_name(m)));
  }
  return it->second;
}

Value concave_area_general(int n, const Rational& a, const EvalMode& mode) {
  require_concave_n(n);
  require_positive(a);
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    return concave_area_general(n, ExactReal(a, exact->precision));
  }
  formulas::ContextField f{std::get<ContextMode>(mode).context};
  return formulas::concave_area(f, n, a);
}

ExactReal concave_area_general(int n, const ExactReal& a) {
  require_concave_n(n);
  require_positive(a);
  return formulas::concave_area(formulas::ExactField{a.digits()}, n, a);
}

Value convex_area_general(int n, const Rational& r, const EvalMode& mode) {
  require_convex_n(n);
  require_positive(r);
  const auto* exact = std::get_if<ExactMode>(&mode);
  if (exact == nullptr) {
    throw DomainError("the general convex formula needs arcsine; only exact mode is supported");
  }
  return convex_area_general(n, ExactReal(r, exact->precision));
}

ExactReal convex_area_general(int n, const ExactReal& r) {
  require_convex_n(n);
  require_positive(r);
  return formulas::convex_area(formulas::ExactField{r.digits()}, n, r);
}

POLYARC_FIGURE(barley_field_metrics, barley_field)
POLYARC_FIGURE(ox_eye_metrics, ox_eye)
POLYARC_FIGURE(convex4_metrics, convex4)
POLYARC_FIGURE(convex6_metrics, convex6)
POLYARC_FIGURE(apusamikkum4_metrics, apusamikkum4)
POLYARC_FIGURE(apusamikkum3_metrics, apusamikkum3)

#undef POLYARC_FIGURE

ExactReal chain_radius(int n, const ExactReal& r) {
  if (n < 3) {
    throw DomainError("a tangent chain needs n >= 3 circles");
  }
  require_positive(r);
  return r / sin(ExactReal::pi(r.digits()) / n);
}

ExactReal chain_radius(int n, const Rational& r, int precision) {
  return chain_radius(n, ExactReal(r, precision));
}

namespace {

// Natural size parameter from the one given in the spec (EXACT mode only).
ExactReal natural_size(const PolyarcSpec& spec, int digits) {
  const ExactReal given(spec.size, digits);
  if (spec.size_kind == natural_size_kind(spec.family)) {
    return given;
  }
  const ExactReal pi = ExactReal::pi(digits);
  const int n = spec.arc_count();
  switch (spec.family) {
    case Family::kRegularConcave:
    case Family::kApusamikkum4:
      // Each arc spans the polygon's interior angle (n-2)π/n.
      return (n - 2) * pi * given / n;
    case Family::kBarleyField:
      return pi * given / 2;
    case Family::kOxEye:
      return 2 * pi * given / 3;
    case Family::kApusamikkum3:
      return 3 * given / pi;
    default:
      throw DomainError(std::string(family_name(spec.family)) +
                        " is parameterised by the quadrant radius only");
  }
}

}  // namespace

FigureMetrics compute_metrics(const PolyarcSpec& spec, const EvalMode& mode) {
  spec.validate();
  const bool natural = spec.size_kind == natural_size_kind(spec.family);
  if (std::holds_alternative<ContextMode>(mode)) {
    if (!natural) {
      throw DomainError("context mode needs the figure's natural size parameter");
    }
    switch (spec.family) {
      case Family::kRegularConcave: {
        FigureMetrics m;
        m.family = spec.family;
        m.n = spec.n;
        m.mode = mode;
        m.area = concave_area_general(spec.n, spec.size, mode);
        return m;
      }
      case Family::kRegularConvex:
        return {spec.family, spec.n, mode, convex_area_general(spec.n, spec.size, mode), {}};
      case Family::kBarleyField: return barley_field_metrics(spec.size, mode);
      case Family::kOxEye: return ox_eye_metrics(spec.size, mode);
      case Family::kConvex4: return convex4_metrics(spec.size, mode);
      case Family::kConvex6: return convex6_metrics(spec.size, mode);
      case Family::kApusamikkum4: return apusamikkum4_metrics(spec.size, mode);
      case Family::kApusamikkum3: return apusamikkum3_metrics(spec.size, mode);
    }
  }
  const int digits = std::get<ExactMode>(mode).precision;
  const ExactReal size = natural_size(spec, digits);
  switch (spec.family) {
    case Family::kRegularConcave: {
      FigureMetrics m{spec.family, spec.n, mode, concave_area_general(spec.n, size), {}};
      const ExactReal pi = ExactReal::pi(digits);
      m.measures[Measure::kRadius] = spec.n * size / ((spec.n - 2) * pi);
      return m;
    }
    case Family::kRegularConvex: {
      FigureMetrics m{spec.family, spec.n, mode, convex_area_general(spec.n, size), {}};
      m.measures[Measure::kRadius] = size;
      return m;
    }
    case Family::kBarleyField: return barley_field_metrics(size);
    case Family::kOxEye: return ox_eye_metrics(size);
    case Family::kConvex4: return convex4_metrics(size);
    case Family::kConvex6: return convex6_metrics(size);
    case Family::kApusamikkum4: return apusamikkum4_metrics(size);
    case Family::kApusamikkum3: return apusamikkum3_metrics(size);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace polyarc
