#include "polyarc/serialize.hpp"

#include <string>

#include "polyarc/errors.hpp"

namespace polyarc::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing JSON field '") + key + "'", 0);
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("JSON field '") + key + "' must be a string", 0);
  }
  return v.get<std::string>();
}

Json decimal(const ExactReal& x) { return Json{{"decimal", x.to_decimal()}, {"digits", x.digits()}}; }

ExactReal decimal_from_json(const Json& j, int digits) {
  if (j.contains("digits")) {
    digits = field(j, "digits").get<int>();
  }
  return ExactReal::parse(string_field(j, "decimal"), digits);
}

std::string mode_name(const EvalMode& mode) {
  return std::holds_alternative<ExactMode>(mode) ? "exact" : "context";
}

}  // namespace

Json to_json(const Rational& q) {
  return Json{{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

Rational rational_from_json(const Json& j) {
  return Rational::parse(string_field(j, "num") + "/" + string_field(j, "den"));
}

Json to_json(const Sexagesimal& s) {
  return Json{{"sign", s.negative() ? "-" : "+"}, {"int", s.integer_digits()}, {"frac", s.fraction_digits()}};
}

Sexagesimal sexagesimal_from_json(const Json& j) {
  const std::string sign = string_field(j, "sign");
  if (sign != "+" && sign != "-") {
    throw ParseError("sexagesimal sign must be \"+\" or \"-\"", 0);
  }
  return Sexagesimal(sign == "-", field(j, "int").get<std::vector<int>>(),
                     field(j, "frac").get<std::vector<int>>());
}

Json to_json(const ApproximationContext& context) {
  Json j = Json::object();
  for (const auto& [symbol, value] : context.entries()) {
    j[std::string(symbol_name(symbol))] = value.to_fraction_string();
  }
  return j;
}

ApproximationContext context_from_json(const Json& j, std::string name) {
  if (!j.is_object()) {
    throw ParseError("context must be a JSON object", 0);
  }
  std::map<Irrational, Rational> entries;
  for (const auto& [key, value] : j.items()) {
    const auto symbol = symbol_from_name(key);
    if (!symbol) {
      throw ParseError("unknown context symbol '" + key + "'", 0);
    }
    if (!value.is_string()) {
      throw ParseError("surrogate for " + key + " must be a string such as \"7/4\"", 0);
    }
    entries.emplace(*symbol, Rational::parse(value.get<std::string>()));
  }
  return ApproximationContext(std::move(name), std::move(entries));
}

Json to_json(const Value& v, int sexagesimal_places) {
  if (const auto* q = std::get_if<Rational>(&v)) {
    Json j{{"rational", to_json(*q)}};
    if (sexagesimal_places > 0) {
      j["sexagesimal"] = to_json(Sexagesimal::from_rational(*q, sexagesimal_places));
    }
    return j;
  }
  return decimal(std::get<ExactReal>(v));
}

Value value_from_json(const Json& j, int digits) {
  if (j.contains("rational")) {
    return rational_from_json(j.at("rational"));
  }
  return decimal_from_json(j, digits);
}

Json to_json(const FigureMetrics& m, int sexagesimal_places) {
  Json j{{"figure", std::string(family_name(m.family))}, {"n", m.n}, {"mode", mode_name(m.mode)}};
  if (const auto* exact = std::get_if<ExactMode>(&m.mode)) {
    j["precision"] = exact->precision;
    j["context"] = nullptr;
  } else {
    const auto& context = std::get<ContextMode>(m.mode).context;
    j["precision"] = nullptr;
    j["context"] = context.name();
    j["surrogates"] = to_json(context);
  }
  j["area"] = to_json(m.area, sexagesimal_places);
  Json measures = Json::object();
  for (const auto& [measure, value] : m.measures) {
    measures[std::string(measure_name(measure))] = to_json(value, sexagesimal_places);
  }
  j["measures"] = std::move(measures);
  return j;
}

FigureMetrics metrics_from_json(const Json& j) {
  FigureMetrics m;
  const std::string figure = string_field(j, "figure");
  const auto family = family_from_name(figure);
  if (!family) {
    throw ParseError("unknown figure '" + figure + "'", 0);
  }
  m.family = *family;
  m.n = field(j, "n").get<int>();
  const std::string mode = string_field(j, "mode");
  int digits = kDefaultPrecision;
  if (mode == "exact") {
    digits = field(j, "precision").get<int>();
    m.mode = ExactMode{digits};
  } else if (mode == "context") {
    m.mode = ContextMode{context_from_json(field(j, "surrogates"), string_field(j, "context"))};
  } else {
    throw ParseError("unknown mode '" + mode + "'", 0);
  }
  m.area = value_from_json(field(j, "area"), digits);
  for (const auto& [key, value] : field(j, "measures").items()) {
    const auto measure = measure_from_name(key);
    if (!measure) {
      throw ParseError("unknown measure '" + key + "'", 0);
    }
    m.measures.emplace(*measure, value_from_json(value, digits));
  }
  return m;
}

Json to_json(const HeronTrace& trace, int sexagesimal_places) {
  Json iterates = Json::array();
  for (const auto& x : trace.iterates) {
    iterates.push_back(Json{{"rational", to_json(x)},
                            {"sexagesimal", to_json(Sexagesimal::from_rational(x, sexagesimal_places))}});
  }
  return Json{{"radicand", to_json(trace.radicand)}, {"seed", to_json(trace.seed)}, {"iterates", iterates}};
}

HeronTrace heron_from_json(const Json& j) {
  HeronTrace trace{rational_from_json(field(j, "radicand")), rational_from_json(field(j, "seed")), {}};
  for (const auto& item : field(j, "iterates")) {
    trace.iterates.push_back(rational_from_json(field(item, "rational")));
  }
  return trace;
}

Json to_json(const tablet::VerificationReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back(Json{{"context", c.context},
                              {"rational", to_json(c.value)},
                              {"sexagesimal", to_json(c.sexagesimal)},
                              {"matches", c.matches}});
  }
  return Json{{"id", r.entry_id},
              {"line", r.line},
              {"scribe", to_json(r.scribe_value)},
              {"recomputed", Json{{"rational", to_json(r.recomputed_rational)},
                                  {"sexagesimal", to_json(r.recomputed_sexagesimal)}}},
              {"matches", r.matches_scribe},
              {"expected_match", r.expected_match},
              {"exact", decimal(r.exact_value)},
              {"error_percent", decimal(r.scribe_error_percent)},
              {"candidates", candidates}};
}

tablet::VerificationReport report_from_json(const Json& j) {
  tablet::VerificationReport r;
  r.entry_id = string_field(j, "id");
  r.line = field(j, "line").get<int>();
  r.scribe_value = sexagesimal_from_json(field(j, "scribe"));
  const Json& recomputed = field(j, "recomputed");
  r.recomputed_rational = rational_from_json(field(recomputed, "rational"));
  r.recomputed_sexagesimal = sexagesimal_from_json(field(recomputed, "sexagesimal"));
  r.matches_scribe = field(j, "matches").get<bool>();
  r.expected_match = field(j, "expected_match").get<bool>();
  r.exact_value = decimal_from_json(field(j, "exact"), kDefaultPrecision);
  r.scribe_error_percent = decimal_from_json(field(j, "error_percent"), kDefaultPrecision);
  for (const auto& c : field(j, "candidates")) {
    r.candidates.push_back({string_field(c, "context"), rational_from_json(field(c, "rational")),
                            sexagesimal_from_json(field(c, "sexagesimal")), field(c, "matches").get<bool>()});
  }
  return r;
}

Json to_json(const tablet::TableCell& cell) {
  return Json{{"seed", to_json(cell.seed)},
              {"step", cell.step},
              {"rational", to_json(cell.value)},
              {"sexagesimal", to_json(cell.sexagesimal)},
              {"printed", to_json(cell.printed)},
              {"matches_printed", cell.matches_printed}};
}

tablet::TableCell table_cell_from_json(const Json& j) {
  return {rational_from_json(field(j, "seed")),       field(j, "step").get<int>(),
          rational_from_json(field(j, "rational")),   sexagesimal_from_json(field(j, "sexagesimal")),
          sexagesimal_from_json(field(j, "printed")), field(j, "matches_printed").get<bool>()};
}

Json to_json(const tablet::Table3Row& row) {
  return Json{{"sqrt3", to_json(row.sqrt3)},
              {"sqrt21", to_json(row.sqrt21)},
              {"rational", to_json(row.value)},
              {"distance", to_json(row.distance)},
              {"decimal", ExactReal(row.value, kDefaultPrecision).to_decimal()}};
}

tablet::Table3Row table3_row_from_json(const Json& j) {
  return {rational_from_json(field(j, "sqrt3")), rational_from_json(field(j, "sqrt21")),
          rational_from_json(field(j, "rational")), rational_from_json(field(j, "distance"))};
}

Json to_json(const tablet::ScribeErrorAnalysis& a) {
  return Json{{"scribe", Json{{"rational", to_json(a.scribe_value)},
                              {"sexagesimal", to_json(Sexagesimal::from_rational(a.scribe_value, 8))}}},
              {"exact_total_area", decimal(a.exact_total_area)},
              {"exact_hexagon_area", decimal(a.exact_hexagon_area)},
              {"printed_formula_percent", decimal(a.printed_formula_percent)},
              {"hexagon_denominator_percent", decimal(a.hexagon_denominator_percent)},
              {"claimed_percent", "1.4"},
              {"claim_reproduced", a.claim_reproduced}};
}

}  // namespace polyarc::io
