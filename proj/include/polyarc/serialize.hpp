#pragma once

#include <json.hpp>

#include "polyarc/babylon.hpp"
#include "polyarc/geometry.hpp"
#include "polyarc/rational.hpp"
#include "polyarc/sexagesimal.hpp"
#include "polyarc/tablet.hpp"
#include "polyarc/value.hpp"

// JSON forms. Numbers are never written as binary floating point: rationals
// are {"num", "den"} decimal strings, reals are decimal strings carrying
// their working precision. Readers throw ParseError on malformed input.
namespace polyarc::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"sign": "+"|"-", "int": [..], "frac": [..]}
Json to_json(const Sexagesimal& s);
Sexagesimal sexagesimal_from_json(const Json& j);

/// {"PI": "3/1", "SQRT3": "26/15", ...}
Json to_json(const ApproximationContext& context);
ApproximationContext context_from_json(const Json& j, std::string name = "custom");

/// {"rational": {...}} or {"decimal": "..."}; `sexagesimal_places` > 0 adds a
/// truncated "sexagesimal" field to rationals.
Json to_json(const Value& v, int sexagesimal_places = 0);
Value value_from_json(const Json& j, int digits = kDefaultPrecision);

Json to_json(const FigureMetrics& m, int sexagesimal_places = 0);
FigureMetrics metrics_from_json(const Json& j);

Json to_json(const HeronTrace& trace, int sexagesimal_places = tablet::kDisplayPlaces);
HeronTrace heron_from_json(const Json& j);

Json to_json(const tablet::VerificationReport& report);
tablet::VerificationReport report_from_json(const Json& j);

Json to_json(const tablet::TableCell& cell);
tablet::TableCell table_cell_from_json(const Json& j);

Json to_json(const tablet::Table3Row& row);
tablet::Table3Row table3_row_from_json(const Json& j);

Json to_json(const tablet::ScribeErrorAnalysis& analysis);

}  // namespace polyarc::io
