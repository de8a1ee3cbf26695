#include "polyarc/tablet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "polyarc/errors.hpp"

namespace polyarc::tablet {

namespace {

const Rational kSeeds[] = {Rational(4), Rational(5), Rational(9, 2)};

// Table cells as printed, row by row (seed 4, 5, 4;30), columns x1..x3.
constexpr std::string_view kPrintedTable1[] = {
    "4;37,30", "4;34,57,58,22,42", "4;34,57,16,21,3",
    "4;36",    "4;34,57,23,28,41", "4;34,57,16,21,0",
    "4;35",    "4;34,57,16,21,49", "4;34,57,16,21,0",
};
constexpr std::string_view kPrintedTable2[] = {
    "0;14,45,56,13",  "0;16,25,18,51,4", "0;16,26,9,53,40",
    "0;15,45",        "0;16,26,5,13,2",  "0;16,26,9,53,42",
    "0;16,24,22,30",  "0;16,26,9,53,10", "0;16,26,9,53,42",
};

std::string seed_label(const Rational& seed) {
  return Sexagesimal::from_rational(seed, kDisplayPlaces).to_string();
}

// Standard surrogates with √21 replaced by each table-1 iterate.
std::vector<ApproximationContext> line6_contexts() {
  std::vector<ApproximationContext> contexts;
  const auto base = standard_context();
  for (const auto& seed : kSeeds) {
    const auto trace = heron_sequence(21, seed, 3);
    for (int step = 1; step <= 3; ++step) {
      contexts.push_back(base.with(Irrational::kSqrt21, trace.iterates[static_cast<std::size_t>(step)],
                                   "standard+sqrt21(x0=" + seed_label(seed) + ",x" +
                                       std::to_string(step) + ")"));
    }
  }
  return contexts;
}

TabletEntry make(std::string id, int line, std::string label, Family figure, Quantity quantity,
                 std::string_view scribe, std::vector<ApproximationContext> contexts,
                 bool expected_match = true) {
  return TabletEntry{std::move(id),
                     line,
                     std::move(label),
                     figure,
                     quantity,
                     Sexagesimal::parse(scribe),
                     Recipe{std::move(contexts), 1},
                     expected_match};
}

Value pick(const FigureMetrics& m, Quantity q) {
  switch (q) {
    case Quantity::kArea: return m.area;
    case Quantity::kSquareArea: return m.at(Measure::kSquareArea);
    case Quantity::kLength: return m.at(Measure::kLength);
    case Quantity::kWidth: return m.at(Measure::kWidth);
    case Quantity::kDiagonal: return m.at(Measure::kDiagonal);
    case Quantity::kTransversal: return m.at(Measure::kTransversal);
  }
  throw std::logic_error("unhandled quantity");
}

ExactReal percent_error(const ExactReal& exact, const Rational& approx) {
  return abs(exact - ExactReal(approx, exact.digits())) / exact * 100;
}

Rational hexagon_with(const Rational& sqrt3, const Rational& sqrt21) {
  const ApproximationContext context(
      "table", {{Irrational::kSqrt3, sqrt3}, {Irrational::kSqrt21, sqrt21}});
  return std::get<Rational>(convex6_metrics(1, ContextMode{context}).at(Measure::kHexagonArea));
}

void append_unique(std::vector<Rational>& list, const Rational& value) {
  if (std::find(list.begin(), list.end(), value) == list.end()) {
    list.push_back(value);
  }
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kArea: return "area";
    case Quantity::kSquareArea: return "square_area";
    case Quantity::kLength: return "length";
    case Quantity::kWidth: return "width";
    case Quantity::kDiagonal: return "diagonal";
    case Quantity::kTransversal: return "transversal";
  }
  throw std::logic_error("unhandled quantity");
}

const std::vector<TabletEntry>& builtin_entries() {
  static const std::vector<TabletEntry> entries = [] {
    const auto standard = standard_context();
    const auto alt = alt_sqrt3_context();
    return std::vector<TabletEntry>{
        make("L5-square", 5, "two barley-fields overlap: inner square", Family::kConvex4,
             Quantity::kSquareArea, "0;16", {alt}),
        make("L5-total", 5, "two barley-fields overlap: whole figure", Family::kConvex4,
             Quantity::kArea, "0;16", {alt}),
        make("L6", 6, "three barley-fields overlap", Family::kConvex6, Quantity::kArea,
             "0;16,26,46,40", line6_contexts(), false),
        make("L16", 16, "barley-field constant", Family::kBarleyField, Quantity::kArea, "0;13,20",
             {standard}),
        make("L17", 17, "barley-field length", Family::kBarleyField, Quantity::kLength, "0;56,40",
             {standard}),
        make("L18", 18, "barley-field width", Family::kBarleyField, Quantity::kWidth, "0;23,20",
             {standard}),
        make("L19", 19, "ox-eye constant", Family::kOxEye, Quantity::kArea, "0;16,52,30", {standard}),
        make("L20", 20, "ox-eye length", Family::kOxEye, Quantity::kLength, "0;52,30", {standard}),
        make("L21", 21, "ox-eye width", Family::kOxEye, Quantity::kWidth, "0;30", {standard}),
        make("L22", 22, "apusamikkum constant", Family::kApusamikkum4, Quantity::kArea, "0;26,40",
             {standard}),
        make("L23", 23, "apusamikkum diagonal", Family::kApusamikkum4, Quantity::kDiagonal, "1;20",
             {standard}),
        make("L24", 24, "apusamikkum transversal", Family::kApusamikkum4, Quantity::kTransversal,
             "0;33,20", {standard}),
        make("L25", 25, "apusamikkum of three vertices", Family::kApusamikkum3, Quantity::kArea,
             "0;15", {standard}),
    };
  }();
  return entries;
}

std::vector<TabletEntry> entries_for_line(int line) {
  std::vector<TabletEntry> out;
  for (const auto& e : builtin_entries()) {
    if (e.line == line) {
      out.push_back(e);
    }
  }
  return out;
}

const TabletEntry& entry_by_id(std::string_view id) {
  for (const auto& e : builtin_entries()) {
    if (e.id == id) {
      return e;
    }
  }
  throw std::out_of_range("no tablet entry " + std::string(id));
}

Sexagesimal display_sexagesimal(const Rational& q, int places) {
  if (is_regular(q)) {
    return Sexagesimal::from_rational(q, kMaxSexagesimalPlaces);
  }
  return Sexagesimal::from_rational(q, places);
}

VerificationReport verify_entry(const TabletEntry& entry, int precision) {
  if (entry.recipe.contexts.empty()) {
    throw DomainError("entry " + entry.id + " has no recomputation context");
  }
  const Rational scribe = entry.scribe_value.to_rational();
  const PolyarcSpec spec = PolyarcSpec::named(entry.figure, entry.recipe.size);

  VerificationReport report;
  report.entry_id = entry.id;
  report.line = entry.line;
  report.scribe_value = entry.scribe_value;
  report.expected_match = entry.expected_match;

  std::optional<std::size_t> best;
  for (const auto& context : entry.recipe.contexts) {
    const Rational value = std::get<Rational>(pick(compute_metrics(spec, ContextMode{context}), entry.quantity));
    report.candidates.push_back(
        {context.name(), value, display_sexagesimal(value), value == scribe});
    const auto& latest = report.candidates.back();
    if (!best || (latest.value - scribe).abs() < (report.candidates[*best].value - scribe).abs()) {
      best = report.candidates.size() - 1;
    }
  }
  const auto& chosen = report.candidates[*best];
  report.recomputed_rational = chosen.value;
  report.recomputed_sexagesimal = chosen.sexagesimal;
  report.matches_scribe = std::any_of(report.candidates.begin(), report.candidates.end(),
                                      [](const CandidateResult& c) { return c.matches; });

  report.exact_value = to_exact(pick(compute_metrics(spec, ExactMode{precision}), entry.quantity), precision);
  report.scribe_error_percent = percent_error(report.exact_value, scribe);
  return report;
}

std::vector<VerificationReport> verify_all(int precision) {
  std::vector<VerificationReport> reports;
  for (const auto& e : builtin_entries()) {
    reports.push_back(verify_entry(e, precision));
  }
  return reports;
}

std::vector<TableCell> reproduce_table1() {
  std::vector<TableCell> cells;
  std::size_t printed = 0;
  for (const auto& seed : kSeeds) {
    const auto trace = heron_sequence(21, seed, 3);
    for (int step = 1; step <= 3; ++step) {
      TableCell cell;
      cell.seed = seed;
      cell.step = step;
      cell.value = trace.iterates[static_cast<std::size_t>(step)];
      cell.sexagesimal = Sexagesimal::from_rational(cell.value, kDisplayPlaces);
      cell.printed = Sexagesimal::parse(kPrintedTable1[printed++]);
      cell.matches_printed = cell.sexagesimal == cell.printed;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<TableCell> reproduce_table2() {
  std::vector<TableCell> cells = reproduce_table1();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& cell = cells[i];
    cell.value = hexagon_with(Rational(7, 4), cell.value);
    cell.sexagesimal = Sexagesimal::from_rational(cell.value, kDisplayPlaces);
    cell.printed = Sexagesimal::parse(kPrintedTable2[i]);
    cell.matches_printed = cell.sexagesimal == cell.printed;
  }
  return cells;
}

Table3Candidates default_table3_candidates() {
  Table3Candidates c;
  for (int tenths = 10; tenths <= 22; ++tenths) {
    append_unique(c.sqrt3, heron_sequence(3, Rational(tenths, 10), 1).iterates.back());
  }
  for (int tenths = 40; tenths <= 50; ++tenths) {
    append_unique(c.sqrt21, heron_sequence(21, Rational(tenths, 10), 1).iterates.back());
  }
  for (const auto& cell : reproduce_table1()) {
    append_unique(c.sqrt21, cell.value);
  }
  append_unique(c.sqrt3, Rational(7, 4));
  append_unique(c.sqrt3, Rational(26, 15));
  return c;
}

std::vector<Table3Row> table3_search(const std::vector<Rational>& sqrt3_candidates,
                                     const std::vector<Rational>& sqrt21_candidates) {
  if (sqrt3_candidates.empty() || sqrt21_candidates.empty()) {
    throw DomainError("table 3 search needs at least one candidate for each root");
  }
  const Rational target = line6_scribe_value();
  std::vector<Table3Row> rows;
  rows.reserve(sqrt3_candidates.size() * sqrt21_candidates.size());
  for (const auto& s3 : sqrt3_candidates) {
    for (const auto& s21 : sqrt21_candidates) {
      const Rational value = hexagon_with(s3, s21);
      rows.push_back({s3, s21, value, (value - target).abs()});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Table3Row& a, const Table3Row& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.sqrt3.denominator() != b.sqrt3.denominator()) return a.sqrt3.denominator() < b.sqrt3.denominator();
    if (a.sqrt21.denominator() != b.sqrt21.denominator()) return a.sqrt21.denominator() < b.sqrt21.denominator();
    if (a.sqrt3 != b.sqrt3) return a.sqrt3 < b.sqrt3;
    return a.sqrt21 < b.sqrt21;
  });
  return rows;
}

Rational line6_scribe_value() { return Sexagesimal::parse("0;16,26,46,40").to_rational(); }

ScribeErrorAnalysis scribe_error_l6(int precision) {
  const FigureMetrics exact = convex6_metrics(1, ExactMode{precision});
  ScribeErrorAnalysis a{line6_scribe_value(),
                        std::get<ExactReal>(exact.area),
                        std::get<ExactReal>(exact.at(Measure::kHexagonArea)),
                        ExactReal(0L, precision),
                        ExactReal(0L, precision)};
  a.printed_formula_percent = percent_error(a.exact_total_area, a.scribe_value);
  a.hexagon_denominator_percent = percent_error(a.exact_hexagon_area, a.scribe_value);
  const auto rounds_to_claim = [&](const ExactReal& p) {
    return std::abs(p.to_double() - a.claimed_percent) < 0.05;
  };
  a.claim_reproduced = rounds_to_claim(a.printed_formula_percent) ||
                       rounds_to_claim(a.hexagon_denominator_percent);
  return a;
}

}  // namespace polyarc::tablet
