#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyarc/babylon.hpp"
#include "polyarc/exact_real.hpp"
#include "polyarc/geometry.hpp"
#include "polyarc/rational.hpp"
#include "polyarc/sexagesimal.hpp"

namespace polyarc::tablet {

/// Sexagesimal places used when a recomputed value has no finite expansion
/// (the reference tables use five).
inline constexpr int kDisplayPlaces = 5;

enum class Quantity { kArea, kSquareArea, kLength, kWidth, kDiagonal, kTransversal };

std::string_view quantity_name(Quantity q);

/// How the scribe's number is recomputed: unit size and one or more
/// approximation contexts (several when the surrogate itself is uncertain).
struct Recipe {
  std::vector<ApproximationContext> contexts;
  Rational size = 1;
};

struct TabletEntry {
  std::string id;  // "L16"; line 5 has two readings, "L5-square" and "L5-total"
  int line = 0;
  std::string label;
  Family figure = Family::kBarleyField;
  Quantity quantity = Quantity::kArea;
  Sexagesimal scribe_value;
  Recipe recipe;
  bool expected_match = true;
};

/// The circular-figure constants of lines 5, 6 and 16-25.
const std::vector<TabletEntry>& builtin_entries();
/// Entries for one tablet line (two for line 5).
std::vector<TabletEntry> entries_for_line(int line);
const TabletEntry& entry_by_id(std::string_view id);

struct CandidateResult {
  std::string context;
  Rational value;
  Sexagesimal sexagesimal;
  bool matches = false;
};

struct VerificationReport {
  std::string entry_id;
  int line = 0;
  Sexagesimal scribe_value;
  Rational recomputed_rational;
  Sexagesimal recomputed_sexagesimal;
  bool matches_scribe = false;
  bool expected_match = true;
  ExactReal exact_value;
  ExactReal scribe_error_percent;
  std::vector<CandidateResult> candidates;
};

/// Finite expansion when the value is regular, otherwise `places` truncated digits.
Sexagesimal display_sexagesimal(const Rational& q, int places = kDisplayPlaces);

/// Recomputes the entry in context mode (exact comparison against the scribe
/// value) and in exact mode (true value and relative error in percent). With
/// several recipe contexts the closest candidate is reported as the
/// recomputed value.
VerificationReport verify_entry(const TabletEntry& entry, int precision = kDefaultPrecision);
std::vector<VerificationReport> verify_all(int precision = kDefaultPrecision);

struct TableCell {
  Rational seed;
  int step = 0;  // iterate index, 1..3
  Rational value;
  Sexagesimal sexagesimal;  // truncated to five places
  Sexagesimal printed;      // as printed in the reference table
  bool matches_printed = false;
};

/// Heron iterates for √21 from seeds 4, 5, 4;30, steps 1-3.
std::vector<TableCell> reproduce_table1();
/// (3√3/8)(5 − x) with √3 → 7/4 for every table-1 iterate x.
std::vector<TableCell> reproduce_table2();

struct Table3Row {
  Rational sqrt3;
  Rational sqrt21;
  Rational value;
  Rational distance;  // |value − scribe value of line 6|
};

struct Table3Candidates {
  std::vector<Rational> sqrt3;
  std::vector<Rational> sqrt21;
};

/// Reconstructed default grid: one Heron step from each of the seeds
/// 1.0, 1.1, ..., 2.2 (√3) and 4.0, 4.1, ..., 5.0 (√21), followed by the
/// table-1 iterates and the classical √3 surrogates 7/4 and 26/15.
Table3Candidates default_table3_candidates();

/// Every pair ranked by distance to the line-6 value, ties broken by the
/// smaller √3 denominator, then the smaller √21 denominator, then value.
std::vector<Table3Row> table3_search(const std::vector<Rational>& sqrt3_candidates,
                                     const std::vector<Rational>& sqrt21_candidates);

struct ScribeErrorAnalysis {
  Rational scribe_value;
  ExactReal exact_total_area;      // convex 6-arc, r = 1
  ExactReal exact_hexagon_area;    // inscribed hexagon, r = 1
  ExactReal printed_formula_percent;     // denominator: total area
  ExactReal hexagon_denominator_percent; // denominator: hexagon area
  double claimed_percent = 1.4;
  bool claim_reproduced = false;
};

ScribeErrorAnalysis scribe_error_l6(int precision = kDefaultPrecision);

/// Line 6's value 0;16,26,46,40.
Rational line6_scribe_value();

}  // namespace polyarc::tablet
