#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyarc/rational.hpp"

namespace polyarc {

enum class Rounding { kTruncate, kRound };

inline constexpr int kMaxSexagesimalPlaces = 64;

/// A base-60 numeral in tablet notation: "1,20;30,15" has integer digits
/// {1, 20} and fraction digits {30, 15}. Values are kept canonical: no leading
/// zero integer digits (a lone 0 is kept), no trailing zero fraction digits,
/// and zero is never negative.
class Sexagesimal {
 public:
  Sexagesimal() = default;
  /// Throws DomainError when a digit falls outside 0..59.
  Sexagesimal(bool negative, std::vector<int> integer_digits, std::vector<int> fraction_digits);

  /// Parses `[-]d(,d)*(;d(,d)*)?` with decimal digits 0..59. Throws ParseError
  /// carrying the offending character position.
  static Sexagesimal parse(std::string_view text);

  /// Expansion of `q` to at most `places` fractional digits. Truncation keeps
  /// the largest representable magnitude <= |q|; rounding is half-up on the
  /// magnitude. Sign applies to the whole numeral.
  static Sexagesimal from_rational(const Rational& q, int places, Rounding mode = Rounding::kTruncate);

  bool negative() const { return negative_; }
  const std::vector<int>& integer_digits() const { return integer_; }
  const std::vector<int>& fraction_digits() const { return fraction_; }

  Rational to_rational() const;
  std::string to_string() const;

  friend bool operator==(const Sexagesimal&, const Sexagesimal&) = default;

 private:
  void canonicalize();

  bool negative_ = false;
  std::vector<int> integer_{0};
  std::vector<int> fraction_;
};

inline Rational sexagesimal_to_rational(const Sexagesimal& s) { return s.to_rational(); }

inline Sexagesimal rational_to_sexagesimal(const Rational& q, int places,
                                           Rounding mode = Rounding::kTruncate) {
  return Sexagesimal::from_rational(q, places, mode);
}

inline Sexagesimal parse_sexagesimal(std::string_view text) { return Sexagesimal::parse(text); }

}  // namespace polyarc
