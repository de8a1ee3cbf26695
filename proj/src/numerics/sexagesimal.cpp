#include "polyarc/sexagesimal.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "polyarc/errors.hpp"

namespace polyarc {

namespace {

constexpr int kBase = 60;

void check_digits(const std::vector<int>& digits) {
  for (int d : digits) {
    if (d < 0 || d >= kBase) {
      throw DomainError("sexagesimal digit " + std::to_string(d) + " outside 0..59");
    }
  }
}

BigInt pow60(int exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), kBase, static_cast<unsigned long>(exponent));
  return r;
}

// Parses one comma-separated digit group starting at `pos`; stops at ';' or end.
std::vector<int> parse_group(std::string_view text, std::size_t& pos) {
  std::vector<int> digits;
  while (true) {
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value >= kBase) {
        // Keep scanning so the reported position is the start of the digit.
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        throw ParseError("digit exceeds 59", start);
      }
      ++pos;
    }
    if (pos == start) {
      throw ParseError(pos == text.size() ? "expected digit, found end of input"
                                          : std::string("expected digit, found '") + text[pos] + "'",
                       pos);
    }
    digits.push_back(value);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    return digits;
  }
}

}  // namespace

Sexagesimal::Sexagesimal(bool negative, std::vector<int> integer_digits,
                         std::vector<int> fraction_digits)
    : negative_(negative), integer_(std::move(integer_digits)), fraction_(std::move(fraction_digits)) {
  check_digits(integer_);
  check_digits(fraction_);
  canonicalize();
}

void Sexagesimal::canonicalize() {
  auto first = std::find_if(integer_.begin(), integer_.end(), [](int d) { return d != 0; });
  integer_.erase(integer_.begin(), first);
  if (integer_.empty()) {
    integer_.push_back(0);
  }
  while (!fraction_.empty() && fraction_.back() == 0) {
    fraction_.pop_back();
  }
  if (integer_ == std::vector<int>{0} && fraction_.empty()) {
    negative_ = false;
  }
}

Sexagesimal Sexagesimal::parse(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty sexagesimal numeral", 0);
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::vector<int> integer = parse_group(text, pos);
  std::vector<int> fraction;
  if (pos < text.size() && text[pos] == ';') {
    ++pos;
    fraction = parse_group(text, pos);
  }
  if (pos != text.size()) {
    throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
  }
  return Sexagesimal(negative, std::move(integer), std::move(fraction));
}

Sexagesimal Sexagesimal::from_rational(const Rational& q, int places, Rounding mode) {
  if (places < 0 || places > kMaxSexagesimalPlaces) {
    throw DomainError("sexagesimal places must lie in 0..64");
  }
  const BigInt scale = pow60(places);
  const Rational scaled = q.abs() * Rational(scale);
  BigInt units = mode == Rounding::kTruncate ? scaled.floor() : (scaled + Rational(1, 2)).floor();

  std::vector<int> fraction(static_cast<std::size_t>(places), 0);
  for (int i = places - 1; i >= 0; --i) {
    fraction[static_cast<std::size_t>(i)] =
        static_cast<int>(mpz_fdiv_q_ui(units.get_mpz_t(), units.get_mpz_t(), kBase));
  }
  std::vector<int> integer;
  while (units != 0) {
    integer.push_back(static_cast<int>(mpz_fdiv_q_ui(units.get_mpz_t(), units.get_mpz_t(), kBase)));
  }
  std::reverse(integer.begin(), integer.end());
  return Sexagesimal(q.sign() < 0, std::move(integer), std::move(fraction));
}

Rational Sexagesimal::to_rational() const {
  BigInt whole = 0;
  for (int d : integer_) {
    whole = whole * kBase + d;
  }
  BigInt frac = 0;
  for (int d : fraction_) {
    frac = frac * kBase + d;
  }
  Rational value = Rational(whole) + Rational(frac, pow60(static_cast<int>(fraction_.size())));
  return negative_ ? -value : value;
}

std::string Sexagesimal::to_string() const {
  std::string out = negative_ ? "-" : "";
  for (std::size_t i = 0; i < integer_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(integer_[i]);
  }
  if (!fraction_.empty()) {
    out += ';';
    for (std::size_t i = 0; i < fraction_.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(fraction_[i]);
    }
  }
  return out;
}

}  // namespace polyarc
