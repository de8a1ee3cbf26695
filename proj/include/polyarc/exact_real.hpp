#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "polyarc/rational.hpp"

namespace polyarc {

inline constexpr int kDefaultPrecision = 30;

/// High-precision real number carrying its own working precision, given in
/// significant decimal digits. Binary operations work at the larger of the two
/// operand precisions; there is no process-wide precision setting.
class ExactReal {
 public:
  explicit ExactReal(long value = 0, int digits = kDefaultPrecision);
  ExactReal(const Rational& value, int digits);
  ExactReal(const ExactReal& other);
  ExactReal(ExactReal&& other) noexcept;
  ExactReal& operator=(const ExactReal& other);
  ExactReal& operator=(ExactReal&& other) noexcept;
  ~ExactReal();

  static ExactReal pi(int digits);
  /// Parses a decimal literal such as "0.2741" or "-1e-3".
  static ExactReal parse(const std::string& text, int digits);

  int digits() const { return digits_; }
  int sign() const;

  double to_double() const;
  /// The exact binary fraction held by this value.
  Rational to_rational() const;
  /// Fixed-point decimal rendering rounded to `significant` significant digits
  /// (defaults to the working precision).
  std::string to_decimal(int significant = 0) const;
  /// Rounded to `places` digits after the decimal point.
  std::string to_fixed(int places) const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& rhs);
  ExactReal& operator-=(const ExactReal& rhs);
  ExactReal& operator*=(const ExactReal& rhs);
  ExactReal& operator/=(const ExactReal& rhs);

  friend ExactReal operator+(ExactReal lhs, const ExactReal& rhs) { return lhs += rhs; }
  friend ExactReal operator-(ExactReal lhs, const ExactReal& rhs) { return lhs -= rhs; }
  friend ExactReal operator*(ExactReal lhs, const ExactReal& rhs) { return lhs *= rhs; }
  friend ExactReal operator/(ExactReal lhs, const ExactReal& rhs) { return lhs /= rhs; }

  friend ExactReal operator+(const ExactReal& lhs, long rhs) { return lhs + lhs.lift(rhs); }
  friend ExactReal operator-(const ExactReal& lhs, long rhs) { return lhs - lhs.lift(rhs); }
  friend ExactReal operator*(const ExactReal& lhs, long rhs) { return lhs * lhs.lift(rhs); }
  friend ExactReal operator/(const ExactReal& lhs, long rhs) { return lhs / lhs.lift(rhs); }
  friend ExactReal operator+(long lhs, const ExactReal& rhs) { return rhs.lift(lhs) + rhs; }
  friend ExactReal operator-(long lhs, const ExactReal& rhs) { return rhs.lift(lhs) - rhs; }
  friend ExactReal operator*(long lhs, const ExactReal& rhs) { return rhs.lift(lhs) * rhs; }
  friend ExactReal operator/(long lhs, const ExactReal& rhs) { return rhs.lift(lhs) / rhs; }

  friend bool operator==(const ExactReal& lhs, const ExactReal& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const ExactReal& lhs, const ExactReal& rhs);

  friend ExactReal sqrt(const ExactReal& x);
  friend ExactReal sin(const ExactReal& x);
  friend ExactReal cos(const ExactReal& x);
  friend ExactReal cot(const ExactReal& x);
  friend ExactReal asin(const ExactReal& x);
  friend ExactReal abs(const ExactReal& x);

  mpfr_srcptr raw() const { return value_; }

 private:
  ExactReal lift(long value) const { return ExactReal(value, digits_); }
  static mpfr_prec_t bits_for(int digits);

  mpfr_t value_;
  int digits_;
};

}  // namespace polyarc
