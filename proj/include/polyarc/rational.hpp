#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyarc {

using BigInt = mpz_class;

/// Exact signed fraction with arbitrary-precision numerator and denominator.
///
/// Always stored reduced: the denominator is positive and coprime to the
/// numerator, so zero is uniquely 0/1 and equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor): integers are rationals
  Rational(long long numerator, long long denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigInt& integer);

  /// Accepts "n", "-n" or "n/d" in decimal. Throws ParseError.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(int exponent) const;

  /// Largest integer <= this.
  BigInt floor() const;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Always "n/d", also for integers ("3/1").
  std::string to_fraction_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_{0};
};

/// True iff the reduced denominator has no prime factors other than 2, 3, 5,
/// i.e. the value has a finite sexagesimal expansion.
bool is_regular(const Rational& q);

}  // namespace polyarc
