#include "polyarc/exact_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "polyarc/errors.hpp"

namespace polyarc {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;
constexpr mpfr_prec_t kGuardBits = 32;

// Result precision of a binary operation: the larger operand precision.
void widen(mpfr_t target, int& target_digits, const ExactReal& other, mpfr_prec_t other_bits) {
  if (other.digits() > target_digits) {
    mpfr_prec_round(target, other_bits, kRound);
    target_digits = other.digits();
  }
}

struct MpfrString {
  char* text;
  ~MpfrString() { mpfr_free_str(text); }
};

}  // namespace

mpfr_prec_t ExactReal::bits_for(int digits) {
  if (digits < 1) {
    throw DomainError("precision must be at least one decimal digit");
  }
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + kGuardBits;
}

ExactReal::ExactReal(long value, int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for(digits));
  mpfr_set_si(value_, value, kRound);
}

ExactReal::ExactReal(const Rational& value, int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for(digits));
  mpfr_set_q(value_, value.raw().get_mpq_t(), kRound);
}

ExactReal::ExactReal(const ExactReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

ExactReal::ExactReal(ExactReal&& other) noexcept : ExactReal(0L, 1) {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
}

ExactReal& ExactReal::operator=(const ExactReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
    digits_ = other.digits_;
  }
  return *this;
}

ExactReal& ExactReal::operator=(ExactReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

ExactReal::~ExactReal() { mpfr_clear(value_); }

ExactReal ExactReal::pi(int digits) {
  ExactReal r(0L, digits);
  mpfr_const_pi(r.value_, kRound);
  return r;
}

ExactReal ExactReal::parse(const std::string& text, int digits) {
  ExactReal r(0L, digits);
  char* end = nullptr;
  mpfr_strtofr(r.value_, text.c_str(), &end, 10, kRound);
  const auto consumed = static_cast<std::size_t>(end - text.c_str());
  if (text.empty() || consumed != text.size()) {
    throw ParseError("malformed decimal", consumed);
  }
  return r;
}

int ExactReal::sign() const { return mpfr_sgn(value_); }

double ExactReal::to_double() const { return mpfr_get_d(value_, kRound); }

Rational ExactReal::to_rational() const {
  if (mpfr_zero_p(value_) != 0) {
    return Rational(0);
  }
  BigInt mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  BigInt power = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return Rational(mantissa);
  }
  mpz_mul_2exp(power.get_mpz_t(), power.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return Rational(mantissa, power);
}

std::string ExactReal::to_decimal(int significant) const {
  if (significant <= 0) {
    significant = digits_;
  }
  if (mpfr_zero_p(value_) != 0) {
    return "0";
  }
  mpfr_exp_t exponent = 0;
  MpfrString s{mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(significant), value_, kRound)};
  std::string digits(s.text);
  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out;
  if (exponent <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + digits;
  } else if (static_cast<std::size_t>(exponent) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exponent) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exponent)) + "." +
          digits.substr(static_cast<std::size_t>(exponent));
  }
  return sign + out;
}

std::string ExactReal::to_fixed(int places) const {
  char* text = nullptr;
  if (mpfr_asprintf(&text, "%.*RNf", places, value_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

ExactReal ExactReal::operator-() const {
  ExactReal r(*this);
  mpfr_neg(r.value_, r.value_, kRound);
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& rhs) {
  widen(value_, digits_, rhs, mpfr_get_prec(rhs.value_));
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& rhs) {
  widen(value_, digits_, rhs, mpfr_get_prec(rhs.value_));
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& rhs) {
  widen(value_, digits_, rhs, mpfr_get_prec(rhs.value_));
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& rhs) {
  if (mpfr_zero_p(rhs.value_) != 0) {
    throw DomainError("division by zero");
  }
  widen(value_, digits_, rhs, mpfr_get_prec(rhs.value_));
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

std::partial_ordering operator<=>(const ExactReal& lhs, const ExactReal& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_) != 0) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

ExactReal sqrt(const ExactReal& x) {
  if (x.sign() < 0) {
    throw DomainError("square root of a negative number");
  }
  ExactReal r(x);
  mpfr_sqrt(r.value_, x.value_, kRound);
  return r;
}

ExactReal sin(const ExactReal& x) {
  ExactReal r(x);
  mpfr_sin(r.value_, x.value_, kRound);
  return r;
}

ExactReal cos(const ExactReal& x) {
  ExactReal r(x);
  mpfr_cos(r.value_, x.value_, kRound);
  return r;
}

ExactReal cot(const ExactReal& x) {
  ExactReal r(x);
  mpfr_cot(r.value_, x.value_, kRound);
  return r;
}

ExactReal asin(const ExactReal& x) {
  if (mpfr_cmpabs_ui(x.value_, 1) > 0) {
    throw DomainError("arcsine argument outside [-1, 1]");
  }
  ExactReal r(x);
  mpfr_asin(r.value_, x.value_, kRound);
  return r;
}

ExactReal abs(const ExactReal& x) {
  ExactReal r(x);
  mpfr_abs(r.value_, x.value_, kRound);
  return r;
}

}  // namespace polyarc
