#include "polyarc/value.hpp"

#include "polyarc/errors.hpp"

namespace polyarc {

double to_double(const Value& v) {
  return std::visit([](const auto& x) { return x.to_double(); }, v);
}

std::string to_string(const Value& v) {
  if (const auto* q = std::get_if<Rational>(&v)) {
    return q->to_string();
  }
  return std::get<ExactReal>(v).to_decimal();
}

ExactReal to_exact(const Value& v, int digits) {
  if (const auto* q = std::get_if<Rational>(&v)) {
    return ExactReal(*q, digits);
  }
  return std::get<ExactReal>(v);
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) {
    throw DomainError("square root of a negative rational");
  }
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInt rn;
  BigInt rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace polyarc
