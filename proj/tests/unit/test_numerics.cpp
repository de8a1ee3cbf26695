#include <doctest.h>

#include "../support/helpers.hpp"
#include "polyarc/errors.hpp"
#include "polyarc/exact_real.hpp"
#include "polyarc/rational.hpp"
#include "polyarc/sexagesimal.hpp"
#include "polyarc/value.hpp"

using namespace polyarc;
using testing::q;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -8) == Rational(-3, 4));
  CHECK(Rational(6, -8).to_string() == "-3/4");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(4, 2).to_fraction_string() == "2/1");
  CHECK(Rational(0, 5).sign() == 0);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parse") {
  CHECK(q("14720113/3212192") == Rational(14720113, 3212192));
  CHECK(q("-7") == Rational(-7));
  CHECK(q("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(q(""), ParseError);
  CHECK_THROWS_AS(q("1/0"), ParseError);
  try {
    (void)q("12/x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("rational arithmetic is exact with big integers") {
  const Rational x = q("73180801/15969360");
  CHECK(x * x - 21 == Rational(1, 1) / (Rational(15969360) * Rational(15969360)));
  CHECK(q("2/3").pow(-2) == q("9/4"));
  CHECK(q("-7/2").floor() == -4);
  CHECK(q("-7/2").abs() == q("7/2"));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(q("1/3") < q("1/2"));
  const Rational big = Rational(BigInt("123456789012345678901234567890"), BigInt(7));
  CHECK((big * 7).to_string() == "123456789012345678901234567890");
}

TEST_CASE("regular numbers") {
  CHECK(is_regular(q("2/9")));
  CHECK(is_regular(q("17/18")));
  CHECK(is_regular(q("8881/32400")));
  CHECK_FALSE(is_regular(q("1/7")));
  CHECK_FALSE(is_regular(q("46661993/170339840")));
}

TEST_CASE("exact real carries its precision") {
  const ExactReal pi30 = ExactReal::pi(30);
  CHECK(pi30.to_decimal() == "3.14159265358979323846264338328");
  const ExactReal pi60 = ExactReal::pi(60);
  CHECK((pi30 + pi60).digits() == 60);
  CHECK(sqrt(ExactReal(2, 40)).to_decimal(20) == "1.4142135623730950488");
  CHECK(ExactReal(Rational(1, 3), 10).to_fixed(4) == "0.3333");
  CHECK_THROWS_AS(sqrt(ExactReal(-1)), DomainError);
  CHECK_THROWS_AS(ExactReal(1) / ExactReal(0), DomainError);
  CHECK_THROWS_AS(asin(ExactReal(2)), DomainError);
  CHECK_THROWS_AS(ExactReal::parse("0.5x", 30), ParseError);
  CHECK(ExactReal::parse("0.25", 30).to_rational() == q("1/4"));
}

TEST_CASE("sexagesimal parse and print") {
  const auto s = Sexagesimal::parse("1,20;30,15");
  CHECK(s.integer_digits() == std::vector<int>{1, 20});
  CHECK(s.fraction_digits() == std::vector<int>{30, 15});
  CHECK(s.to_string() == "1,20;30,15");
  CHECK(Sexagesimal::parse("0;30,0").to_string() == "0;30");
  CHECK(Sexagesimal::parse("-0;0").to_string() == "0");
  CHECK(Sexagesimal::parse("-0;30").to_rational() == q("-1/2"));
  CHECK(Sexagesimal::parse("1;20").to_rational() == q("4/3"));
}

TEST_CASE("sexagesimal parse errors carry positions") {
  const auto position = [](const char* text) {
    try {
      (void)Sexagesimal::parse(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("") == 0);
  CHECK(position("0;13,60") == 5);
  CHECK(position("0;13,") == 5);
  CHECK(position("0;1a") == 3);
  CHECK(position("0;;1") == 2);
}

TEST_CASE("sexagesimal from rational") {
  CHECK(Sexagesimal::from_rational(q("2/9"), 5).to_string() == "0;13,20");
  CHECK(Sexagesimal::from_rational(q("63/256"), 4).to_string() == "0;14,45,56,15");
  CHECK(Sexagesimal::from_rational(q("1/7"), 3).to_string() == "0;8,34,17");
  CHECK(Sexagesimal::from_rational(q("1/7"), 3, Rounding::kRound).to_string() == "0;8,34,17");
  CHECK(Sexagesimal::from_rational(q("1/7"), 2, Rounding::kRound).to_string() == "0;8,34");
  CHECK(Sexagesimal::from_rational(q("59/120"), 1, Rounding::kRound).to_string() == "0;30");
  CHECK(Sexagesimal::from_rational(q("-1/7"), 2).to_string() == "-0;8,34");
  CHECK(Sexagesimal::from_rational(q("3601/60"), 0).to_string() == "1,0");
  CHECK_THROWS_AS(Sexagesimal::from_rational(q("1/3"), -1), DomainError);
  CHECK_THROWS_AS(Sexagesimal::from_rational(q("1/3"), kMaxSexagesimalPlaces + 1), DomainError);
  CHECK_THROWS_AS(Sexagesimal(false, {60}, {}), DomainError);
}

TEST_CASE("values") {
  CHECK(exact_sqrt(q("49/4")) == q("7/2"));
  CHECK_FALSE(exact_sqrt(q("21")).has_value());
  CHECK_THROWS_AS(exact_sqrt(q("-4")), DomainError);
  CHECK(to_string(Value{q("2/9")}) == "2/9");
  CHECK(to_double(Value{q("1/4")}) == 0.25);
}
