#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscsum/errors.hpp"
#include "oscsum/rational.hpp"

using namespace oscsum;

TEST_CASE("construction and canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3, 6).str() == "-1/2");
}

TEST_CASE("arithmetic") {
  Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK_THROWS_AS(a / Rational(0), DenominatorVanishes);
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(3, 2) > Rational(1));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-5, 7).sign() == -1);
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(13, 84).to_double() == doctest::Approx(0.154761904761904762));
}

TEST_CASE("exact large arithmetic") {
  // would overflow int64 midway if not exact
  Rational x(1);
  for (int i = 2; i <= 40; ++i) x = x * Rational(i, i - 1);
  CHECK(x == Rational(40));
  Rational s(0);
  for (int i = 1; i <= 20; ++i) s = s + Rational(1, i);
  CHECK(s == Rational(55835135, 15519504));
}
