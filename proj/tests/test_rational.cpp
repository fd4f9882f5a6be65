#include "doctest.h"

#include <stdexcept>

#include "mop/rational.hpp"

using mop::parse_rational;
using mop::Rational;

TEST_CASE("rationals print in lowest terms with a positive denominator") {
  CHECK(mop::to_string(Rational(6, 4)) == "3/2");
  CHECK(mop::to_string(Rational(-6, 4)) == "-3/2");
  CHECK(mop::to_string(Rational(mop::Integer(3), mop::Integer(-1))) == "-3");
  CHECK(mop::to_string(Rational(0, 5)) == "0");
}

TEST_CASE("parse_rational accepts integers and fractions with a sign") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+7") == 7);
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rational(mop::Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects floats, blanks and zero denominators") {
  for (const char* bad : {"", "-", "1.5", "1e3", "1/", "/2", "1/0", "1//2", " 1", "1 ", "0x1", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("to_string and parse_rational round-trip") {
  for (const Rational& r : {Rational(0), Rational(-5, 7), Rational(22, 7), Rational(1, 1000000)})
    CHECK(parse_rational(mop::to_string(r)) == r);
}

TEST_CASE("is_integer") {
  CHECK(mop::is_integer(Rational(4, 2)));
  CHECK_FALSE(mop::is_integer(Rational(3, 2)));
  CHECK(mop::is_integer(Rational(-8)));
}
