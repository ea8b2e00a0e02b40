#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hilbcm/errors.hpp"
#include "hilbcm/rational.hpp"

using namespace hilbcm;

TEST_CASE("parsing integers and fractions") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("  7/14 ") == Rational(1, 2));
    CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("canonical form") {
    const Rational q = parse_rational("4/6");
    CHECK(q.get_num() == 2);
    CHECK(q.get_den() == 3);
    const Rational neg = parse_rational("1/-2");
    CHECK(neg.get_den() > 0);
}

TEST_CASE("bad input rejected") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("printing round-trips") {
    for (const char* s : {"0", "1", "-1", "3/2", "-22/7", "123456789123456789/2"}) {
        CHECK(rational_to_string(parse_rational(s)) == s);
    }
}

TEST_CASE("double conversion") {
    CHECK(rational_to_double(Rational(1, 2)) == doctest::Approx(0.5));
    CHECK(rational_to_double(Rational(-7, 4)) == doctest::Approx(-1.75));
}
