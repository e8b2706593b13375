#include "acstk/rational.hpp"

#include <doctest.h>

using namespace acstk;

TEST_CASE("parsing canonicalises and rendering omits unit denominators") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational(" -5 ")) == "-5");
    CHECK(to_string(parse_rational("+8/2")) == "4");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("-2/6")) == "-1/3");
}

TEST_CASE("malformed rationals are rejected") {
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("4/-2"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("rational lists") {
    auto v = parse_rational_list("1,-1/2, 3");
    REQUIRE(v.size() == 3);
    CHECK(v[1] == Rational(-1, 2));
    CHECK(parse_rational_list("").empty());
    CHECK_THROWS_AS(parse_rational_list("1,,2"), Error);
}

TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(5), 0) == 1);
    CHECK(is_integer(Rational(4)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
}
