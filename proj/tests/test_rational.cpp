#include <dpg/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace dpg;

TEST_CASE("make_rational normalizes sign and lowest terms") {
    CHECK(make_rational(2, 4) == Rational(1, 2));
    CHECK(make_rational(-2, 4) == Rational(-1, 2));
    CHECK(make_rational(2, -4) == Rational(-1, 2));
    CHECK(make_rational(-2, -4) == Rational(1, 2));
    CHECK(make_rational(0, -7) == Rational(0));
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("+5") == Rational(5));
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("2/-3") == Rational(-2, 3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("123456789012345678901234567890/2") ==
          Rational(BigInt("123456789012345678901234567890"), 2));
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "/", "1/", "/2", "1/2/3", "1.5", "a", "-", "+", "1/0", "2 /3", "0x1"})
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("rational_to_string round-trips through parse") {
    for (const char* s : {"0", "7", "-7", "1/2", "-22/7", "355/113"}) {
        CHECK(rational_to_string(parse_rational(s)) == s);
    }
    CHECK(rational_to_string(make_rational(4, 6)) == "2/3");
    CHECK(rational_to_string(Rational(10, 5)) == "2");
}

TEST_CASE("pow_int computes exact powers") {
    CHECK(pow_int(3, 0) == 1);
    CHECK(pow_int(3, 4) == 81);
    CHECK(pow_int(2, 64) == BigInt("18446744073709551616"));
    CHECK(pow_int(-2, 3) == -8);
}

TEST_CASE("sgn on rationals and doubles") {
    CHECK(sgn(Rational(-1, 3)) == -1);
    CHECK(sgn(Rational(0)) == 0);
    CHECK(sgn(Rational(9)) == 1);
    CHECK(sgn(-0.5) == -1);
    CHECK(sgn(0.0) == 0);
}
