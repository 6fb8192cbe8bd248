#include "doctest.h"

#include "tg/errors.hpp"
#include "tg/rational.hpp"

using namespace tg;

TEST_SUITE("exactmath") {

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
    CHECK(make_rational(Integer(2), Integer(4)) == make_rational(Integer(1), Integer(2)));
    CHECK(make_rational(Integer(3), Integer(-6)) == make_rational(Integer(-1), Integer(2)));
    CHECK(make_rational(Integer(0), Integer(7)) == Rational(0));
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), ArgumentError);
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "1", "-1", "4/13", "-851/351", "576/2197"}) {
        Rational v = rational_from_string(s);
        CHECK(rational_to_string(v) == s);
    }
    CHECK(rational_from_string("2/4") == rational_from_string("1/2"));
    CHECK(rational_to_string(rational_from_string("-6912/28561")) == "-6912/28561");
    CHECK_THROWS_AS(rational_from_string(""), ArgumentError);
    CHECK_THROWS_AS(rational_from_string("1/"), ArgumentError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ArgumentError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ArgumentError);
    CHECK_THROWS_AS(rational_from_string("1.5"), ArgumentError);
}

TEST_CASE("valuation_p") {
    const Integer two(2), three(3), five(5);
    CHECK(valuation_p(Rational(12), two) == 2);
    CHECK(valuation_p(Rational(12), three) == 1);
    CHECK(valuation_p(rational_from_string("1/8"), two) == -3);
    CHECK(valuation_p(rational_from_string("-9/40"), two) == -3);
    CHECK(valuation_p(rational_from_string("-9/40"), three) == 2);
    CHECK(valuation_p(rational_from_string("-9/40"), five) == -1);
    CHECK(valuation_p(Rational(0), five) == kValInfinity);
    CHECK_THROWS_AS(valuation_p(Rational(1), Integer(4)), ArgumentError);
}

TEST_CASE("is_square on rationals") {
    CHECK(is_square(Rational(0)));
    CHECK(is_square(Rational(49)));
    CHECK(is_square(rational_from_string("4/9")));
    CHECK(is_square(rational_from_string("1/256")));
    CHECK_FALSE(is_square(Rational(-4)));
    CHECK_FALSE(is_square(Rational(8)));
    CHECK_FALSE(is_square(rational_from_string("2/9")));
    CHECK_FALSE(is_square(rational_from_string("4/7")));
}

TEST_CASE("primality and prime enumeration") {
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(97)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK_FALSE(is_prime(Integer(91)));  // 7 * 13
    CHECK(primes_up_to(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_up_to(1) == std::vector<long>{});
}

}  // TEST_SUITE
