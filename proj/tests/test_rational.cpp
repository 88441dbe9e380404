#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "nctrace/rational.hpp"
#include "support.hpp"

using namespace nctrace;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(7).str() == "7/1");
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing round trip") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational::from_string("0/1").is_zero());
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);

    testsupport::Rng rng(0x5eed0001);
    for (int i = 0; i < 200; ++i) {
        Rational r(rng.integer(-50, 50), rng.integer(1, 50));
        CHECK(Rational::from_string(r.str()) == r);
    }
}

TEST_CASE("field axioms on random triples") {
    testsupport::Rng rng(0x5eed0002);
    for (int i = 0; i < 300; ++i) {
        Rational a(rng.integer(-30, 30), rng.integer(1, 20));
        Rational b(rng.integer(-30, 30), rng.integer(1, 20));
        Rational c(rng.integer(-30, 30), rng.integer(1, 20));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("integer power with negative exponents") {
    CHECK(integer_power(2, 3) == Rational(8));
    CHECK(integer_power(2, -3) == Rational(1, 8));
    CHECK(integer_power(5, 0) == Rational(1));
    CHECK(integer_power(1, -7) == Rational(1));
    CHECK_THROWS_AS(integer_power(0, 2), std::invalid_argument);
}

TEST_CASE("ostream formatting matches str") {
    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == Rational(-7, 3).str());
}
