#include <doctest.h>

#include <stdexcept>

#include "nctrace/laurent.hpp"
#include "support.hpp"

using namespace nctrace;

namespace {

LaurentPoly random_poly(testsupport::Rng& rng) {
    LaurentPoly p;
    const int terms = static_cast<int>(rng.integer(0, 4));
    for (int i = 0; i < terms; ++i)
        p += LaurentPoly::monomial(static_cast<int>(rng.integer(-5, 5)),
                                   Rational(rng.integer(-9, 9), rng.integer(1, 4)));
    return p;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
    CHECK(LaurentPoly::monomial(3, Rational(0)).is_zero());
    LaurentPoly p = LaurentPoly::monomial(-2, Rational(5));
    p += LaurentPoly::monomial(-2, Rational(-5));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(p == LaurentPoly());
}

TEST_CASE("term accessors") {
    LaurentPoly p = LaurentPoly::monomial(-3, Rational(-1)) + LaurentPoly::constant(Rational(2));
    CHECK(p.coeff(-3) == Rational(-1));
    CHECK(p.coeff(0) == Rational(2));
    CHECK(p.coeff(7) == Rational(0));
    CHECK(p.min_exponent() == -3);
    CHECK(p.max_exponent() == 0);
    CHECK_FALSE(p.is_monomial_with_exponent(-3));
    CHECK(LaurentPoly::monomial(-3, Rational(4)).is_monomial_with_exponent(-3));
    CHECK_FALSE(LaurentPoly().min_exponent().has_value());
}

TEST_CASE("ring axioms on random polynomials") {
    testsupport::Rng rng(0x5eed0003);
    const LaurentPoly one = LaurentPoly::constant(Rational(1));
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        LaurentPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        CHECK(a * one == a);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    testsupport::Rng rng(0x5eed0004);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        const long n = rng.integer(1, 6);
        CHECK((a + b).eval(n) == a.eval(n) + b.eval(n));
        CHECK((a * b).eval(n) == a.eval(n) * b.eval(n));
    }
    LaurentPoly p = LaurentPoly::monomial(-2, Rational(3)) + LaurentPoly::monomial(1, Rational(1));
    CHECK(p.eval(2) == Rational(3, 4) + Rational(2));
    CHECK_THROWS_AS(p.eval(0), std::invalid_argument);
    CHECK_THROWS_AS(p.eval(-1), std::invalid_argument);
}

TEST_CASE("limit at infinity") {
    CHECK(LaurentPoly().limit_at_infinity() == Rational(0));
    CHECK(LaurentPoly::constant(Rational(5, 2)).limit_at_infinity() == Rational(5, 2));
    CHECK(LaurentPoly::monomial(-1, Rational(3)).limit_at_infinity() == Rational(0));
    LaurentPoly mixed =
        LaurentPoly::monomial(-2, Rational(1)) + LaurentPoly::constant(Rational(7));
    CHECK(mixed.limit_at_infinity() == Rational(7));
    CHECK_FALSE(LaurentPoly::indeterminate().limit_at_infinity().has_value());
}

TEST_CASE("json encoding is ordered and canonical") {
    CHECK(to_json(LaurentPoly()) == "{}");
    LaurentPoly p = LaurentPoly::constant(Rational(2)) + LaurentPoly::monomial(-3, Rational(-1));
    CHECK(to_json(p) == "{\"-3\":\"-1/1\",\"0\":\"2/1\"}");
}
