#pragma once

#include <map>
#include <optional>
#include <string>

#include "nctrace/rational.hpp"

namespace nctrace {

/// Laurent polynomial in a single indeterminate n: a finitely supported map
/// from integer exponents (negative allowed) to exact rational coefficients.
/// Canonical form holds at all times: no stored coefficient is zero, so two
/// values are equal iff their term maps are identical.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly constant(Rational c) { return monomial(0, std::move(c)); }
    static LaurentPoly monomial(int exponent, Rational coeff);
    /// The indeterminate n itself.
    static LaurentPoly indeterminate() { return monomial(1, Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int exponent) const;
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;
    /// True iff the polynomial is c*n^e for the given exponent (and nonzero).
    bool is_monomial_with_exponent(int exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact evaluation at a concrete dimension n >= 1. Rejects n < 1
    /// (negative exponents are undefined at 0).
    Rational eval(long n) const;

    /// The n -> infinity limit: the exponent-0 coefficient when no positive
    /// exponent is present, std::nullopt (divergent) otherwise.
    std::optional<Rational> limit_at_infinity() const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    std::map<int, Rational> terms_;
};

/// JSON encoding as an object mapping exponent strings to rational strings,
/// keys ascending by exponent: {"-3": "-1/1", "0": "2/1"}. Zero is "{}".
std::string to_json(const LaurentPoly& p);

}  // namespace nctrace
