#include "nctrace/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nctrace {

LaurentPoly LaurentPoly::monomial(int exponent, Rational coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(exponent, std::move(coeff));
    return p;
}

Rational LaurentPoly::coeff(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

bool LaurentPoly::is_monomial_with_exponent(int exponent) const {
    return terms_.size() == 1 && terms_.begin()->first == exponent;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            const int e = ea + eb;
            Rational prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(e, std::move(prod));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Rational LaurentPoly::eval(long n) const {
    if (n < 1) throw std::invalid_argument("LaurentPoly::eval: n must be >= 1");
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * integer_power(n, e);
    return acc;
}

std::optional<Rational> LaurentPoly::limit_at_infinity() const {
    const auto top = max_exponent();
    if (top && *top > 0) return std::nullopt;
    return coeff(0);
}

std::string to_json(const LaurentPoly& p) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << ',';
        first = false;
        os << '"' << e << "\":\"" << c.str() << '"';
    }
    os << '}';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str();
        if (it->first != 0) os << "*n^" << it->first;
    }
    return os;
}

}  // namespace nctrace
