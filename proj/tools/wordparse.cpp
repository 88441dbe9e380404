#include "wordparse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace nctrace {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

TraceFactor parse_factor(const std::string& raw) {
    const std::string tok = trim(raw);
    if (tok.empty()) throw std::invalid_argument("word: empty factor");
    size_t pos = 0;
    if (tok[pos] != 'u') throw std::invalid_argument("word: factor must start with 'u': " + tok);
    ++pos;
    long power = 1;
    if (pos < tok.size() && tok[pos] == '^') {
        ++pos;
        size_t digits = 0;
        long value = 0;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
            value = value * 10 + (tok[pos] - '0');
            if (value > 1'000'000) throw std::invalid_argument("word: power out of range: " + tok);
            ++pos;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument("word: '^' needs a power: " + tok);
        power = value;
    }
    Star star = Star::plain;
    if (pos < tok.size() && tok[pos] == '*') {
        star = Star::star;
        ++pos;
    }
    if (pos != tok.size()) throw std::invalid_argument("word: trailing characters: " + tok);
    if (power < 1) throw std::invalid_argument("word: power must be >= 1: " + tok);
    return TraceFactor{static_cast<int>(power), star};
}

}  // namespace

TraceWord parse_word(const std::string& text) {
    std::vector<TraceFactor> factors;
    size_t start = 0;
    while (true) {
        const size_t comma = text.find(',', start);
        const std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        factors.push_back(parse_factor(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return TraceWord(std::move(factors));
}

}  // namespace nctrace
