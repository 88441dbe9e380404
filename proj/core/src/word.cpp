#include "nctrace/word.hpp"

#include <stdexcept>
#include <utility>

namespace nctrace {

TraceWord::TraceWord(std::vector<TraceFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("TraceWord: at least one factor required");
    for (const TraceFactor& f : factors_)
        if (f.power < 1) throw std::invalid_argument("TraceWord: powers must be >= 1");
}

int TraceWord::total_power() const {
    int p = 0;
    for (const TraceFactor& f : factors_) p += f.power;
    return p;
}

Composition TraceWord::composition() const {
    std::vector<int> parts;
    parts.reserve(factors_.size());
    for (const TraceFactor& f : factors_) parts.push_back(f.power);
    return Composition(std::move(parts));
}

std::vector<Star> TraceWord::expanded_labels() const {
    std::vector<Star> labels;
    labels.reserve(static_cast<size_t>(total_power()));
    for (const TraceFactor& f : factors_)
        labels.insert(labels.end(), static_cast<size_t>(f.power), f.star);
    return labels;
}

std::vector<int> TraceWord::family_labels() const {
    std::vector<int> labels;
    labels.reserve(factors_.size());
    for (const TraceFactor& f : factors_) labels.push_back(family_index(f.star));
    return labels;
}

TraceWord TraceWord::rotated(int k) const {
    const int s = factor_count();
    const int shift = (k % s + s) % s;
    std::vector<TraceFactor> rot;
    rot.reserve(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) rot.push_back(factors_[static_cast<size_t>((j + shift) % s)]);
    return TraceWord(std::move(rot));
}

std::string format_factor(const TraceFactor& f) {
    std::string out = "u";
    if (f.power != 1) out += "^" + std::to_string(f.power);
    if (f.star == Star::star) out += "*";
    return out;
}

std::string to_json(const TraceWord& w) {
    std::string out = "[";
    for (size_t j = 0; j < w.factors().size(); ++j) {
        if (j > 0) out += ",";
        out += "\"" + format_factor(w.factors()[j]) + "\"";
    }
    return out + "]";
}

}  // namespace nctrace
