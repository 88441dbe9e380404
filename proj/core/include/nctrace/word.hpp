#pragma once

#include <string>
#include <vector>

#include "nctrace/kernel.hpp"
#include "nctrace/partition.hpp"

namespace nctrace {

/// One factor chi(u^power)^star of a trace word.
struct TraceFactor {
    int power;
    Star star;

    friend bool operator==(const TraceFactor&, const TraceFactor&) = default;
};

/// A word chi(u^{p_1})^{e_1} ... chi(u^{p_s})^{e_s}, s >= 1, p_i >= 1.
class TraceWord {
public:
    explicit TraceWord(std::vector<TraceFactor> factors);

    const std::vector<TraceFactor>& factors() const { return factors_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    int total_power() const;
    Composition composition() const;
    /// Per-position star labels (e_1 repeated p_1, ..., e_s repeated p_s).
    std::vector<Star> expanded_labels() const;
    /// Per-factor family indices for the generic kernel interface.
    std::vector<int> family_labels() const;
    /// Factors rotated left by k.
    TraceWord rotated(int k) const;

    friend bool operator==(const TraceWord&, const TraceWord&) = default;

private:
    std::vector<TraceFactor> factors_;
};

/// "u^2" / "u^3*"; power 1 prints as "u" / "u*".
std::string format_factor(const TraceFactor& f);
/// JSON list of factor strings: ["u^2","u^3*"].
std::string to_json(const TraceWord& w);

}  // namespace nctrace
