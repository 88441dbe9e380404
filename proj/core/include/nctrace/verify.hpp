#pragma once

#include <span>
#include <string>
#include <vector>

#include "nctrace/oracle.hpp"
#include "nctrace/trace_engine.hpp"

namespace nctrace {

struct OracleMismatch {
    TraceWord word;
    long n;
    Rational engine_value;
    Rational oracle_value;
};

struct CompareReport {
    long checked = 0;
    std::vector<OracleMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Evaluates the symbolic engine value of every trace word with total power
/// up to max_total_p at each n and compares against the moment-inversion
/// oracle. Mismatches are report content, not errors.
CompareReport compare_engine_oracle(int max_total_p, std::span<const long> n_values,
                                    const EngineOptions& engine_opts = {},
                                    const OracleBudget& budget = {});

/// {"checked": 42, "mismatches": []}
std::string to_json(const CompareReport& r);

}  // namespace nctrace
