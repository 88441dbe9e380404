#include "nctrace/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace nctrace {

CompareReport compare_engine_oracle(int max_total_p, std::span<const long> n_values,
                                    const EngineOptions& engine_opts,
                                    const OracleBudget& budget) {
    if (max_total_p < 1)
        throw std::invalid_argument("compare_engine_oracle: max_total_p must be >= 1");
    for (long n : n_values)
        if (n < 1) throw std::invalid_argument("compare_engine_oracle: n values must be >= 1");

    Oracle oracle(budget);
    CompareReport report;
    for_each_trace_word(max_total_p, 0, [&](const TraceWord& w) {
        const CumulantReport engine = trace_cumulant_brown(w, engine_opts);
        for (long n : n_values) {
            const Rational engine_at_n = engine.value.eval(n);
            const Rational oracle_at_n = oracle.trace_cumulant(w, n);
            ++report.checked;
            if (engine_at_n != oracle_at_n)
                report.mismatches.push_back({w, n, engine_at_n, oracle_at_n});
        }
    });
    return report;
}

std::string to_json(const CompareReport& r) {
    std::ostringstream os;
    os << "{\"checked\":" << r.checked << ",\"mismatches\":[";
    for (size_t i = 0; i < r.mismatches.size(); ++i) {
        if (i > 0) os << ",";
        const OracleMismatch& m = r.mismatches[i];
        os << "{\"word\":" << to_json(m.word) << ",\"n\":" << m.n << ",\"engine\":\""
           << m.engine_value.str() << "\",\"oracle\":\"" << m.oracle_value.str() << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace nctrace
