#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nctrace/kernel.hpp"
#include "nctrace/laurent.hpp"
#include "nctrace/partition.hpp"
#include "nctrace/word.hpp"

namespace nctrace {

struct CumulantReport {
    TraceWord word;
    LaurentPoly value;
    /// Limit at n -> infinity; nullopt would mean divergent, which the
    /// monomial shape n^{2-s} rules out.
    std::optional<Rational> limit;
    long contributing_partitions = 0;
};

/// {"word": [...], "laurent": {...}, "limit": "1/1", "contributing": 5};
/// a divergent limit would encode as null.
std::string to_json(const CumulantReport& r);

struct EngineOptions {
    /// Largest total power enumerated; NC(14) is ~2.7M partitions.
    int enumeration_limit = 14;
    /// 1 = serial; k > 1 = k threads; 0 = hardware concurrency.
    int workers = 1;
};

/// Joint cumulant of traces of powers of any R-cyclic family whose cyclic
/// cumulants are index-independent (caller's responsibility):
///   sum over connecting pi in NC(p) of n^{p+2-s-|pi|} * kappa_pi.
/// family_labels holds the s per-factor kernel labels.
LaurentPoly trace_cumulant_general(const BlockKernel& kernel, const Composition& c,
                                   std::span<const int> family_labels,
                                   const EngineOptions& opts = {});

/// Specialization to the generating-matrix family:
///   n^{2-s} (-1)^{p/2} sum over connecting adapted pi of
///   (-1)^{|pi|} prod_V C_{#V/2-1}.
/// Coded independently of trace_cumulant_general; the two paths are
/// cross-checked in tests.
CumulantReport trace_cumulant_brown(const TraceWord& w, const EngineOptions& opts = {});

/// Limit of trace_cumulant_brown at n -> infinity (always finite).
Rational asymptotic_distribution(const TraceWord& w, const EngineOptions& opts = {});

/// Values for all 2^s star patterns of one composition, computed in a single
/// enumeration pass. Pattern index bit j set = factor j starred.
struct PatternValues {
    std::vector<LaurentPoly> values;
    std::vector<long> contributing;
};
PatternValues trace_cumulant_brown_all_patterns(const Composition& c,
                                                const EngineOptions& opts = {});
/// Same batching for the general path: the kernel is evaluated per pattern
/// on labels in {0, 1}.
PatternValues trace_cumulant_general_all_patterns(const BlockKernel& kernel,
                                                  const Composition& c,
                                                  const EngineOptions& opts = {});

/// All TraceWords with total power in [1, max_total_power] and at most
/// max_factors factors, in a fixed order (total power ascending, composition
/// lexicographic, star pattern ascending).
void for_each_trace_word(int max_total_power, int max_factors,
                         const std::function<void(const TraceWord&)>& fn);

struct CircularityViolation {
    TraceWord word;
    LaurentPoly value;
    std::string reason;
};

/// Certificate that the trace family matches the cumulant pattern of a
/// *-free circular family of mean 0 and covariance 1.
struct CircularityReport {
    int max_total_power = 0;
    int max_factors = 0;
    long words_checked = 0;
    std::vector<CircularityViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every word with s <= max_s and total power <= max_p:
/// s = 1 -> exactly zero; s = 2 -> exactly the constant 1 iff powers equal
/// and stars differ, else exactly zero; s >= 3 -> zero limit.
CircularityReport circularity_report(int max_p, int max_s, const EngineOptions& opts = {});

std::string to_json(const CircularityReport& r);

}  // namespace nctrace
