#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nctrace/kernel.hpp"
#include "nctrace/partition.hpp"
#include "nctrace/rational.hpp"
#include "nctrace/word.hpp"

namespace nctrace {

/// A product of concrete matrix entries at a fixed dimension n.
class EntryWord {
public:
    EntryWord(std::vector<EntryLabel> entries, long n);

    const std::vector<EntryLabel>& entries() const { return entries_; }
    long dimension() const { return n_; }
    int length() const { return static_cast<int>(entries_.size()); }

private:
    std::vector<EntryLabel> entries_;
    long n_;
};

struct OracleBudget {
    /// Largest total power accepted for trace words (the index summation is
    /// n^p).
    int max_total_power = 6;
    long max_n = 3;
    int max_entry_length = 12;
};

/// Inverts the moment-cumulant relation on an s-tuple: the joint cumulant of
/// all s arguments, given the moment functional on subsequences (mask bit j
/// selects argument j+1). Uses the recursion
///   kappa(S) = m(S) - sum over pi in NC(|S|), pi != 1, of prod kappa(S|_V).
Rational cumulants_from_moments(int s,
                                const std::function<Rational(unsigned long)>& moments);

/// Brute-force fixed-n evaluator, independent of the trace engine: its only
/// inputs are the entry cumulant values and the moment-cumulant formula.
/// Single-threaded; the memo tables are not synchronized.
class Oracle {
public:
    explicit Oracle(OracleBudget budget = {});

    /// h(entry product) = sum over pi in NC(r) of the product over blocks of
    /// the entry cumulant, evaluated at the word's dimension. Memoized up to
    /// index relabeling.
    Rational entry_moment(const EntryWord& w);

    /// Moment of the trace word at dimension n: each factor chi(u^p)^e
    /// expands as the sum over p-index cycles of entries of u^e, so the
    /// whole word is an n^p-term sum of entry moments.
    Rational trace_moment(const TraceWord& w, long n_value);

    /// Joint cumulant of the trace factors at dimension n, obtained purely
    /// by moment inversion.
    Rational trace_cumulant(const TraceWord& w, long n_value);

    /// Left side: cumulant of the grouped entry products via moment
    /// inversion.
    Rational grouped_cumulant_via_moments(const Composition& c, const EntryWord& w);
    /// Right side: sum of kappa_pi over pi with join(pi, gamma_c) = 1_p.
    Rational connecting_filtered_sum(const Composition& c, const EntryWord& w);
    /// Both sides agree exactly.
    bool check_product_formula(const Composition& c, const EntryWord& w);

    const OracleBudget& budget() const { return budget_; }

private:
    Rational entry_moment_uncached(const EntryWord& w);
    const std::vector<NcPartition>& connecting_partitions(const Composition& c);

    OracleBudget budget_;
    std::map<std::vector<long>, Rational> entry_memo_;
    std::map<std::vector<long>, Rational> trace_memo_;
    std::map<std::vector<int>, std::vector<NcPartition>> connecting_memo_;
};

}  // namespace nctrace
