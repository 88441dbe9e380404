#include "nctrace/oracle.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "nctrace/connect.hpp"
#include "nctrace/enumerate.hpp"
#include "nctrace/errors.hpp"

namespace nctrace {

EntryWord::EntryWord(std::vector<EntryLabel> entries, long n)
    : entries_(std::move(entries)), n_(n) {
    if (entries_.empty()) throw std::invalid_argument("EntryWord: at least one entry required");
    if (n_ < 1) throw std::invalid_argument("EntryWord: dimension must be >= 1");
    for (const EntryLabel& e : entries_)
        if (e.row < 1 || e.row > n_ || e.col < 1 || e.col > n_)
            throw std::invalid_argument("EntryWord: indices must lie in [1, n]");
}

Rational cumulants_from_moments(int s,
                                const std::function<Rational(unsigned long)>& moments) {
    if (s < 1) throw std::invalid_argument("cumulants_from_moments: s must be >= 1");
    if (s > 16) throw budget_exceeded("cumulants_from_moments: s exceeds 16");

    std::unordered_map<unsigned long, Rational> memo;
    std::function<Rational(unsigned long)> cum = [&](unsigned long mask) -> Rational {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::vector<int> pos;  // 0-based argument indices selected by mask
        for (int j = 0; j < s; ++j)
            if ((mask >> j) & 1ul) pos.push_back(j);
        const int k = static_cast<int>(pos.size());
        Rational value = moments(mask);
        if (k > 1) {
            for_each_noncrossing(k, [&](const PartitionView& view) {
                if (view.block_count == 1) return;  // exclude 1_k
                Rational prod(1);
                for (int b = 0; b < view.block_count && !prod.is_zero(); ++b) {
                    unsigned long sub = 0;
                    for (int v : view.block(b))
                        sub |= 1ul << pos[static_cast<size_t>(v - 1)];
                    prod *= cum(sub);
                }
                value -= prod;
            });
        }
        memo.emplace(mask, value);
        return value;
    };
    return cum((1ul << s) - 1);
}

Oracle::Oracle(OracleBudget budget) : budget_(budget) {}

Rational Oracle::entry_moment(const EntryWord& w) {
    if (w.length() > budget_.max_entry_length)
        throw budget_exceeded("oracle: entry word longer than the configured budget");
    // h depends on the index tuple only through its equality pattern, so the
    // memo key relabels indices by first occurrence.
    std::vector<long> key;
    key.reserve(1 + 3 * w.entries().size());
    key.push_back(w.dimension());
    std::vector<int> relabel(static_cast<size_t>(w.dimension()) + 1, 0);
    int next_label = 0;
    auto canon = [&](int idx) {
        if (relabel[static_cast<size_t>(idx)] == 0) relabel[static_cast<size_t>(idx)] = ++next_label;
        return relabel[static_cast<size_t>(idx)];
    };
    for (const EntryLabel& e : w.entries()) {
        key.push_back(family_index(e.star));
        key.push_back(canon(e.row));
        key.push_back(canon(e.col));
    }
    if (auto it = entry_memo_.find(key); it != entry_memo_.end()) return it->second;
    Rational value = entry_moment_uncached(w);
    entry_memo_.emplace(std::move(key), value);
    return value;
}

Rational Oracle::entry_moment_uncached(const EntryWord& w) {
    const int r = w.length();
    Rational total(0);
    std::vector<EntryLabel> block_entries;
    block_entries.reserve(static_cast<size_t>(r));
    for_each_noncrossing(r, [&](const PartitionView& view) {
        Rational prod(1);
        for (int b = 0; b < view.block_count; ++b) {
            block_entries.clear();
            for (int v : view.block(b))
                block_entries.push_back(w.entries()[static_cast<size_t>(v - 1)]);
            const Rational kv = brown_entry_cumulant(block_entries).eval(w.dimension());
            if (kv.is_zero()) return;
            prod *= kv;
        }
        total += prod;
    });
    return total;
}

Rational Oracle::trace_moment(const TraceWord& w, long n_value) {
    const int p = w.total_power();
    if (p > budget_.max_total_power)
        throw budget_exceeded("oracle: trace word exceeds the total-power budget");
    if (n_value < 1) throw std::invalid_argument("oracle: n must be >= 1");
    if (n_value > budget_.max_n)
        throw budget_exceeded("oracle: n exceeds the configured budget");

    std::vector<long> key;
    key.reserve(1 + 2 * w.factors().size());
    key.push_back(n_value);
    for (const TraceFactor& f : w.factors()) {
        key.push_back(f.power);
        key.push_back(family_index(f.star));
    }
    if (auto it = trace_memo_.find(key); it != trace_memo_.end()) return it->second;

    // Factor f spans positions [start_f, start_f + p_f); its trace closes the
    // index cycle within the factor.
    std::vector<int> start_of(static_cast<size_t>(p) + 1, 0);
    std::vector<int> end_of(static_cast<size_t>(p) + 1, 0);
    std::vector<Star> star_of(static_cast<size_t>(p) + 1, Star::plain);
    int pos = 1;
    for (const TraceFactor& f : w.factors()) {
        for (int t = 0; t < f.power; ++t) {
            start_of[static_cast<size_t>(pos + t)] = pos;
            end_of[static_cast<size_t>(pos + t)] = pos + f.power - 1;
            star_of[static_cast<size_t>(pos + t)] = f.star;
        }
        pos += f.power;
    }

    Rational total(0);
    std::vector<long> idx(static_cast<size_t>(p) + 1, 1);
    std::vector<EntryLabel> entries(static_cast<size_t>(p));
    for (;;) {
        for (int v = 1; v <= p; ++v) {
            const int next = v < end_of[static_cast<size_t>(v)] ? v + 1
                                                                : start_of[static_cast<size_t>(v)];
            entries[static_cast<size_t>(v - 1)] = {star_of[static_cast<size_t>(v)],
                                                   static_cast<int>(idx[static_cast<size_t>(v)]),
                                                   static_cast<int>(idx[static_cast<size_t>(next)])};
        }
        total += entry_moment(EntryWord(entries, n_value));

        int d = p;
        while (d >= 1 && idx[static_cast<size_t>(d)] == n_value) {
            idx[static_cast<size_t>(d)] = 1;
            --d;
        }
        if (d < 1) break;
        ++idx[static_cast<size_t>(d)];
    }
    trace_memo_.emplace(std::move(key), total);
    return total;
}

Rational Oracle::trace_cumulant(const TraceWord& w, long n_value) {
    const int s = w.factor_count();
    auto moment = [&](unsigned long mask) {
        std::vector<TraceFactor> selected;
        for (int j = 0; j < s; ++j)
            if ((mask >> j) & 1ul) selected.push_back(w.factors()[static_cast<size_t>(j)]);
        return trace_moment(TraceWord(std::move(selected)), n_value);
    };
    return cumulants_from_moments(s, moment);
}

const std::vector<NcPartition>& Oracle::connecting_partitions(const Composition& c) {
    auto it = connecting_memo_.find(c.parts());
    if (it != connecting_memo_.end()) return it->second;
    std::vector<NcPartition> pis;
    for (NcPartition& pi : enumerate_nc(c.total()))
        if (is_connecting_by_join(pi, c)) pis.push_back(std::move(pi));
    return connecting_memo_.emplace(c.parts(), std::move(pis)).first->second;
}

Rational Oracle::grouped_cumulant_via_moments(const Composition& c, const EntryWord& w) {
    if (c.total() != w.length())
        throw std::invalid_argument("oracle: composition does not match the entry word");
    if (w.length() > budget_.max_entry_length)
        throw budget_exceeded("oracle: entry word longer than the configured budget");
    const int s = c.part_count();
    const std::vector<int>& starts = c.part_starts();
    auto moment = [&](unsigned long mask) {
        std::vector<EntryLabel> selected;
        for (int j = 0; j < s; ++j) {
            if (!((mask >> j) & 1ul)) continue;
            const int a = starts[static_cast<size_t>(j)];
            for (int t = 0; t < c.parts()[static_cast<size_t>(j)]; ++t)
                selected.push_back(w.entries()[static_cast<size_t>(a - 1 + t)]);
        }
        return entry_moment(EntryWord(std::move(selected), w.dimension()));
    };
    return cumulants_from_moments(s, moment);
}

Rational Oracle::connecting_filtered_sum(const Composition& c, const EntryWord& w) {
    if (c.total() != w.length())
        throw std::invalid_argument("oracle: composition does not match the entry word");
    if (w.length() > budget_.max_entry_length)
        throw budget_exceeded("oracle: entry word longer than the configured budget");
    Rational total(0);
    std::vector<EntryLabel> block_entries;
    for (const NcPartition& pi : connecting_partitions(c)) {
        Rational prod(1);
        for (const auto& block : pi.blocks()) {
            block_entries.clear();
            for (int v : block)
                block_entries.push_back(w.entries()[static_cast<size_t>(v - 1)]);
            const Rational kv = brown_entry_cumulant(block_entries).eval(w.dimension());
            if (kv.is_zero()) {
                prod = Rational(0);
                break;
            }
            prod *= kv;
        }
        total += prod;
    }
    return total;
}

bool Oracle::check_product_formula(const Composition& c, const EntryWord& w) {
    return grouped_cumulant_via_moments(c, w) == connecting_filtered_sum(c, w);
}

}  // namespace nctrace
