#include "nctrace/trace_engine.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "nctrace/connect.hpp"
#include "nctrace/enumerate.hpp"
#include "nctrace/errors.hpp"

namespace nctrace {

std::string to_json(const CumulantReport& r) {
    std::ostringstream os;
    os << "{\"word\":" << to_json(r.word) << ",\"laurent\":" << to_json(r.value) << ",\"limit\":";
    if (r.limit)
        os << '"' << r.limit->str() << '"';
    else
        os << "null";
    os << ",\"contributing\":" << r.contributing_partitions << "}";
    return os.str();
}

namespace {

// Per-composition data shared read-only by all workers.
struct CompositionContext {
    int p;
    int s;
    std::vector<int> factor_of;  // 1..p -> 0-based factor index
    std::vector<int> marked;
    std::vector<signed char> is_marked;
    std::vector<Integer> catalan_table;  // C_0 .. C_{p/2}

    explicit CompositionContext(const Composition& c)
        : p(c.total()),
          s(c.part_count()),
          factor_of(static_cast<size_t>(c.total()) + 1, -1),
          marked(marked_points(c)),
          is_marked(static_cast<size_t>(c.total()) + 1, 0) {
        int pos = 1;
        for (int j = 0; j < s; ++j)
            for (int t = 0; t < c.parts()[static_cast<size_t>(j)]; ++t)
                factor_of[static_cast<size_t>(pos++)] = j;
        for (int m : marked) is_marked[static_cast<size_t>(m)] = 1;
        catalan_table.reserve(static_cast<size_t>(p) / 2 + 1);
        for (int k = 0; k <= p / 2; ++k) catalan_table.push_back(catalan(k));
    }
};

int resolve_workers(const EngineOptions& opts) {
    int w = opts.workers;
    if (w == 0) w = static_cast<int>(std::thread::hardware_concurrency());
    return w < 1 ? 1 : w;
}

// Reduction over NC(p). Workers own disjoint slices (split by the block of
// element 1) and accumulate into worker-local Acc values; exact arithmetic
// makes the merged result independent of the schedule. Acc may carry scratch
// buffers; merge must combine only the accumulated sums.
template <typename Acc, typename Visit, typename Merge>
Acc nc_reduce(int p, const EngineOptions& opts, const Acc& zero, const Visit& visit,
              const Merge& merge) {
    if (p > opts.enumeration_limit)
        throw budget_exceeded("trace engine: total power " + std::to_string(p) +
                              " exceeds the enumeration limit of " +
                              std::to_string(opts.enumeration_limit));
    const int workers = resolve_workers(opts);
    if (workers == 1 || p < 6) {
        Acc acc = zero;
        for_each_noncrossing(
            p, [&](const PartitionView& v) { visit(acc, v); }, opts.enumeration_limit);
        return acc;
    }
    const unsigned long mask_count = 1ul << (p - 1);
    std::atomic<unsigned long> next{0};
    std::vector<Acc> local(static_cast<size_t>(workers), zero);
    auto work = [&](int t) {
        Acc& acc = local[static_cast<size_t>(t)];
        std::vector<int> first_block;
        first_block.reserve(static_cast<size_t>(p));
        auto sink = [&](const PartitionView& v) { visit(acc, v); };
        for (;;) {
            const unsigned long m = next.fetch_add(1, std::memory_order_relaxed);
            if (m >= mask_count) break;
            first_block.assign(1, 1);
            for (int v = 2; v <= p; ++v)
                if ((m >> (v - 2)) & 1ul) first_block.push_back(v);
            for_each_noncrossing_with_first_block(p, first_block, sink, opts.enumeration_limit);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(work, t);
    work(0);
    for (std::thread& th : pool) th.join();
    Acc out = zero;
    for (Acc& l : local) merge(out, l);
    return out;
}

// (-1)^{|pi|} * prod_V C_{#V/2-1}; caller guarantees even blocks.
Integer adapted_weight(const PartitionView& view, const std::vector<Integer>& catalan_table) {
    Integer w = 1;
    for (int b = 0; b < view.block_count; ++b)
        w *= catalan_table[view.block(b).size() / 2 - 1];
    if (view.block_count % 2 != 0) w = -w;
    return w;
}

LaurentPoly assemble_brown_value(int p, int s, Integer sum) {
    if ((p / 2) % 2 != 0) sum = -sum;  // (-1)^{p/2}
    return LaurentPoly::monomial(2 - s, Rational(std::move(sum)));
}

// Union-find with parity over the s factors; per-partition scratch for the
// batched adapted-pattern search.
struct FactorColoring {
    std::vector<int> parent;
    std::vector<int> rank_;
    std::vector<int> parity;  // relative to parent
    std::vector<int> slot;    // root -> component index, -1 otherwise

    void reset(int s) {
        parent.assign(static_cast<size_t>(s), 0);
        for (int j = 0; j < s; ++j) parent[static_cast<size_t>(j)] = j;
        rank_.assign(static_cast<size_t>(s), 0);
        parity.assign(static_cast<size_t>(s), 0);
    }

    std::pair<int, int> find(int j) const {
        int q = 0;
        while (parent[static_cast<size_t>(j)] != j) {
            q ^= parity[static_cast<size_t>(j)];
            j = parent[static_cast<size_t>(j)];
        }
        return {j, q};
    }

    // Adds the constraint bit(a) xor bit(b) = rel; false on contradiction.
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        if (rank_[static_cast<size_t>(ra)] > rank_[static_cast<size_t>(rb)]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[static_cast<size_t>(ra)] = rb;
        parity[static_cast<size_t>(ra)] = pa ^ pb ^ rel;
        if (rank_[static_cast<size_t>(ra)] == rank_[static_cast<size_t>(rb)])
            ++rank_[static_cast<size_t>(rb)];
        return true;
    }
};

}  // namespace

LaurentPoly trace_cumulant_general(const BlockKernel& kernel, const Composition& c,
                                   std::span<const int> family_labels,
                                   const EngineOptions& opts) {
    if (c.part_count() < 1)
        throw std::invalid_argument("trace_cumulant_general: empty composition");
    if (family_labels.size() != static_cast<size_t>(c.part_count()))
        throw std::invalid_argument("trace_cumulant_general: one label per part required");
    const CompositionContext ctx(c);
    std::vector<int> expanded(static_cast<size_t>(ctx.p));
    for (int v = 1; v <= ctx.p; ++v)
        expanded[static_cast<size_t>(v - 1)] =
            family_labels[static_cast<size_t>(ctx.factor_of[static_cast<size_t>(v)])];

    struct Acc {
        LaurentPoly sum;
        std::vector<int> block_labels;
    };
    auto visit = [&](Acc& acc, const PartitionView& view) {
        if (!is_connecting(view, ctx.is_marked, ctx.marked)) return;
        LaurentPoly product = LaurentPoly::constant(Rational(1));
        for (int b = 0; b < view.block_count; ++b) {
            acc.block_labels.clear();
            for (int v : view.block(b))
                acc.block_labels.push_back(expanded[static_cast<size_t>(v - 1)]);
            const LaurentPoly value = kernel.block_value(acc.block_labels);
            if (value.is_zero()) return;
            product *= value;
        }
        acc.sum += LaurentPoly::monomial(ctx.p + 2 - ctx.s - view.block_count, Rational(1)) *
                   product;
    };
    auto merge = [](Acc& out, const Acc& in) { out.sum += in.sum; };
    return nc_reduce(ctx.p, opts, Acc{}, visit, merge).sum;
}

CumulantReport trace_cumulant_brown(const TraceWord& w, const EngineOptions& opts) {
    const CompositionContext ctx(w.composition());
    if (ctx.p > opts.enumeration_limit)
        throw budget_exceeded("trace engine: total power " + std::to_string(ctx.p) +
                              " exceeds the enumeration limit of " +
                              std::to_string(opts.enumeration_limit));
    if (ctx.p % 2 != 0) {
        // Adapted partitions need even blocks, so odd total power is exactly 0.
        return {w, LaurentPoly(), Rational(0), 0};
    }
    const std::vector<Star> stars = w.expanded_labels();

    struct Acc {
        Integer sum{0};
        long count = 0;
    };
    auto visit = [&](Acc& acc, const PartitionView& view) {
        if (!is_connecting(view, ctx.is_marked, ctx.marked)) return;
        if (!is_adapted(view, stars)) return;
        acc.sum += adapted_weight(view, ctx.catalan_table);
        ++acc.count;
    };
    auto merge = [](Acc& out, const Acc& in) {
        out.sum += in.sum;
        out.count += in.count;
    };
    const Acc acc = nc_reduce(ctx.p, opts, Acc{}, visit, merge);
    LaurentPoly value = assemble_brown_value(ctx.p, ctx.s, acc.sum);
    std::optional<Rational> limit = value.limit_at_infinity();
    return {w, std::move(value), std::move(limit), acc.count};
}

Rational asymptotic_distribution(const TraceWord& w, const EngineOptions& opts) {
    const CumulantReport report = trace_cumulant_brown(w, opts);
    if (!report.limit) throw std::logic_error("asymptotic_distribution: divergent value");
    return *report.limit;
}

PatternValues trace_cumulant_brown_all_patterns(const Composition& c,
                                                const EngineOptions& opts) {
    if (c.part_count() < 1)
        throw std::invalid_argument("trace_cumulant_brown_all_patterns: empty composition");
    const CompositionContext ctx(c);
    if (ctx.p > opts.enumeration_limit)
        throw budget_exceeded("trace engine: total power " + std::to_string(ctx.p) +
                              " exceeds the enumeration limit of " +
                              std::to_string(opts.enumeration_limit));
    const size_t pattern_count = size_t{1} << ctx.s;
    PatternValues out;
    out.values.assign(pattern_count, LaurentPoly());
    out.contributing.assign(pattern_count, 0);
    if (ctx.p % 2 != 0) return out;

    struct Acc {
        std::vector<Integer> sums;
        std::vector<long> counts;
        FactorColoring coloring;
        std::vector<std::pair<int, int>> root_parity;
    };
    Acc zero;
    zero.sums.assign(pattern_count, Integer(0));
    zero.counts.assign(pattern_count, 0);
    zero.root_parity.assign(static_cast<size_t>(ctx.s), {0, 0});

    // A partition is adapted exactly for the star patterns solving the
    // two-coloring constraints "consecutive in-block positions carry
    // different letters" on the factor graph; the connecting filter makes
    // that graph connected, so solutions come in complementary pairs.
    auto visit = [&](Acc& acc, const PartitionView& view) {
        if (!is_connecting(view, ctx.is_marked, ctx.marked)) return;
        acc.coloring.reset(ctx.s);
        for (int b = 0; b < view.block_count; ++b) {
            const auto& block = view.block(b);
            if (block.size() % 2 != 0) return;
            for (size_t i = 0; i + 1 < block.size(); ++i) {
                const int fa = ctx.factor_of[static_cast<size_t>(block[i])];
                const int fb = ctx.factor_of[static_cast<size_t>(block[i + 1])];
                if (fa == fb) return;  // equal letters forced; no pattern fits
                if (!acc.coloring.unite(fa, fb, 1)) return;
            }
        }
        const Integer w = adapted_weight(view, ctx.catalan_table);
        acc.coloring.slot.assign(static_cast<size_t>(ctx.s), -1);
        int components = 0;
        for (int j = 0; j < ctx.s; ++j) {
            acc.root_parity[static_cast<size_t>(j)] = acc.coloring.find(j);
            int& comp = acc.coloring.slot[static_cast<size_t>(
                acc.root_parity[static_cast<size_t>(j)].first)];
            if (comp < 0) comp = components++;
        }
        for (unsigned long x = 0; x < (1ul << components); ++x) {
            unsigned long m = 0;
            for (int j = 0; j < ctx.s; ++j) {
                const auto [root, parity] = acc.root_parity[static_cast<size_t>(j)];
                const unsigned long bit =
                    static_cast<unsigned long>(parity) ^
                    ((x >> acc.coloring.slot[static_cast<size_t>(root)]) & 1ul);
                m |= bit << j;
            }
            acc.sums[m] += w;
            ++acc.counts[m];
        }
    };
    auto merge = [&](Acc& outa, const Acc& in) {
        for (size_t m = 0; m < pattern_count; ++m) {
            outa.sums[m] += in.sums[m];
            outa.counts[m] += in.counts[m];
        }
    };
    Acc acc = nc_reduce(ctx.p, opts, zero, visit, merge);
    for (size_t m = 0; m < pattern_count; ++m) {
        out.values[m] = assemble_brown_value(ctx.p, ctx.s, std::move(acc.sums[m]));
        out.contributing[m] = acc.counts[m];
    }
    return out;
}

PatternValues trace_cumulant_general_all_patterns(const BlockKernel& kernel,
                                                  const Composition& c,
                                                  const EngineOptions& opts) {
    if (c.part_count() < 1)
        throw std::invalid_argument("trace_cumulant_general_all_patterns: empty composition");
    const CompositionContext ctx(c);
    const size_t pattern_count = size_t{1} << ctx.s;

    struct Acc {
        std::vector<LaurentPoly> sums;
        std::vector<long> counts;
        std::vector<int> block_labels;
    };
    Acc zero;
    zero.sums.assign(pattern_count, LaurentPoly());
    zero.counts.assign(pattern_count, 0);

    auto visit = [&](Acc& acc, const PartitionView& view) {
        if (!is_connecting(view, ctx.is_marked, ctx.marked)) return;
        const LaurentPoly shift =
            LaurentPoly::monomial(ctx.p + 2 - ctx.s - view.block_count, Rational(1));
        for (unsigned long m = 0; m < pattern_count; ++m) {
            LaurentPoly product = LaurentPoly::constant(Rational(1));
            bool zero_block = false;
            for (int b = 0; b < view.block_count && !zero_block; ++b) {
                acc.block_labels.clear();
                for (int v : view.block(b))
                    acc.block_labels.push_back(static_cast<int>(
                        (m >> ctx.factor_of[static_cast<size_t>(v)]) & 1ul));
                const LaurentPoly value = kernel.block_value(acc.block_labels);
                if (value.is_zero())
                    zero_block = true;
                else
                    product *= value;
            }
            if (zero_block) continue;
            acc.sums[m] += shift * product;
            ++acc.counts[m];
        }
    };
    auto merge = [&](Acc& outa, const Acc& in) {
        for (size_t m = 0; m < pattern_count; ++m) {
            outa.sums[m] += in.sums[m];
            outa.counts[m] += in.counts[m];
        }
    };
    Acc acc = nc_reduce(ctx.p, opts, zero, visit, merge);
    PatternValues out;
    out.values = std::move(acc.sums);
    out.contributing = std::move(acc.counts);
    return out;
}

namespace {

void compositions_rec(int remaining, int max_parts, std::vector<int>& parts,
                      const std::function<void(const std::vector<int>&)>& fn) {
    if (remaining == 0) {
        if (!parts.empty()) fn(parts);
        return;
    }
    if (max_parts > 0 && static_cast<int>(parts.size()) == max_parts) return;
    for (int first = 1; first <= remaining; ++first) {
        parts.push_back(first);
        compositions_rec(remaining - first, max_parts, parts, fn);
        parts.pop_back();
    }
}

TraceWord word_from_pattern(const std::vector<int>& parts, unsigned long pattern) {
    std::vector<TraceFactor> factors;
    factors.reserve(parts.size());
    for (size_t j = 0; j < parts.size(); ++j)
        factors.push_back(
            {parts[j], ((pattern >> j) & 1ul) != 0 ? Star::star : Star::plain});
    return TraceWord(std::move(factors));
}

}  // namespace

void for_each_trace_word(int max_total_power, int max_factors,
                         const std::function<void(const TraceWord&)>& fn) {
    for (int p = 1; p <= max_total_power; ++p) {
        std::vector<int> parts;
        compositions_rec(p, max_factors, parts, [&](const std::vector<int>& c) {
            const size_t s = c.size();
            for (unsigned long m = 0; m < (1ul << s); ++m) fn(word_from_pattern(c, m));
        });
    }
}

CircularityReport circularity_report(int max_p, int max_s, const EngineOptions& opts) {
    if (max_p < 1 || max_s < 1)
        throw std::invalid_argument("circularity_report: bounds must be >= 1");
    if (max_p > opts.enumeration_limit)
        throw budget_exceeded("circularity_report: max_p exceeds the enumeration limit");
    CircularityReport report;
    report.max_total_power = max_p;
    report.max_factors = max_s;

    for (int p = 1; p <= max_p; ++p) {
        std::vector<int> parts;
        compositions_rec(p, max_s, parts, [&](const std::vector<int>& c) {
            const PatternValues batch = trace_cumulant_brown_all_patterns(Composition(c), opts);
            const size_t s = c.size();
            for (unsigned long m = 0; m < (1ul << s); ++m) {
                const TraceWord word = word_from_pattern(c, m);
                const LaurentPoly& value = batch.values[m];
                ++report.words_checked;
                if (s == 1) {
                    if (!value.is_zero())
                        report.violations.push_back({word, value, "first cumulant is not zero"});
                } else if (s == 2) {
                    const bool pair_match = c[0] == c[1] && ((m == 1ul) || (m == 2ul));
                    if (pair_match) {
                        if (value != LaurentPoly::constant(Rational(1)))
                            report.violations.push_back(
                                {word, value, "second cumulant is not the constant 1"});
                    } else if (!value.is_zero()) {
                        report.violations.push_back(
                            {word, value, "second cumulant is not zero"});
                    }
                } else {
                    const std::optional<Rational> lim = value.limit_at_infinity();
                    if (!lim || !lim->is_zero())
                        report.violations.push_back(
                            {word, value, "higher cumulant does not vanish in the limit"});
                }
            }
        });
    }
    return report;
}

std::string to_json(const CircularityReport& r) {
    std::ostringstream os;
    os << "{\"max_p\":" << r.max_total_power << ",\"max_s\":" << r.max_factors
       << ",\"words_checked\":" << r.words_checked << ",\"violations\":[";
    for (size_t i = 0; i < r.violations.size(); ++i) {
        if (i > 0) os << ",";
        const CircularityViolation& v = r.violations[i];
        os << "{\"word\":" << to_json(v.word) << ",\"value\":" << to_json(v.value)
           << ",\"reason\":\"" << v.reason << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace nctrace
