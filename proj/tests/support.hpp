#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nctrace/partition.hpp"

namespace nctrace::testsupport {

// All set partitions of [p] via restricted growth strings: rgs[0] = 0,
// rgs[i] <= 1 + max(rgs[0..i-1]). Independent of the streaming enumerator.
inline void rgs_rec(int p, int i, int mx, std::vector<int>& rgs,
                    std::vector<SetPartition>& out) {
    if (i == p) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(mx) + 1);
        for (int v = 0; v < p; ++v) blocks[static_cast<size_t>(rgs[static_cast<size_t>(v)])].push_back(v + 1);
        out.emplace_back(p, std::move(blocks));
        return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
        rgs[static_cast<size_t>(i)] = b;
        rgs_rec(p, i + 1, b > mx ? b : mx, rgs, out);
    }
}

inline std::vector<SetPartition> all_set_partitions(int p) {
    std::vector<SetPartition> out;
    if (p == 0) return out;
    std::vector<int> rgs(static_cast<size_t>(p), 0);
    rgs_rec(p, 1, 0, rgs, out);
    return out;
}

inline std::vector<NcPartition> all_noncrossing_brute(int p) {
    std::vector<NcPartition> out;
    for (const SetPartition& sp : all_set_partitions(p))
        if (is_noncrossing(sp)) out.push_back(NcPartition::unchecked(sp));
    return out;
}

// Interleaves pi on {1,3,...,2p-1} with sigma on {2,4,...,2p}.
inline SetPartition interleave(const NcPartition& pi, const NcPartition& sigma) {
    const int p = pi.ground_size();
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : pi.blocks()) {
        std::vector<int> mapped;
        for (int v : blk) mapped.push_back(2 * v - 1);
        blocks.push_back(std::move(mapped));
    }
    for (const auto& blk : sigma.blocks()) {
        std::vector<int> mapped;
        for (int v : blk) mapped.push_back(2 * v);
        blocks.push_back(std::move(mapped));
    }
    return SetPartition(2 * p, std::move(blocks));
}

// Reference Kreweras complement: the coarsest sigma whose interleaving with
// pi stays noncrossing. Checks that every other candidate refines it.
inline NcPartition kreweras_brute(const NcPartition& pi) {
    const int p = pi.ground_size();
    std::optional<NcPartition> best;
    std::vector<NcPartition> qualifying;
    for (const NcPartition& sigma : all_noncrossing_brute(p)) {
        if (!is_noncrossing(interleave(pi, sigma))) continue;
        qualifying.push_back(sigma);
        if (!best || sigma.block_count() < best->block_count()) best = sigma;
    }
    if (!best) throw std::logic_error("kreweras_brute: no qualifying complement");
    for (const NcPartition& sigma : qualifying) {
        for (const auto& blk : sigma.blocks()) {
            const int rep = best->block_index_of(blk.front());
            for (int v : blk)
                if (best->block_index_of(v) != rep)
                    throw std::logic_error("kreweras_brute: maximal complement not unique");
        }
    }
    return *best;
}

// Deterministic xorshift64*; fixed seeds keep the property tests replayable.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }

    // Uniform in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }

    long integer(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
};

inline std::vector<int> random_composition(Rng& rng, int total) {
    std::vector<int> parts;
    int rest = total;
    while (rest > 0) {
        int part = static_cast<int>(rng.integer(1, rest));
        parts.push_back(part);
        rest -= part;
    }
    return parts;
}

}  // namespace nctrace::testsupport
