#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nctrace/errors.hpp"
#include "nctrace/partition.hpp"

namespace nctrace {

inline constexpr int kDefaultEnumerationLimit = 16;

/// Transient view of the noncrossing partition currently visited by the
/// enumerator. Valid only for the duration of the visitor call; block
/// members are ascending, block order is not canonical.
struct PartitionView {
    int ground_size = 0;
    int block_count = 0;
    const std::vector<std::vector<int>>* pool = nullptr;  // first block_count entries are live
    const int* block_of = nullptr;      // indexed 1..ground_size
    const int* pos_in_block = nullptr;  // position of v inside its block

    const std::vector<int>& block(int b) const { return (*pool)[static_cast<size_t>(b)]; }

    /// sigma_pi^{-1}(v): the cyclic predecessor of v inside its block.
    int block_predecessor(int v) const {
        const auto& blk = block(block_of[static_cast<size_t>(v)]);
        const int pos = pos_in_block[static_cast<size_t>(v)];
        return pos > 0 ? blk[static_cast<size_t>(pos - 1)] : blk.back();
    }

    /// Canonical copy (blocks sorted by minimum).
    NcPartition materialize() const {
        std::vector<std::vector<int>> blocks(pool->begin(), pool->begin() + block_count);
        return NcPartition::unchecked(SetPartition(ground_size, std::move(blocks)));
    }
};

namespace detail {

/// Backtracking generator for NC(p). The block of the smallest element of a
/// segment splits the rest into independent contiguous segments, which are
/// kept on an explicit stack; a partition is emitted whenever no segment is
/// pending. Buffers are reused across visits, so one enumeration performs no
/// allocation after construction.
template <typename Visitor>
class NcEnumerator {
public:
    NcEnumerator(int p, Visitor& visit)
        : p_(p),
          visit_(visit),
          block_of_(static_cast<size_t>(p) + 1, -1),
          pos_(static_cast<size_t>(p) + 1, -1),
          pool_(static_cast<size_t>(p) > 0 ? static_cast<size_t>(p) : 1) {
        segs_.reserve(static_cast<size_t>(p) + 1);
    }

    void run() {
        segs_.push_back({1, p_ + 1});
        step();
        segs_.pop_back();
    }

    /// Enumerates only the partitions whose block containing 1 is exactly
    /// `first_block` (ascending, starting with 1). Splitting the full run by
    /// first block partitions NC(p) across workers.
    void run_with_first_block(std::span<const int> first_block) {
        const int b = open_block(first_block[0]);
        for (size_t t = 1; t < first_block.size(); ++t) append(b, first_block[t]);
        // Deferred segments: gaps between consecutive members, then the tail.
        segs_.push_back({first_block.back() + 1, p_ + 1});
        for (size_t t = first_block.size(); t-- > 1;)
            segs_.push_back({first_block[t - 1] + 1, first_block[t]});
        step();
        segs_.resize(0);
        for (size_t t = first_block.size(); t-- > 1;) remove(b, first_block[t]);
        close_block(first_block[0]);
    }

private:
    struct Seg {
        int lo, hi;  // half-open [lo, hi)
    };

    void emit() {
        PartitionView view{p_, nblocks_, &pool_, block_of_.data(), pos_.data()};
        visit_(view);
    }

    void step() {
        if (segs_.empty()) {
            emit();
            return;
        }
        const Seg s = segs_.back();
        segs_.pop_back();
        if (s.lo == s.hi) {
            step();
        } else {
            const int b = open_block(s.lo);
            extend(b, s.lo, s.hi);
            close_block(s.lo);
        }
        segs_.push_back(s);
    }

    // The current block ends at `last`; candidates for the next member lie in
    // [last+1, hi).
    void extend(int b, int last, int hi) {
        segs_.push_back({last + 1, hi});  // close the block; rest is the tail
        step();
        segs_.pop_back();
        for (int c = last + 1; c < hi; ++c) {
            append(b, c);
            segs_.push_back({last + 1, c});  // gap strictly between last and c
            extend(b, c, hi);
            segs_.pop_back();
            remove(b, c);
        }
    }

    int open_block(int v) {
        const int b = nblocks_++;
        auto& blk = pool_[static_cast<size_t>(b)];
        blk.clear();
        blk.push_back(v);
        block_of_[static_cast<size_t>(v)] = b;
        pos_[static_cast<size_t>(v)] = 0;
        return b;
    }
    void close_block(int v) {
        --nblocks_;
        block_of_[static_cast<size_t>(v)] = -1;
    }
    void append(int b, int v) {
        auto& blk = pool_[static_cast<size_t>(b)];
        block_of_[static_cast<size_t>(v)] = b;
        pos_[static_cast<size_t>(v)] = static_cast<int>(blk.size());
        blk.push_back(v);
    }
    void remove(int b, int v) {
        pool_[static_cast<size_t>(b)].pop_back();
        block_of_[static_cast<size_t>(v)] = -1;
    }

    int p_;
    Visitor& visit_;
    int nblocks_ = 0;
    std::vector<int> block_of_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> pool_;
    std::vector<Seg> segs_;
};

/// Noncrossing pairings: the partner of the smallest element of a segment
/// must leave even gaps on both sides.
template <typename Visitor>
class NcPairingEnumerator {
public:
    NcPairingEnumerator(int p, Visitor& visit)
        : p_(p),
          visit_(visit),
          block_of_(static_cast<size_t>(p) + 1, -1),
          pos_(static_cast<size_t>(p) + 1, -1),
          pool_(static_cast<size_t>(p) > 0 ? static_cast<size_t>(p) / 2 + 1 : 1) {
        segs_.reserve(static_cast<size_t>(p) + 1);
    }

    void run() {
        if (p_ % 2 != 0) return;  // odd ground set: no pairings
        segs_.push_back({1, p_ + 1});
        step();
        segs_.pop_back();
    }

private:
    struct Seg {
        int lo, hi;
    };

    void emit() {
        PartitionView view{p_, nblocks_, &pool_, block_of_.data(), pos_.data()};
        visit_(view);
    }

    void step() {
        if (segs_.empty()) {
            emit();
            return;
        }
        const Seg s = segs_.back();
        segs_.pop_back();
        if (s.lo == s.hi) {
            step();
        } else {
            for (int c = s.lo + 1; c < s.hi; c += 2) {
                pair(s.lo, c);
                segs_.push_back({s.lo + 1, c});
                segs_.push_back({c + 1, s.hi});
                step();
                segs_.pop_back();
                segs_.pop_back();
                unpair(s.lo);
            }
        }
        segs_.push_back(s);
    }

    void pair(int a, int b) {
        const int blk = nblocks_++;
        auto& slot = pool_[static_cast<size_t>(blk)];
        slot.clear();
        slot.push_back(a);
        slot.push_back(b);
        block_of_[static_cast<size_t>(a)] = blk;
        block_of_[static_cast<size_t>(b)] = blk;
        pos_[static_cast<size_t>(a)] = 0;
        pos_[static_cast<size_t>(b)] = 1;
    }
    void unpair(int a) {
        --nblocks_;
        block_of_[static_cast<size_t>(a)] = -1;
    }

    int p_;
    Visitor& visit_;
    int nblocks_ = 0;
    std::vector<int> block_of_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> pool_;
    std::vector<Seg> segs_;
};

inline void check_enumeration_size(int p, int limit) {
    if (p < 1) throw std::invalid_argument("enumeration: p must be >= 1");
    if (p > limit)
        throw budget_exceeded("enumeration: p exceeds the configured limit of " +
                              std::to_string(limit));
}

}  // namespace detail

/// Streams every noncrossing partition of [p] exactly once, in a fixed
/// deterministic order, as transient PartitionViews.
template <typename Visitor>
void for_each_noncrossing(int p, Visitor&& visit, int limit = kDefaultEnumerationLimit) {
    detail::check_enumeration_size(p, limit);
    detail::NcEnumerator<Visitor> e(p, visit);
    e.run();
}

/// Streams the completions of one prescribed first block (the block of
/// element 1); the union over all 2^{p-1} first blocks is NC(p).
template <typename Visitor>
void for_each_noncrossing_with_first_block(int p, std::span<const int> first_block,
                                           Visitor&& visit,
                                           int limit = kDefaultEnumerationLimit) {
    detail::check_enumeration_size(p, limit);
    detail::NcEnumerator<Visitor> e(p, visit);
    e.run_with_first_block(first_block);
}

/// Streams every noncrossing pairing of [p]; nothing for odd p.
template <typename Visitor>
void for_each_noncrossing_pairing(int p, Visitor&& visit, int limit = kDefaultEnumerationLimit) {
    detail::check_enumeration_size(p, limit);
    detail::NcPairingEnumerator<Visitor> e(p, visit);
    e.run();
}

/// Materializing convenience for small p (tests, CLI).
std::vector<NcPartition> enumerate_nc(int p, int limit = kDefaultEnumerationLimit);
std::vector<NcPartition> enumerate_nc_pairings(int p, int limit = kDefaultEnumerationLimit);

}  // namespace nctrace
