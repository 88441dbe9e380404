#pragma once

#include <string>
#include <vector>

namespace nctrace {

/// A set partition of the ground set [p] = {1, ..., p}. Canonical form:
/// every block lists its elements in increasing order and blocks are sorted
/// by their minimum, so equality is structural.
class SetPartition {
public:
    /// Validates that the blocks partition [p] exactly; reorders into
    /// canonical form. Throws std::invalid_argument otherwise.
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    /// 0_p: all singletons.
    static SetPartition singletons(int p);
    /// 1_p: one block (p >= 1).
    static SetPartition full(int p);

    int ground_size() const { return p_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Index into blocks() of the block containing v.
    int block_index_of(int v) const { return block_of_[static_cast<size_t>(v)]; }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.p_ == b.p_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.blocks_ < b.blocks_;
    }

private:
    int p_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // index 1..p; [0] unused
};

/// True iff no crossing a < b < c < d exists with a, c in one block and
/// b, d in a different block.
bool is_noncrossing(const SetPartition& sp);

/// A noncrossing set partition of [p]. Construction checks the noncrossing
/// invariant (O(p)).
class NcPartition {
public:
    explicit NcPartition(SetPartition sp);
    NcPartition(int ground_size, std::vector<std::vector<int>> blocks)
        : NcPartition(SetPartition(ground_size, std::move(blocks))) {}

    /// Skips the crossing check; for producers that are noncrossing by
    /// construction (the enumerator, the Kreweras complement).
    static NcPartition unchecked(SetPartition sp);

    static NcPartition singletons(int p) { return unchecked(SetPartition::singletons(p)); }
    static NcPartition full(int p) { return unchecked(SetPartition::full(p)); }

    int ground_size() const { return sp_.ground_size(); }
    int block_count() const { return sp_.block_count(); }
    const std::vector<std::vector<int>>& blocks() const { return sp_.blocks(); }
    int block_index_of(int v) const { return sp_.block_index_of(v); }
    const SetPartition& as_set_partition() const { return sp_; }

    friend bool operator==(const NcPartition& a, const NcPartition& b) { return a.sp_ == b.sp_; }
    friend bool operator!=(const NcPartition& a, const NcPartition& b) { return !(a == b); }
    friend bool operator<(const NcPartition& a, const NcPartition& b) { return a.sp_ < b.sp_; }

private:
    struct unchecked_t {};
    NcPartition(unchecked_t, SetPartition sp) : sp_(std::move(sp)) {}

    SetPartition sp_;
};

/// A composition (p_1, ..., p_s) of p = sum p_i with every part >= 1.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    int total() const { return total_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    /// 1-based start of each part: 1, p_1 + 1, ..., p - p_s + 1.
    const std::vector<int>& part_starts() const { return starts_; }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> starts_;
    int total_ = 0;
};

/// The interval partition of the composition: consecutive blocks of lengths
/// p_1, ..., p_s.
NcPartition interval_partition(const Composition& c);

/// Join (coarsest common refinement bound) in the full partition lattice,
/// computed by union-find. Throws on ground-size mismatch.
SetPartition join(const SetPartition& a, const SetPartition& b);

/// Partition JSON encoding: {"p": 4, "blocks": [[1,2],[3,4]]}.
std::string to_json(const SetPartition& sp);
std::string to_json(const NcPartition& pi);

}  // namespace nctrace
