#pragma once

#include <vector>

#include "nctrace/partition.hpp"

namespace nctrace {

/// A permutation of [p], stored as images: apply(v) for v in 1..p.
class Permutation {
public:
    /// images[v-1] is the image of v; must be a bijection on [p].
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int p);
    /// The full cycle gamma = (1, 2, ..., p).
    static Permutation cycle(int p);

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int v) const { return img_[static_cast<size_t>(v) - 1]; }

    Permutation inverse() const;
    /// Orbit partition: each cycle becomes a block.
    SetPartition cycle_partition() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

private:
    std::vector<int> img_;
};

/// f after g: (compose(f, g))(v) = f(g(v)).
Permutation compose(const Permutation& f, const Permutation& g);

/// Number of cycles in the cycle decomposition, fixed points included.
int cycle_count(const Permutation& s);

/// sigma_pi: each block {v_1 < ... < v_r} becomes the cycle
/// v_1 -> v_2 -> ... -> v_r -> v_1.
Permutation to_permutation(const NcPartition& pi);

/// gamma o sigma_pi^{-1}; its cycle partition is the Kreweras complement of
/// pi conjugated by gamma.
Permutation kreweras_permutation(const NcPartition& pi);

/// The Kreweras complement K(pi): the cycle partition of kreweras_permutation
/// mapped back through gamma^{-1}. Satisfies |K(pi)| = p + 1 - |pi|.
NcPartition kreweras(const NcPartition& pi);

}  // namespace nctrace
