#pragma once

#include <span>
#include <vector>

#include "nctrace/enumerate.hpp"
#include "nctrace/laurent.hpp"
#include "nctrace/partition.hpp"
#include "nctrace/rational.hpp"

namespace nctrace {

enum class Star : int { plain = 0, star = 1 };

constexpr Star conjugate(Star e) { return e == Star::plain ? Star::star : Star::plain; }

/// Family index of a star label for the generic kernel interface.
constexpr int family_index(Star e) { return static_cast<int>(e); }

/// Matrix entry (u^e)_{row, col} of the generating matrix.
struct EntryLabel {
    Star star;
    int row;
    int col;

    friend bool operator==(const EntryLabel&, const EntryLabel&) = default;
};

/// k-th Catalan number (2k)! / ((k+1)! k!), exact.
Integer catalan(int k);

/// Common value of the length-r entry cumulant on cyclic indices:
/// n^{1-r} (-1)^{r/2-1} C_{r/2-1} when r is even and the labels alternate
/// consecutively; zero otherwise.
LaurentPoly brown_block_value(int r, std::span<const Star> labels);

/// Entry cumulant of the generating matrix: brown_block_value when the
/// row/column indices are cyclic (col_{l-1} = row_l, row_1 = col_r), zero
/// otherwise. The zero branch is the R-cyclicity of the family.
LaurentPoly brown_entry_cumulant(std::span<const EntryLabel> entries);

/// Every block has even size and consecutively distinct labels in
/// increasing-element order.
bool is_adapted(const NcPartition& pi, std::span<const int> labels);
bool is_adapted(const NcPartition& pi, std::span<const Star> labels);
bool is_adapted(const PartitionView& view, std::span<const Star> labels);

/// Block-cumulant evaluator for an R-cyclic family whose cyclic cumulants
/// are index-independent: maps the label subsequence of one block to the
/// common cumulant value. Must return exactly zero where the cumulant
/// vanishes. Implementations must be stateless.
class BlockKernel {
public:
    virtual ~BlockKernel() = default;
    virtual LaurentPoly block_value(std::span<const int> labels) const = 0;
};

/// Kernel of the generating-matrix family; labels must be 0 (plain) or 1
/// (star).
class BrownKernel final : public BlockKernel {
public:
    LaurentPoly block_value(std::span<const int> labels) const override;
};

/// kappa_pi = product over blocks of the kernel value on the block's label
/// subsequence.
LaurentPoly kappa_pi(const NcPartition& pi, const BlockKernel& kernel,
                     std::span<const int> labels);
LaurentPoly kappa_pi(const NcPartition& pi, const BlockKernel& kernel,
                     std::span<const Star> labels);

}  // namespace nctrace
