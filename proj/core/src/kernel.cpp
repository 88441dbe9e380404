#include "nctrace/kernel.hpp"

#include <cassert>
#include <stdexcept>

namespace nctrace {

Integer catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: k must be >= 0");
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(k),
                 static_cast<unsigned long>(k));
    return binom / (k + 1);
}

namespace {

// r even, consecutive labels distinct. Over a two-letter alphabet this forces
// strict alternation, so the cyclic pair differs as well.
template <typename Label>
bool alternates(int r, std::span<const Label> labels) {
    if (r < 2 || r % 2 != 0) return false;
    for (int i = 0; i + 1 < r; ++i)
        if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(i + 1)]) return false;
    assert(labels[static_cast<size_t>(r - 1)] != labels[0]);
    return true;
}

LaurentPoly alternating_block_value(int r) {
    Integer c = catalan(r / 2 - 1);
    if ((r / 2 - 1) % 2 != 0) c = -c;
    return LaurentPoly::monomial(1 - r, Rational(c));
}

}  // namespace

LaurentPoly brown_block_value(int r, std::span<const Star> labels) {
    if (r < 1 || static_cast<size_t>(r) != labels.size())
        throw std::invalid_argument("brown_block_value: r does not match label count");
    if (!alternates(r, labels)) return LaurentPoly();
    return alternating_block_value(r);
}

LaurentPoly brown_entry_cumulant(std::span<const EntryLabel> entries) {
    const size_t r = entries.size();
    if (r == 0) throw std::invalid_argument("brown_entry_cumulant: empty entry list");
    for (size_t l = 1; l < r; ++l)
        if (entries[l - 1].col != entries[l].row) return LaurentPoly();
    if (entries[0].row != entries[r - 1].col) return LaurentPoly();
    std::vector<Star> stars;
    stars.reserve(r);
    for (const EntryLabel& e : entries) stars.push_back(e.star);
    return brown_block_value(static_cast<int>(r), stars);
}

namespace {

template <typename Label>
bool block_adapted(const std::vector<int>& block, std::span<const Label> labels) {
    if (block.size() % 2 != 0) return false;
    for (size_t i = 0; i + 1 < block.size(); ++i)
        if (labels[static_cast<size_t>(block[i] - 1)] ==
            labels[static_cast<size_t>(block[i + 1] - 1)])
            return false;
    return true;
}

}  // namespace

bool is_adapted(const NcPartition& pi, std::span<const int> labels) {
    if (static_cast<size_t>(pi.ground_size()) != labels.size())
        throw std::invalid_argument("is_adapted: label count does not match ground size");
    for (const auto& block : pi.blocks())
        if (!block_adapted(block, labels)) return false;
    return true;
}

bool is_adapted(const NcPartition& pi, std::span<const Star> labels) {
    if (static_cast<size_t>(pi.ground_size()) != labels.size())
        throw std::invalid_argument("is_adapted: label count does not match ground size");
    for (const auto& block : pi.blocks())
        if (!block_adapted(block, labels)) return false;
    return true;
}

bool is_adapted(const PartitionView& view, std::span<const Star> labels) {
    for (int b = 0; b < view.block_count; ++b)
        if (!block_adapted(view.block(b), labels)) return false;
    return true;
}

LaurentPoly BrownKernel::block_value(std::span<const int> labels) const {
    for (int l : labels)
        if (l != 0 && l != 1)
            throw std::invalid_argument("BrownKernel: labels must be 0 (plain) or 1 (star)");
    const int r = static_cast<int>(labels.size());
    if (!alternates(r, labels)) return LaurentPoly();
    return alternating_block_value(r);
}

namespace {

template <typename Label>
LaurentPoly kappa_pi_impl(const NcPartition& pi, const BlockKernel& kernel,
                          std::span<const Label> labels) {
    if (static_cast<size_t>(pi.ground_size()) != labels.size())
        throw std::invalid_argument("kappa_pi: label count does not match ground size");
    LaurentPoly product = LaurentPoly::constant(Rational(1));
    std::vector<int> block_labels;
    for (const auto& block : pi.blocks()) {
        block_labels.clear();
        for (int v : block)
            block_labels.push_back(static_cast<int>(labels[static_cast<size_t>(v - 1)]));
        const LaurentPoly value = kernel.block_value(block_labels);
        if (value.is_zero()) return LaurentPoly();
        product = product * value;
    }
    return product;
}

}  // namespace

LaurentPoly kappa_pi(const NcPartition& pi, const BlockKernel& kernel,
                     std::span<const int> labels) {
    return kappa_pi_impl<int>(pi, kernel, labels);
}

LaurentPoly kappa_pi(const NcPartition& pi, const BlockKernel& kernel,
                     std::span<const Star> labels) {
    return kappa_pi_impl<Star>(pi, kernel, labels);
}

}  // namespace nctrace
