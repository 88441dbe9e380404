#include "nctrace/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace nctrace {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int p = static_cast<int>(img_.size());
    std::vector<bool> seen(static_cast<size_t>(p) + 1, false);
    for (int v : img_) {
        if (v < 1 || v > p || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection on [p]");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int p) {
    std::vector<int> img(static_cast<size_t>(p));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::cycle(int p) {
    std::vector<int> img(static_cast<size_t>(p));
    for (int v = 1; v <= p; ++v) img[static_cast<size_t>(v - 1)] = v % p + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int v = 1; v <= size(); ++v) img[static_cast<size_t>(apply(v) - 1)] = v;
    return Permutation(std::move(img));
}

SetPartition Permutation::cycle_partition() const {
    const int p = size();
    std::vector<bool> seen(static_cast<size_t>(p) + 1, false);
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= p; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        std::vector<int> cyc;
        int w = v;
        do {
            seen[static_cast<size_t>(w)] = true;
            cyc.push_back(w);
            w = apply(w);
        } while (w != v);
        blocks.push_back(std::move(cyc));
    }
    return SetPartition(p, std::move(blocks));
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(static_cast<size_t>(f.size()));
    for (int v = 1; v <= f.size(); ++v) img[static_cast<size_t>(v - 1)] = f.apply(g.apply(v));
    return Permutation(std::move(img));
}

int cycle_count(const Permutation& s) {
    return s.cycle_partition().block_count();
}

Permutation to_permutation(const NcPartition& pi) {
    std::vector<int> img(static_cast<size_t>(pi.ground_size()));
    for (const auto& blk : pi.blocks()) {
        for (size_t i = 0; i < blk.size(); ++i) {
            const int v = blk[i];
            img[static_cast<size_t>(v - 1)] = blk[(i + 1) % blk.size()];
        }
    }
    return Permutation(std::move(img));
}

Permutation kreweras_permutation(const NcPartition& pi) {
    const int p = pi.ground_size();
    // gamma o sigma_pi^{-1}: predecessor within the block, then +1 mod p.
    std::vector<int> img(static_cast<size_t>(p));
    for (const auto& blk : pi.blocks()) {
        for (size_t i = 0; i < blk.size(); ++i) {
            const int v = blk[i];
            const int pred = blk[(i + blk.size() - 1) % blk.size()];
            img[static_cast<size_t>(v - 1)] = pred % p + 1;
        }
    }
    return Permutation(std::move(img));
}

NcPartition kreweras(const NcPartition& pi) {
    const int p = pi.ground_size();
    if (p == 0) return pi;
    SetPartition orbits = kreweras_permutation(pi).cycle_partition();
    // Undo the conjugation by gamma: v -> v - 1, wrapping 1 -> p.
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(orbits.block_count()));
    for (const auto& blk : orbits.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(blk.size());
        for (int v : blk) shifted.push_back(v == 1 ? p : v - 1);
        blocks.push_back(std::move(shifted));
    }
    return NcPartition::unchecked(SetPartition(p, std::move(blocks)));
}

}  // namespace nctrace
