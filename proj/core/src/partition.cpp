#include "nctrace/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nctrace {

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : p_(ground_size), blocks_(std::move(blocks)) {
    if (p_ < 1) throw std::invalid_argument("SetPartition: ground size must be >= 1");
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(static_cast<size_t>(p_) + 1, -1);
    int covered = 0;
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
        for (int v : blocks_[bi]) {
            if (v < 1 || v > p_ || block_of_[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("SetPartition: blocks must partition [p] exactly");
            block_of_[static_cast<size_t>(v)] = static_cast<int>(bi);
            ++covered;
        }
    }
    if (covered != p_) throw std::invalid_argument("SetPartition: blocks must cover [p]");
}

SetPartition SetPartition::singletons(int p) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(p));
    for (int v = 1; v <= p; ++v) blocks.push_back({v});
    return SetPartition(p, std::move(blocks));
}

SetPartition SetPartition::full(int p) {
    if (p < 1) throw std::invalid_argument("SetPartition::full: p must be >= 1");
    std::vector<int> all(static_cast<size_t>(p));
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(p, {std::move(all)});
}

bool is_noncrossing(const SetPartition& sp) {
    // Stack of open blocks: v may only continue the block on top; blocks
    // close at their maximum.
    const int p = sp.ground_size();
    std::vector<int> open;
    open.reserve(static_cast<size_t>(sp.block_count()));
    for (int v = 1; v <= p; ++v) {
        const int b = sp.block_index_of(v);
        const auto& blk = sp.blocks()[static_cast<size_t>(b)];
        if (blk.front() == v) open.push_back(b);
        if (open.empty() || open.back() != b) return false;
        if (blk.back() == v) open.pop_back();
    }
    return true;
}

NcPartition::NcPartition(SetPartition sp) : sp_(std::move(sp)) {
    if (!is_noncrossing(sp_)) throw std::invalid_argument("NcPartition: partition has a crossing");
}

NcPartition NcPartition::unchecked(SetPartition sp) {
    return NcPartition(unchecked_t{}, std::move(sp));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Composition: needs at least one part");
    starts_.reserve(parts_.size());
    for (int q : parts_) {
        if (q < 1) throw std::invalid_argument("Composition: parts must be >= 1");
        starts_.push_back(total_ + 1);
        total_ += q;
    }
}

NcPartition interval_partition(const Composition& c) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(c.part_count()));
    int v = 1;
    for (int q : c.parts()) {
        std::vector<int> blk(static_cast<size_t>(q));
        std::iota(blk.begin(), blk.end(), v);
        v += q;
        blocks.push_back(std::move(blk));
    }
    return NcPartition::unchecked(SetPartition(c.total(), std::move(blocks)));
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        int root = x;
        while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
        while (parent_[static_cast<size_t>(x)] != root) {
            int next = parent_[static_cast<size_t>(x)];
            parent_[static_cast<size_t>(x)] = root;
            x = next;
        }
        return root;
    }
    void unite(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("join: ground-size mismatch");
    const int p = a.ground_size();
    UnionFind uf(p);
    for (const auto* part : {&a, &b}) {
        for (const auto& blk : part->blocks()) {
            for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[i - 1], blk[i]);
        }
    }
    std::vector<std::vector<int>> groups(static_cast<size_t>(p) + 1);
    for (int v = 1; v <= p; ++v) groups[static_cast<size_t>(uf.find(v))].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups) {
        if (!g.empty()) blocks.push_back(std::move(g));
    }
    return SetPartition(p, std::move(blocks));
}

std::string to_json(const SetPartition& sp) {
    std::ostringstream os;
    os << "{\"p\":" << sp.ground_size() << ",\"blocks\":[";
    bool first_block = true;
    for (const auto& blk : sp.blocks()) {
        if (!first_block) os << ',';
        first_block = false;
        os << '[';
        for (size_t i = 0; i < blk.size(); ++i) {
            if (i) os << ',';
            os << blk[i];
        }
        os << ']';
    }
    os << "]}";
    return os.str();
}

std::string to_json(const NcPartition& pi) {
    return to_json(pi.as_set_partition());
}

}  // namespace nctrace
