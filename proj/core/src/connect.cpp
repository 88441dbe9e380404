#include "nctrace/connect.hpp"

#include <stdexcept>

#include "nctrace/errors.hpp"
#include "nctrace/permutation.hpp"

namespace nctrace {

std::vector<int> marked_points(const Composition& c) {
    std::vector<int> pts;
    pts.reserve(c.parts().size());
    int start = 1;
    for (int part : c.parts()) {
        pts.push_back(start);
        start += part;
    }
    return pts;
}

bool is_connecting(const PartitionView& view, std::span<const signed char> is_marked,
                   std::span<const int> marked) {
    const int p = view.ground_size;
    for (int m : marked) {
        int v = view.block_predecessor(m) % p + 1;
        while (v != m) {
            if (is_marked[static_cast<size_t>(v)]) return false;
            v = view.block_predecessor(v) % p + 1;
        }
    }
    return true;
}

bool is_connecting(const NcPartition& pi, const Composition& c) {
    const int p = pi.ground_size();
    if (p != c.total()) throw std::invalid_argument("is_connecting: ground size mismatch");
    const Permutation f = kreweras_permutation(pi);
    const std::vector<int> marked = marked_points(c);
    std::vector<signed char> is_marked(static_cast<size_t>(p) + 1, 0);
    for (int m : marked) is_marked[static_cast<size_t>(m)] = 1;
    for (int m : marked) {
        int v = f.apply(m);
        while (v != m) {
            if (is_marked[static_cast<size_t>(v)]) return false;
            v = f.apply(v);
        }
    }
    return true;
}

bool is_connecting_by_join(const NcPartition& pi, const Composition& c) {
    const int p = pi.ground_size();
    if (p != c.total()) throw std::invalid_argument("is_connecting: ground size mismatch");
    const SetPartition joined =
        join(pi.as_set_partition(), interval_partition(c).as_set_partition());
    return joined.blocks().size() == 1;
}

Integer count_index_tuples(const NcPartition& pi, const Composition& c, long n_value,
                           long long tuple_limit) {
    const int p = pi.ground_size();
    if (p != c.total()) throw std::invalid_argument("count_index_tuples: ground size mismatch");
    if (n_value < 1) throw std::invalid_argument("count_index_tuples: n must be >= 1");

    Integer total_tuples;
    mpz_ui_pow_ui(total_tuples.get_mpz_t(), static_cast<unsigned long>(n_value),
                  static_cast<unsigned long>(p));
    if (total_tuples > Integer(static_cast<long>(tuple_limit)))
        throw budget_exceeded("count_index_tuples: n^p exceeds the tuple limit");

    const Permutation f = kreweras_permutation(pi);
    const std::vector<int> marked = marked_points(c);

    Integer count = 0;
    std::vector<long> idx(static_cast<size_t>(p) + 1, 1);  // 1-based positions, values in [1, n]
    for (;;) {
        bool ok = true;
        for (size_t t = 1; ok && t < marked.size(); ++t)
            ok = idx[static_cast<size_t>(marked[t])] == idx[static_cast<size_t>(marked[0])];
        for (int j = 1; ok && j <= p; ++j)
            ok = idx[static_cast<size_t>(j)] == idx[static_cast<size_t>(f.apply(j))];
        if (ok) ++count;

        int pos = p;
        while (pos >= 1 && idx[static_cast<size_t>(pos)] == n_value) {
            idx[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 1) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return count;
}

}  // namespace nctrace
