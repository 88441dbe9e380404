#include "nctrace/enumerate.hpp"

namespace nctrace {

std::vector<NcPartition> enumerate_nc(int p, int limit) {
    std::vector<NcPartition> out;
    for_each_noncrossing(
        p, [&](const PartitionView& v) { out.push_back(v.materialize()); }, limit);
    return out;
}

std::vector<NcPartition> enumerate_nc_pairings(int p, int limit) {
    std::vector<NcPartition> out;
    for_each_noncrossing_pairing(
        p, [&](const PartitionView& v) { out.push_back(v.materialize()); }, limit);
    return out;
}

}  // namespace nctrace
