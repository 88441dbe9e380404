#pragma once

#include <span>
#include <vector>

#include "nctrace/enumerate.hpp"
#include "nctrace/partition.hpp"
#include "nctrace/rational.hpp"

namespace nctrace {

/// First element of each cycle of gamma_c: 1, p_1+1, ..., p-p_s+1.
std::vector<int> marked_points(const Composition& c);

/// pi v gamma_c = 1_p, decided by the separation criterion: the marked
/// points of c lie in pairwise distinct cycles of gamma.sigma_pi^{-1}.
bool is_connecting(const NcPartition& pi, const Composition& c);

/// Same predicate evaluated from the definition (union-find join against the
/// interval partition of c). Slower; kept as the independent cross-check.
bool is_connecting_by_join(const NcPartition& pi, const Composition& c);

/// Allocation-free variant for enumeration loops. `is_marked` has size p+1
/// and flags the marked points of the composition; `marked` lists them.
bool is_connecting(const PartitionView& view, std::span<const signed char> is_marked,
                   std::span<const int> marked);

/// #{ i in [n]^p : i agrees on all marked points of c, and i_j = i_{f(j)}
/// for all j, f = gamma.sigma_pi^{-1} }, counted by explicit enumeration.
/// Rejects n_value^p above tuple_limit. For connecting pi this equals
/// n^{p+2-s-|pi|}; the closed form is asserted in tests, not here.
Integer count_index_tuples(const NcPartition& pi, const Composition& c, long n_value,
                           long long tuple_limit = 10'000'000);

}  // namespace nctrace
