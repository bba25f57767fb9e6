#ifndef VECON_HARDNESS_HPP
#define VECON_HARDNESS_HPP

#include <optional>

#include "vecon/graph.hpp"

namespace vecon {

/// Hitting Set over universe {0..n-1}: find at most `budget` elements
/// meeting every set of the family. Duplicate sets are kept as-is; budgets
/// above the family size are rejected since such instances normalize away.
struct HittingSetInstance {
    int universe = 0;
    std::vector<vertex_set> sets;
    int budget = 0;
};

HittingSetInstance make_hs_instance(int universe, std::vector<vertex_set> sets, int budget);

/// Layout of the produced vector-connectivity instance, for tests and
/// report emission: element vertices first, then the hub rows, then their
/// pendant partners.
struct HsReductionLayout {
    int element_base = 0;    ///< x_u = element_base + u
    int hub_base = 0;        ///< y_{i,F_j} = hub_base + j*(k+1) + (i-1)
    int pendant_base = 0;    ///< y'_{i,F_j} = pendant_base + j*(k+1) + (i-1)
    int copies = 0;          ///< k + 1
};

/// Transforms a Hitting Set instance into an equivalent vector-connectivity
/// instance on 2(k+1)m + n vertices with budget (k+1)m + k. Each set gets
/// k+1 hub vertices of demand (k+1)m + 1 joined into one global clique, each
/// hub a degree-one partner of demand 2, and hubs attach to the elements
/// they cover.
Instance reduce_hs_to_vc(const HittingSetInstance& hs);
HsReductionLayout hs_reduction_layout(const HittingSetInstance& hs);

struct HsResult {
    int size = 0;
    vertex_set witness;
};

/// Minimum hitting set by subset enumeration (ascending size,
/// lexicographic); empty result when some set is empty and unhittable.
std::optional<HsResult> brute_force_hs(const HittingSetInstance& hs, int cap = 20);

} // namespace vecon

#endif
