#include "vecon/hardness.hpp"

#include <algorithm>

namespace vecon {

HittingSetInstance make_hs_instance(int universe, std::vector<vertex_set> sets, int budget) {
    if (universe < 0) throw input_error("universe size must be nonnegative");
    if (budget < 0) throw input_error("budget must be nonnegative");
    if (budget > static_cast<int>(sets.size()))
        throw input_error("budget exceeds the family size; normalize to budget <= set count");
    for (auto& s : sets) {
        s = normalized(std::move(s));
        for (int e : s)
            if (e < 0 || e >= universe) throw input_error("set element outside the universe");
    }
    return HittingSetInstance{universe, std::move(sets), budget};
}

HsReductionLayout hs_reduction_layout(const HittingSetInstance& hs) {
    int m = static_cast<int>(hs.sets.size());
    int copies = hs.budget + 1;
    HsReductionLayout layout;
    layout.element_base = 0;
    layout.hub_base = hs.universe;
    layout.pendant_base = hs.universe + copies * m;
    layout.copies = copies;
    return layout;
}

Instance reduce_hs_to_vc(const HittingSetInstance& hs) {
    int n = hs.universe;
    int m = static_cast<int>(hs.sets.size());
    int k = hs.budget;
    HsReductionLayout layout = hs_reduction_layout(hs);
    int copies = layout.copies;
    int total = n + 2 * copies * m;

    auto hub = [&](int set_index, int copy) {
        return layout.hub_base + set_index * copies + copy;
    };
    auto pendant = [&](int set_index, int copy) {
        return layout.pendant_base + set_index * copies + copy;
    };

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < copies; ++i) {
            edges.emplace_back(hub(j, i), pendant(j, i));
            for (int u : hs.sets[j]) edges.emplace_back(u, hub(j, i));
        }
    }
    // All hubs form one clique across sets and copies.
    int hub_count = copies * m;
    for (int a = 0; a < hub_count; ++a)
        for (int b = a + 1; b < hub_count; ++b)
            edges.emplace_back(layout.hub_base + a, layout.hub_base + b);

    int hub_demand = copies * m + 1;
    std::vector<int> demand(static_cast<std::size_t>(total), 0);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < copies; ++i) {
            demand[hub(j, i)] = hub_demand;
            demand[pendant(j, i)] = 2;
        }

    int bound = m > 0 ? hub_demand : 1;
    int budget = copies * m + k;
    return make_instance(Graph(total, edges), DemandMap(demand, bound), budget);
}

namespace {

bool hits_all(const HittingSetInstance& hs, const vertex_set& chosen) {
    for (const vertex_set& s : hs.sets)
        if (set_intersection(s, chosen).empty()) return false;
    return true;
}

bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<HsResult> brute_force_hs(const HittingSetInstance& hs, int cap) {
    if (hs.universe > cap) throw capacity_error("universe exceeds the exhaustive-search cap");
    for (const vertex_set& s : hs.sets)
        if (s.empty()) return std::nullopt;

    for (int size = 0; size <= hs.universe; ++size) {
        std::vector<int> comb(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) comb[i] = i;
        bool more = true;
        while (more) {
            vertex_set chosen(comb.begin(), comb.end());
            if (hits_all(hs, chosen)) return HsResult{size, chosen};
            more = size > 0 && next_combination(comb, hs.universe);
        }
    }
    return std::nullopt;
}

} // namespace vecon
