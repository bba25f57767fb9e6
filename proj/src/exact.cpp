#include "vecon/exact.hpp"

#include <algorithm>
#include <queue>

#include "vecon/flow.hpp"

namespace vecon {

namespace {

void check_cap(int n, int cap) {
    if (n > cap) throw capacity_error("instance exceeds the exhaustive-search cap");
}

void check_mask_width(int n) {
    if (n > 62) throw capacity_error("subset enumeration needs at most 62 vertices");
}

// Next size-k combination of {0..n-1} in lexicographic order.
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

ExactResult brute_force_opt(const Instance& inst, int cap) {
    int n = inst.graph.vertex_count();
    check_cap(n, cap);

    // Vertices whose demand exceeds their degree lie in every solution, so
    // the search may fix them without changing the (size, witness) outcome:
    // supersets of a fixed set enumerate in the same lexicographic order.
    vertex_set forced;
    for (int v = 0; v < n; ++v)
        if (inst.demands[v] > inst.graph.degree(v)) forced.push_back(v);
    vertex_set all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    vertex_set free = set_difference(all, forced);

    for (int size = static_cast<int>(forced.size()); size <= n; ++size) {
        int extra = size - static_cast<int>(forced.size());
        if (extra > static_cast<int>(free.size())) break;
        std::vector<int> comb(static_cast<std::size_t>(extra));
        for (int i = 0; i < extra; ++i) comb[i] = i;
        bool more = true;
        while (more) {
            vertex_set candidate = forced;
            for (int idx : comb) candidate.push_back(free[idx]);
            candidate = normalized(std::move(candidate));
            if (verify_solution(inst, candidate))
                return ExactResult{size, candidate};
            more = extra > 0 && next_combination(comb, static_cast<int>(free.size()));
        }
    }
    // S = V satisfies every demand, so the loop above always returns.
    throw contract_error("exhaustive search fell through");
}

namespace {

// Connected-subset enumeration, canonical grow-from-minimum-vertex: each
// connected set is produced exactly once, rooted at its smallest member.
template <typename Visit>
void enumerate_connected(const Graph& g, Visit&& visit) {
    int n = g.vertex_count();
    vertex_set current, frontier, banned;

    auto extend = [&](auto&& self, const vertex_set& cur, const vertex_set& ban) -> void {
        visit(cur);
        vertex_set options = set_difference(neighborhood(g, cur), ban);
        vertex_set ban_acc = ban;
        for (int u : options) {
            vertex_set next = set_insert(cur, u);
            self(self, next, ban_acc);
            ban_acc = set_insert(std::move(ban_acc), u);
        }
    };

    for (int root = 0; root < n; ++root) {
        vertex_set ban;
        for (int v = 0; v < root; ++v) ban.push_back(v);
        extend(extend, vertex_set{root}, ban);
    }
}

} // namespace

XFamily enumerate_x(const Instance& inst, int cap) {
    int n = inst.graph.vertex_count();
    check_cap(n, cap);
    check_mask_width(n);

    struct Candidate {
        std::uint64_t mask;
        XSet data;
    };
    std::vector<Candidate> qualifying;

    enumerate_connected(inst.graph, [&](const vertex_set& x) {
        int boundary = static_cast<int>(neighborhood(inst.graph, x).size());
        int witness = -1;
        for (int v : x) {
            if (inst.demands[v] > boundary) {
                witness = v;
                break;
            }
        }
        if (witness < 0) return;
        qualifying.push_back({mask_of(x), XSet{x, witness, boundary}});
    });

    XFamily family;
    for (const Candidate& cand : qualifying) {
        bool minimal = true;
        for (const Candidate& other : qualifying) {
            if (other.mask != cand.mask && (other.mask & cand.mask) == other.mask) {
                minimal = false;
                break;
            }
        }
        if (minimal) family.sets.push_back(cand.data);
    }
    std::sort(family.sets.begin(), family.sets.end(), [](const XSet& a, const XSet& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return family;
}

namespace {

struct PackingSearch {
    const Graph& g;
    vertex_set targets;
    std::vector<char> used;        // path interiors and endpoints, excluding v
    std::vector<char> used_target; // indexed like targets
    int v;

    bool reachable_targets_at_least(int need) {
        if (need <= 0) return true;
        std::vector<char> seen(used.size(), 0);
        std::queue<int> queue;
        queue.push(v);
        seen[v] = 1;
        int found = 0;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            for (int nb : g.neighbors(cur)) {
                if (seen[nb] || used[nb]) continue;
                seen[nb] = 1;
                queue.push(nb);
            }
        }
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (!used_target[i] && seen[targets[i]]) ++found;
        return found >= need;
    }

    bool search(int remaining) {
        if (remaining == 0) return true;
        if (!reachable_targets_at_least(remaining)) return false;
        return extend_path(v, remaining);
    }

    // Grow one path from `cur`; stopping at an unused target closes the path.
    bool extend_path(int cur, int remaining) {
        for (int nb : g.neighbors(cur)) {
            if (used[nb]) continue;
            auto it = std::lower_bound(targets.begin(), targets.end(), nb);
            bool is_target = it != targets.end() && *it == nb;
            std::size_t target_idx = static_cast<std::size_t>(it - targets.begin());
            used[nb] = 1;
            if (is_target && !used_target[target_idx]) {
                used_target[target_idx] = 1;
                if (search(remaining - 1)) return true;
                used_target[target_idx] = 0;
            }
            if (extend_path(nb, remaining)) return true;
            used[nb] = 0;
        }
        return false;
    }
};

} // namespace

bool packing_oracle(const Graph& g, int v, std::span<const int> s, int r, int cap) {
    check_cap(g.vertex_count(), cap);
    if (!g.has_vertex(v)) throw input_error("unknown vertex");
    if (!is_normalized(s)) throw input_error("target set must be sorted and unique");
    if (set_contains(s, v)) throw input_error("target set must not contain the source");
    if (r <= 0) return true;
    if (r > static_cast<int>(s.size())) return false;

    PackingSearch search{g, vertex_set(s.begin(), s.end()),
                         std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0),
                         std::vector<char>(s.size(), 0), v};
    search.used[v] = 1; // paths share v as their start only, never revisit it
    return search.search(r);
}

} // namespace vecon
