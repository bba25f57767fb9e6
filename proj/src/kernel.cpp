#include "vecon/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "vecon/flow.hpp"
#include "vecon/reduction.hpp"

namespace vecon {

namespace {

int cube(int d) { return d * d * d; }

// ---------------------------------------------------------------------------
// Piece enumeration
// ---------------------------------------------------------------------------

struct YEnumerator {
    const Instance& inst;
    vertex_set demand_vertices;
    int d3;
    int d;
    std::set<vertex_set> collected;

    void run() {
        for (int v : demand_vertices)
            descend(v, {v}, {}, {}, component_of(inst.graph, v));
    }

    // State: chosen internal demand vertices d0, excluded demand vertices d1,
    // z = closest minimum separator between the root and d1, y = component of
    // the root behind z.
    void descend(int root, vertex_set d0, vertex_set d1, vertex_set z, vertex_set y) {
        if (static_cast<int>(d0.size()) > d3) return;
        if (static_cast<int>(z.size()) > d) return;

        vertex_set undecided = set_difference(set_intersection(demand_vertices, y),
                                              set_union(d0, d1));
        if (undecided.empty()) {
            collected.insert(y);
            return;
        }
        int p = undecided.front();

        descend(root, set_insert(d0, p), d1, z, y);

        vertex_set d1_next = set_insert(d1, p);
        SeparatorResult sep = closest_min_separator(inst.graph, root, d1_next);
        descend(root, std::move(d0), std::move(d1_next), sep.cut, sep.component);
    }
};

} // namespace

std::vector<YSet> enumerate_y(const Instance& inst) {
    int d = inst.bound();
    YEnumerator walker{inst, inst.demands.positive_vertices(), cube(d), d, {}};
    walker.run();

    std::vector<YSet> out;
    for (const vertex_set& y : walker.collected) {
        vertex_set boundary = neighborhood(inst.graph, y);
        if (static_cast<int>(boundary.size()) > d) continue;
        vertex_set internal_demand = set_intersection(y, walker.demand_vertices);
        if (static_cast<int>(internal_demand.size()) > cube(d)) continue;
        if (!is_connected_subset(inst.graph, y)) continue;

        vertex_set outside_demand = set_difference(walker.demand_vertices, y);
        int witness = -1;
        for (int v : internal_demand) {
            SeparatorResult sep = closest_min_separator(inst.graph, v, outside_demand);
            if (sep.cut == boundary) {
                witness = v;
                break;
            }
        }
        if (witness < 0) continue;
        out.push_back(YSet{y, boundary, witness});
    }
    std::sort(out.begin(), out.end(), [](const YSet& a, const YSet& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

namespace {

// All (A, B, C) role assignments over the given boundary positions,
// enumerated base-4 so the order is stable.
std::vector<ConnectorTriple> all_triples(const std::vector<int>& positions) {
    std::vector<ConnectorTriple> out;
    long total = 1;
    for (std::size_t i = 0; i < positions.size(); ++i) total *= 4;
    for (long code = 0; code < total; ++code) {
        ConnectorTriple t;
        long rest = code;
        for (int pos : positions) {
            switch (rest % 4) {
                case 0: break;
                case 1: t.a.push_back(pos); break;
                case 2: t.b.push_back(pos); break;
                default: t.c.push_back(pos); break;
            }
            rest /= 4;
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Shared machinery for signature rows: hosts with boundary subsets removed,
// and memoized packing queries against them.
struct PieceContext {
    const Graph& h;
    std::vector<int> z_ids;  // position -> h id
    int d;

    std::vector<SubgraphResult> hosts; // indexed by removed-boundary mask
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> memo;

    PieceContext(const Graph& graph, std::span<const int> z, int bound)
        : h(graph), z_ids(z.begin(), z.end()), d(bound) {
        int zn = static_cast<int>(z_ids.size());
        hosts.resize(std::size_t{1} << zn);
        vertex_set all;
        for (int v = 0; v < h.vertex_count(); ++v) all.push_back(v);
        for (std::uint64_t mask = 0; mask < hosts.size(); ++mask) {
            vertex_set removed;
            for (int i = 0; i < zn; ++i)
                if (mask >> i & 1) removed.push_back(z_ids[i]);
            hosts[mask] = induced_subgraph(h, set_difference(all, normalized(removed)));
        }
    }

    std::uint64_t c_mask(const std::vector<int>& c_positions) const {
        std::uint64_t m = 0;
        for (int p : c_positions) m |= std::uint64_t{1} << p;
        return m;
    }

    // Does the piece minus the C-part of the triple admit the packing
    // (anchor, mult, A, targets)? Ids are h ids; anchor < 0 means absent.
    bool packing(std::uint64_t cmask, int anchor, int mult,
                 const std::vector<int>& a_positions, const vertex_set& targets_h) {
        // Exact memo key: (target mask) and (cmask | A mask | anchor | mult).
        std::pair<std::uint64_t, std::uint64_t> key;
        bool use_memo = h.vertex_count() <= 62 && mult < (1 << 15);
        if (use_memo) {
            std::uint64_t am = 0;
            for (int p : a_positions) am |= std::uint64_t{1} << p;
            key.first = mask_of(targets_h);
            key.second = cmask | (am << 16) |
                         (static_cast<std::uint64_t>(anchor + 1) << 32) |
                         (static_cast<std::uint64_t>(mult) << 48);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }

        const SubgraphResult& host = hosts[cmask];
        PackingQuery q;
        q.host = host.graph;
        if (anchor >= 0) q.v = host.from_original[anchor];
        q.multiplicity = mult;
        vertex_set a;
        for (int p : a_positions) a.push_back(host.from_original[z_ids[p]]);
        q.a = normalized(std::move(a));
        vertex_set b;
        for (int t : targets_h) b.push_back(host.from_original[t]);
        q.b = normalized(std::move(b));
        bool result = constrained_packing_exists(q);
        if (use_memo) memo.emplace(key, result);
        return result;
    }
};

void validate_piece(const Graph& h, std::span<const int> z, const DemandMap& phi) {
    int d = phi.bound();
    if (phi.size() != h.vertex_count())
        throw contract_error("demand map must cover the piece graph");
    if (static_cast<int>(z.size()) > d)
        throw contract_error("boundary larger than the demand bound");
    if (z.size() > 15) throw capacity_error("boundary too large for role enumeration");
    if (h.vertex_count() - static_cast<int>(z.size()) > 62)
        throw capacity_error("piece too large for partial-solution enumeration");
    vertex_set z_sorted = normalized(vertex_set(z.begin(), z.end()));
    if (z_sorted.size() != z.size()) throw contract_error("boundary repeats a vertex");
    for (int v : z) {
        if (!h.has_vertex(v)) throw contract_error("boundary vertex missing from the piece");
        if (phi[v] != 0) throw contract_error("boundary demands must be zero");
    }
    if (static_cast<int>(phi.positive_vertices().size()) > cube(d))
        throw contract_error("too many demand vertices in the piece");
}

} // namespace

Signature compute_signature(const Graph& h, std::span<const int> z, const DemandMap& phi) {
    validate_piece(h, z, phi);
    int d = phi.bound();
    int zn = static_cast<int>(z.size());
    int cap = cube(d) + d;

    vertex_set z_set = normalized(vertex_set(z.begin(), z.end()));
    vertex_set internal;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!set_contains(z_set, v)) internal.push_back(v);
    vertex_set demand_vertices = phi.positive_vertices();

    std::vector<int> all_positions(static_cast<std::size_t>(zn));
    for (int i = 0; i < zn; ++i) all_positions[i] = i;
    std::vector<ConnectorTriple> triples = all_triples(all_positions);

    PieceContext ctx(h, z, d);

    std::set<SignatureRecord> records;

    // Partial solutions inside the piece, by ascending size up to the cap.
    int internal_count = static_cast<int>(internal.size());
    std::vector<vertex_set> partials;
    for (int size = 0; size <= std::min(cap, internal_count); ++size) {
        std::vector<int> comb(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            vertex_set s_y;
            for (int idx : comb) s_y.push_back(internal[idx]);
            partials.push_back(std::move(s_y));
            int i = size - 1;
            while (i >= 0 && comb[i] == internal_count - (size - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    for (const vertex_set& s_y : partials) {
        int size = static_cast<int>(s_y.size());
        SignatureRecord record;
        record.partial_size = size;

        std::set<SatSet> requirement;
        for (int v : demand_vertices) {
            SatSet sat;
            if (set_contains(s_y, v)) {
                sat.triples = triples;
            } else {
                for (const ConnectorTriple& t : triples) {
                    vertex_set targets = s_y;
                    for (int p : t.b) targets.push_back(ctx.z_ids[p]);
                    targets = normalized(std::move(targets));
                    if (ctx.packing(ctx.c_mask(t.c), v, phi[v], t.a, targets))
                        sat.triples.push_back(t);
                }
            }
            requirement.insert(std::move(sat));
        }
        record.requirement.assign(requirement.begin(), requirement.end());

        for (const ConnectorTriple& t : triples) {
            vertex_set targets = s_y;
            for (int p : t.b) targets.push_back(ctx.z_ids[p]);
            targets = normalized(std::move(targets));
            if (ctx.packing(ctx.c_mask(t.c), -1, 0, t.a, targets))
                record.provided.push_back(t);
        }

        for (int zp = 0; zp < zn; ++zp) {
            for (const ConnectorTriple& t : triples) {
                if (std::count(t.a.begin(), t.a.end(), zp) ||
                    std::count(t.b.begin(), t.b.end(), zp) ||
                    std::count(t.c.begin(), t.c.end(), zp))
                    continue;
                for (int mult = 0; mult <= d; ++mult) {
                    vertex_set targets = s_y;
                    for (int p : t.b) targets.push_back(ctx.z_ids[p]);
                    targets = normalized(std::move(targets));
                    if (ctx.packing(ctx.c_mask(t.c), ctx.z_ids[zp], mult, t.a, targets))
                        record.provided_special.push_back(
                            SpecialConnector{zp, mult, t.a, t.b, t.c});
                }
            }
        }
        std::sort(record.provided_special.begin(), record.provided_special.end());

        records.insert(std::move(record));
    }

    Signature sig;
    sig.records.assign(records.begin(), records.end());
    return sig;
}

// ---------------------------------------------------------------------------
// Replacement search
// ---------------------------------------------------------------------------

std::optional<Replacement> find_replacement(const Graph& h, std::span<const int> z,
                                            const DemandMap& phi,
                                            const ReplacementLimits& caps) {
    validate_piece(h, z, phi);
    int d = phi.bound();
    int zn = static_cast<int>(z.size());
    int cap = cube(d) + d;
    int piece_size = h.vertex_count() - zn;

    // Record sizes run over 0..min(piece, cap) and signatures list one record
    // per size, so a smaller piece can only match when the original exceeds
    // the cap and the candidate reaches it.
    if (piece_size <= cap) return std::nullopt;
    int t_low = cap;
    int t_high = std::min(caps.max_new_vertices, piece_size - 1);
    if (t_low > t_high) return std::nullopt;

    Signature target = compute_signature(h, z, phi);

    // Boundary edges are fixed; candidates vary the rest.
    std::vector<std::pair<int, int>> boundary_edges;
    for (int i = 0; i < zn; ++i)
        for (int j = i + 1; j < zn; ++j)
            if (h.has_edge(z[i], z[j])) boundary_edges.emplace_back(i, j);

    std::vector<int> positions(static_cast<std::size_t>(zn));
    for (int i = 0; i < zn; ++i) positions[i] = i;

    long budget = caps.max_candidates;
    for (int t = t_low; t <= t_high; ++t) {
        // Edge slots: boundary-to-fresh first, then fresh pairs, both in
        // lexicographic order; slot b is bit b of the adjacency mask.
        std::vector<std::pair<int, int>> slots;
        for (int j = 0; j < t; ++j)
            for (int i = 0; i < zn; ++i) slots.emplace_back(i, zn + j);
        for (int j1 = 0; j1 < t; ++j1)
            for (int j2 = j1 + 1; j2 < t; ++j2) slots.emplace_back(zn + j1, zn + j2);
        if (slots.size() >= 63) return std::nullopt;

        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edge_list = boundary_edges;
            for (std::size_t b = 0; b < slots.size(); ++b)
                if (mask >> b & 1) edge_list.push_back(slots[b]);
            Graph candidate(zn + t, edge_list);

            std::vector<int> demand(static_cast<std::size_t>(t), 0);
            for (;;) {
                if (budget-- <= 0) return std::nullopt;
                int positive = 0;
                for (int val : demand)
                    if (val > 0) ++positive;
                if (positive <= cube(d)) {
                    std::vector<int> full(static_cast<std::size_t>(zn + t), 0);
                    for (int j = 0; j < t; ++j) full[zn + j] = demand[j];
                    DemandMap cand_phi(full, d);
                    if (compute_signature(candidate, positions, cand_phi) == target)
                        return Replacement{candidate, cand_phi};
                }
                // Odometer over demand vectors, first vertex most significant.
                int idx = t - 1;
                while (idx >= 0 && demand[idx] == d) demand[idx--] = 0;
                if (idx < 0) break;
                ++demand[idx];
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule 4, torso, pipeline
// ---------------------------------------------------------------------------

std::optional<Instance> apply_rule4(const Instance& inst, const YSet& y,
                                    const ReplacementLimits& caps) {
    const Graph& g = inst.graph;
    vertex_set piece_and_boundary = set_union(y.vertices, y.boundary);
    SubgraphResult h = induced_subgraph(g, piece_and_boundary);

    std::vector<int> z_h;
    for (int zv : y.boundary) z_h.push_back(h.from_original[zv]);

    std::vector<int> phi_values(static_cast<std::size_t>(h.graph.vertex_count()), 0);
    for (int v : y.vertices) phi_values[h.from_original[v]] = inst.demands[v];
    DemandMap phi(phi_values, inst.bound());

    std::optional<Replacement> replacement = find_replacement(h.graph, z_h, phi, caps);
    if (!replacement) return std::nullopt;

    int zn = static_cast<int>(y.boundary.size());
    int fresh = replacement->graph.vertex_count() - zn;
    if (fresh >= static_cast<int>(y.vertices.size())) return std::nullopt;

    vertex_set all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    SubgraphResult rest = induced_subgraph(g, set_difference(all, y.vertices));

    std::vector<int> z_rest;
    for (int zv : y.boundary) z_rest.push_back(rest.from_original[zv]);
    std::vector<int> z_cand(static_cast<std::size_t>(zn));
    for (int i = 0; i < zn; ++i) z_cand[i] = i;

    GlueResult glued = glue(rest.graph, z_rest, replacement->graph, z_cand);

    std::vector<int> demand(static_cast<std::size_t>(glued.graph.vertex_count()), 0);
    for (int v = 0; v < rest.graph.vertex_count(); ++v)
        demand[glued.left_map[v]] = inst.demands[rest.to_original[v]];
    for (int j = 0; j < fresh; ++j)
        demand[glued.right_map[zn + j]] = replacement->demands[zn + j];

    return make_instance(glued.graph, DemandMap(demand, inst.bound()), inst.budget);
}

SubgraphResult torso(const Graph& g, std::span<const int> w) {
    vertex_set keep = normalized(vertex_set(w.begin(), w.end()));
    SubgraphResult base = induced_subgraph(g, keep);

    std::set<std::pair<int, int>> edge_set;
    for (auto e : base.graph.edges()) edge_set.insert(e);

    // Components outside w induce shortcut cliques on their neighborhoods.
    vertex_set all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    vertex_set outside = set_difference(all, keep);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : outside) {
        if (seen[v]) continue;
        vertex_set comp = component_of(g, v, keep);
        for (int u : comp) seen[u] = 1;
        vertex_set attach = neighborhood(g, comp);
        for (std::size_t i = 0; i < attach.size(); ++i)
            for (std::size_t j = i + 1; j < attach.size(); ++j) {
                int a = base.from_original[attach[i]];
                int b = base.from_original[attach[j]];
                edge_set.insert({std::min(a, b), std::max(a, b)});
            }
    }

    SubgraphResult out;
    out.graph = Graph(static_cast<int>(keep.size()),
                      std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    out.to_original = keep;
    out.from_original = base.from_original;
    return out;
}

KernelReport kernelize(const Instance& inst, const ReplacementLimits& caps) {
    KernelReport report;
    Instance current = inst;

    std::vector<YSet> pieces;
    for (;;) {
        current = exhaust_rule1(current).first;
        if (rule2_check(current) == Rule2Verdict::rejected) {
            report.rejected = true;
            report.output = current;
            return report;
        }
        pieces = enumerate_y(current);

        bool applied = false;
        if (current.bound() <= caps.full_kernel_d) {
            for (const YSet& y : pieces) {
                std::optional<Instance> next = apply_rule4(current, y, caps);
                if (next) {
                    int new_size = next->graph.vertex_count() - current.graph.vertex_count() +
                                   static_cast<int>(y.vertices.size());
                    report.replacements.push_back({y.vertices, new_size});
                    current = std::move(*next);
                    applied = true;
                    break;
                }
            }
        }
        if (!applied) break;
    }

    vertex_set w = current.demands.positive_vertices();
    for (const YSet& y : pieces)
        w = set_union(w, closed_neighborhood(current.graph, y.vertices));

    SubgraphResult shrunk = torso(current.graph, w);
    std::vector<int> demand(static_cast<std::size_t>(shrunk.graph.vertex_count()), 0);
    for (int v = 0; v < shrunk.graph.vertex_count(); ++v)
        demand[v] = current.demands[shrunk.to_original[v]];

    report.output = make_instance(shrunk.graph, DemandMap(demand, current.bound()),
                                  current.budget);
    report.torso_set = w;
    report.ysets = pieces;
    return report;
}

} // namespace vecon
