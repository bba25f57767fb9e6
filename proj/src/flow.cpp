#include "vecon/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace vecon {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit-capacity vertex-split flow network. Vertex u becomes in(u) -> out(u)
// with capacity 1 (the source and designated vertices get kInf); every edge
// becomes two infinite arcs between out/in copies. BFS augmenting paths:
// capacities are tiny, so the augmentation count stays small.
class VertexFlow {
public:
    VertexFlow(const Graph& g, int source, std::span<const int> sinks,
               std::span<const int> infinite)
        : g_(g), source_(source) {
        int n = g.vertex_count();
        node_count_ = 2 * n + 1;
        sink_node_ = 2 * n;
        head_.assign(static_cast<std::size_t>(node_count_), -1);

        std::vector<char> unbounded(static_cast<std::size_t>(n), 0);
        unbounded[source] = 1;
        for (int v : infinite) unbounded[v] = 1;

        for (int v = 0; v < n; ++v)
            add_arc(in(v), out(v), v == source ? 0 : (unbounded[v] ? kInf : 1));
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                add_arc(out(u), in(v), kInf);
        for (int s : sinks) add_arc(out(s), sink_node_, kInf);
    }

    int max_flow(int stop_at) {
        int total = 0;
        while (total < stop_at && augment()) ++total;
        return total;
    }

    // The separator closest to the source: vertices whose in-copy is
    // residual-reachable from the source but whose out-copy is not.
    vertex_set closest_cut() {
        std::vector<char> reach = residual_reachable();
        vertex_set cut;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (v != source_ && reach[in(v)] && !reach[out(v)]) cut.push_back(v);
        return cut;
    }

private:
    struct Arc {
        int to;
        int next;
        int cap;
    };

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    bool augment() {
        std::vector<int> pred_arc(static_cast<std::size_t>(node_count_), -1);
        std::vector<char> seen(static_cast<std::size_t>(node_count_), 0);
        std::queue<int> queue;
        int start = out(source_);
        queue.push(start);
        seen[start] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            if (cur == sink_node_) break;
            for (int a = head_[cur]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap <= 0 || seen[arcs_[a].to]) continue;
                seen[arcs_[a].to] = 1;
                pred_arc[arcs_[a].to] = a;
                queue.push(arcs_[a].to);
            }
        }
        if (!seen[sink_node_]) return false;
        for (int node = sink_node_; node != start;) {
            int a = pred_arc[node];
            arcs_[a].cap -= 1;
            arcs_[a ^ 1].cap += 1;
            node = arcs_[a ^ 1].to;
        }
        return true;
    }

    std::vector<char> residual_reachable() {
        std::vector<char> seen(static_cast<std::size_t>(node_count_), 0);
        std::queue<int> queue;
        int start = out(source_);
        queue.push(start);
        seen[start] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            for (int a = head_[cur]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap <= 0 || seen[arcs_[a].to]) continue;
                seen[arcs_[a].to] = 1;
                queue.push(arcs_[a].to);
            }
        }
        return seen;
    }

    const Graph& g_;
    int source_;
    int node_count_;
    int sink_node_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

void check_separator_inputs(const Graph& g, int v, std::span<const int> sinks) {
    if (!g.has_vertex(v)) throw input_error("unknown source vertex");
    for (int s : sinks) {
        if (!g.has_vertex(s)) throw input_error("unknown sink vertex");
        if (s == v) throw input_error("source must not be a sink");
    }
    if (!is_normalized(sinks)) throw input_error("sink set must be sorted and unique");
}

SeparatorResult closest_separator_impl(const Graph& g, int v, std::span<const int> sinks) {
    check_separator_inputs(g, v, sinks);
    SeparatorResult res;
    res.source = v;
    res.sinks.assign(sinks.begin(), sinks.end());
    if (sinks.empty()) {
        res.degenerate = true;
        res.component = component_of(g, v);
        return res;
    }
    VertexFlow flow(g, v, sinks, {});
    flow.max_flow(kInf);
    res.cut = flow.closest_cut();
    res.component = component_of(g, v, res.cut);
    return res;
}

} // namespace

SeparatorResult min_vs_separator(const Graph& g, int v, std::span<const int> sinks) {
    return closest_separator_impl(g, v, sinks);
}

SeparatorResult closest_min_separator(const Graph& g, int v, std::span<const int> sinks) {
    return closest_separator_impl(g, v, sinks);
}

int vs_connectivity(const Graph& g, int v, std::span<const int> sinks, int stop_at) {
    check_separator_inputs(g, v, sinks);
    if (sinks.empty() || stop_at <= 0) return 0;
    VertexFlow flow(g, v, sinks, {});
    return flow.max_flow(stop_at);
}

bool is_closest(const Graph& g, int v, std::span<const int> c) {
    if (!g.has_vertex(v)) throw input_error("unknown vertex");
    if (!is_normalized(c)) throw input_error("separator must be sorted and unique");
    for (int x : c) {
        if (!g.has_vertex(x)) throw input_error("unknown vertex in separator");
        if (x == v) throw input_error("separator must not contain the source");
    }
    if (c.empty()) return true;

    int size = static_cast<int>(c.size());
    VertexFlow base(g, v, c, {});
    if (base.max_flow(size + 1) != size) return false;

    // C is the unique minimum v,C-separator iff every member lies in every
    // minimum separator: forcing a member uncuttable must raise the cut size.
    for (int member : c) {
        vertex_set forced{member};
        VertexFlow flow(g, v, c, forced);
        if (flow.max_flow(size + 1) <= size) return false;
    }
    return true;
}

namespace {

// Packing feasibility on a host with blocked vertices. Mirrors the flow
// reduction: drop A ∩ B (length-zero paths), add `mult` clones of v wired to
// N(v), connect a super-source to A and the clones, a super-sink to B.
bool packing_flow(const Graph& host, std::optional<int> v, int mult,
                  std::span<const int> a, std::span<const int> b,
                  std::span<const int> blocked) {
    vertex_set common = set_intersection(a, b);
    vertex_set sources = set_difference(a, common);
    vertex_set targets = set_difference(b, common);
    int required = mult + static_cast<int>(sources.size());
    if (required == 0) return true;

    int n = host.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int x : blocked) gone[x] = 1;
    for (int x : common) gone[x] = 1;

    // Node layout: vertex u -> in 2u, out 2u+1; clone j of v -> a pair after
    // the vertex pairs; then super-source and super-sink.
    int clone_base = 2 * n;
    int s_node = clone_base + 2 * mult;
    int t_node = s_node + 1;
    int node_count = t_node + 1;

    struct Arc {
        int to;
        int next;
        int cap;
    };
    std::vector<int> head(static_cast<std::size_t>(node_count), -1);
    std::vector<Arc> arcs;
    auto add_arc = [&](int from, int to, int cap) {
        arcs.push_back({to, head[from], cap});
        head[from] = static_cast<int>(arcs.size()) - 1;
        arcs.push_back({from, head[to], 0});
        head[to] = static_cast<int>(arcs.size()) - 1;
    };

    for (int u = 0; u < n; ++u)
        if (!gone[u]) add_arc(2 * u, 2 * u + 1, 1);
    for (int u = 0; u < n; ++u) {
        if (gone[u]) continue;
        for (int w : host.neighbors(u))
            if (!gone[w]) add_arc(2 * u + 1, 2 * w, kInf);
    }
    if (mult > 0) {
        for (int j = 0; j < mult; ++j) {
            int cin = clone_base + 2 * j;
            add_arc(cin, cin + 1, 1);
            add_arc(s_node, cin, kInf);
            for (int w : host.neighbors(*v))
                if (!gone[w]) add_arc(cin + 1, 2 * w, kInf);
        }
    }
    for (int src : sources) add_arc(s_node, 2 * src, kInf);
    for (int tgt : targets) add_arc(2 * tgt + 1, t_node, kInf);

    int flow = 0;
    std::vector<int> pred(static_cast<std::size_t>(node_count), -1);
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    while (flow < required) {
        std::fill(pred.begin(), pred.end(), -1);
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<int> queue;
        queue.push(s_node);
        seen[s_node] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            if (cur == t_node) break;
            for (int arc = head[cur]; arc >= 0; arc = arcs[arc].next) {
                if (arcs[arc].cap <= 0 || seen[arcs[arc].to]) continue;
                seen[arcs[arc].to] = 1;
                pred[arcs[arc].to] = arc;
                queue.push(arcs[arc].to);
            }
        }
        if (!seen[t_node]) return false;
        for (int node = t_node; node != s_node;) {
            int arc = pred[node];
            arcs[arc].cap -= 1;
            arcs[arc ^ 1].cap += 1;
            node = arcs[arc ^ 1].to;
        }
        ++flow;
    }
    return true;
}

} // namespace

bool constrained_packing_exists(const PackingQuery& q) {
    const Graph& host = q.host;
    if (q.multiplicity < 0) throw input_error("multiplicity must be nonnegative");
    if (!q.v.has_value() && q.multiplicity > 0)
        throw input_error("a special vertex is required when multiplicity > 0");
    if (q.v.has_value() && !host.has_vertex(*q.v))
        throw input_error("special vertex missing from host graph");
    if (!is_normalized(q.a) || !is_normalized(q.b) || !is_normalized(q.forbidden))
        throw input_error("packing sets must be sorted and unique");
    for (int x : q.a)
        if (!host.has_vertex(x)) throw input_error("unknown vertex in A");
    for (int x : q.b)
        if (!host.has_vertex(x)) throw input_error("unknown vertex in B");
    for (int x : q.forbidden)
        if (!host.has_vertex(x)) throw input_error("unknown vertex in forbidden set");
    if (!set_intersection(q.a, q.forbidden).empty() ||
        !set_intersection(q.b, q.forbidden).empty())
        throw input_error("forbidden set overlaps packing endpoints");
    if (q.v.has_value()) {
        if (set_contains(q.a, *q.v) || set_contains(q.b, *q.v) ||
            set_contains(q.forbidden, *q.v))
            throw input_error("special vertex may not appear in A, B, or the forbidden set");
    }
    return packing_flow(host, q.v, q.multiplicity, q.a, q.b, q.forbidden);
}

bool verify_solution(const Instance& inst, std::span<const int> s) {
    if (!is_normalized(s)) throw input_error("solution must be a sorted vertex set");
    for (int x : s)
        if (!inst.graph.has_vertex(x)) throw input_error("unknown vertex in solution");
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        int need = inst.demands[v];
        if (need == 0 || set_contains(s, v)) continue;
        vertex_set sinks = set_difference(s, vertex_set{v});
        if (vs_connectivity(inst.graph, v, sinks, need) < need) return false;
    }
    return true;
}

namespace {

// Map a vertex set through from_original, dropping absent members.
vertex_set remap_present(std::span<const int> xs, const std::vector<int>& from_original) {
    vertex_set out;
    for (int x : xs)
        if (from_original[x] >= 0) out.push_back(from_original[x]);
    return normalized(std::move(out));
}

// Same, but every member must be present.
vertex_set remap_all(std::span<const int> xs, const std::vector<int>& from_original) {
    vertex_set out;
    for (int x : xs) {
        if (from_original[x] < 0) throw contract_error("vertex unexpectedly missing after split");
        out.push_back(from_original[x]);
    }
    return normalized(std::move(out));
}

} // namespace

bool split_packing_check(const Graph& g, const Separation& sep, int v,
                         std::span<const int> s, int dv) {
    validate_separation(g, sep);
    if (!g.has_vertex(v)) throw input_error("unknown vertex");
    if (dv < 0) throw input_error("demand must be nonnegative");
    if (!is_normalized(s)) throw input_error("target set must be sorted and unique");
    if (set_contains(s, v)) throw input_error("target set must not contain the vertex");

    vertex_set z = separation_boundary(sep);
    vertex_set z_rest = set_erase(z, v);
    if (z_rest.size() > 15)
        throw capacity_error("separator too large for partition enumeration");
    bool v_in_t = set_contains(sep.t, v);
    bool v_in_u = set_contains(sep.u, v);

    vertex_set s_in_u = set_intersection(s, sep.u);
    vertex_set s_not_u = set_difference(s, sep.u);

    int parts = static_cast<int>(z_rest.size());
    std::vector<int> role(static_cast<std::size_t>(parts), 0);

    // Every assignment of boundary vertices to roles A/B/C/D, base-4.
    long total = 1;
    for (int i = 0; i < parts; ++i) total *= 4;
    for (long code = 0; code < total; ++code) {
        long rest = code;
        vertex_set a, b, c, d;
        for (int i = 0; i < parts; ++i) {
            switch (rest % 4) {
                case 0: a.push_back(z_rest[i]); break;
                case 1: b.push_back(z_rest[i]); break;
                case 2: c.push_back(z_rest[i]); break;
                default: d.push_back(z_rest[i]); break;
            }
            rest /= 4;
        }

        SubgraphResult t_side = induced_subgraph(g, set_difference(sep.t, c));
        SubgraphResult u_side = induced_subgraph(g, set_difference(sep.u, d));

        int lo = 0, hi = dv;
        if (v_in_t && !v_in_u) lo = hi = dv;
        if (v_in_u && !v_in_t) lo = hi = 0;

        for (int mult = lo; mult <= hi; ++mult) {
            PackingQuery left;
            left.host = t_side.graph;
            if (v_in_t) left.v = t_side.from_original[v];
            left.multiplicity = mult;
            left.a = remap_all(a, t_side.from_original);
            left.b = remap_all(set_union(b, s_not_u), t_side.from_original);
            if (!constrained_packing_exists(left)) continue;

            PackingQuery right;
            right.host = u_side.graph;
            if (v_in_u) right.v = u_side.from_original[v];
            right.multiplicity = dv - mult;
            right.a = remap_all(b, u_side.from_original);
            right.b = remap_present(set_union(a, s_in_u), u_side.from_original);
            if (constrained_packing_exists(right)) return true;
        }
    }
    return false;
}

} // namespace vecon
