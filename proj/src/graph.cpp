#include "vecon/graph.hpp"

#include <algorithm>
#include <queue>

namespace vecon {

Graph::Graph(int n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loops are not allowed");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw input_error("duplicate edge");
    }
    edge_count_ = static_cast<int>(edge_list.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw input_error("unknown vertex id");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) throw input_error("unknown vertex id");
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
        throw input_error("label map must cover every vertex");
    labels_ = std::move(labels);
}

namespace {

void check_vertices(const Graph& g, std::span<const int> x) {
    for (int v : x)
        if (!g.has_vertex(v)) throw input_error("unknown vertex id in vertex set");
}

} // namespace

SubgraphResult induced_subgraph(const Graph& g, std::span<const int> x) {
    check_vertices(g, x);
    vertex_set keep = normalized(vertex_set(x.begin(), x.end()));

    SubgraphResult out;
    out.from_original.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        out.from_original[keep[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edge_list;
    for (int old_u : keep) {
        int new_u = out.from_original[old_u];
        for (int old_v : g.neighbors(old_u)) {
            int new_v = out.from_original[old_v];
            if (new_v >= 0 && new_u < new_v) edge_list.emplace_back(new_u, new_v);
        }
    }
    out.graph = Graph(static_cast<int>(keep.size()), edge_list);
    out.to_original = std::move(keep);
    return out;
}

vertex_set neighborhood(const Graph& g, std::span<const int> x) {
    check_vertices(g, x);
    vertex_set inside = normalized(vertex_set(x.begin(), x.end()));
    vertex_set out;
    for (int v : inside)
        for (int u : g.neighbors(v))
            if (!set_contains(inside, u)) out.push_back(u);
    return normalized(std::move(out));
}

vertex_set closed_neighborhood(const Graph& g, std::span<const int> x) {
    vertex_set inside = normalized(vertex_set(x.begin(), x.end()));
    return set_union(inside, neighborhood(g, inside));
}

vertex_set component_of(const Graph& g, int v, std::span<const int> removed) {
    if (!g.has_vertex(v)) throw input_error("unknown vertex id");
    if (set_contains(removed, v)) throw input_error("component root was removed");
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int r : removed) {
        if (!g.has_vertex(r)) throw input_error("unknown vertex id in removed set");
        blocked[r] = 1;
    }
    vertex_set comp;
    std::queue<int> queue;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    queue.push(v);
    seen[v] = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        comp.push_back(cur);
        for (int nb : g.neighbors(cur)) {
            if (!seen[nb] && !blocked[nb]) {
                seen[nb] = 1;
                queue.push(nb);
            }
        }
    }
    return normalized(std::move(comp));
}

std::vector<vertex_set> connected_components(const Graph& g) {
    std::vector<vertex_set> out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        vertex_set comp = component_of(g, v);
        for (int u : comp) seen[u] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected_subset(const Graph& g, std::span<const int> x) {
    if (x.empty()) return false;
    vertex_set inside = normalized(vertex_set(x.begin(), x.end()));
    check_vertices(g, inside);
    // BFS restricted to `inside`.
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : inside) member[v] = 1;
    std::queue<int> queue;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    queue.push(inside.front());
    seen[inside.front()] = 1;
    std::size_t count = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        ++count;
        for (int nb : g.neighbors(cur))
            if (member[nb] && !seen[nb]) {
                seen[nb] = 1;
                queue.push(nb);
            }
    }
    return count == inside.size();
}

GlueResult glue(const Graph& g1, std::span<const int> z1,
                const Graph& g2, std::span<const int> z2) {
    if (z1.size() != z2.size())
        throw input_error("boundary lists must have equal length");
    check_vertices(g1, z1);
    check_vertices(g2, z2);
    if (normalized(vertex_set(z1.begin(), z1.end())).size() != z1.size() ||
        normalized(vertex_set(z2.begin(), z2.end())).size() != z2.size())
        throw input_error("boundary lists must not repeat vertices");
    for (std::size_t i = 0; i < z1.size(); ++i)
        for (std::size_t j = i + 1; j < z1.size(); ++j)
            if (g1.has_edge(z1[i], z1[j]) != g2.has_edge(z2[i], z2[j]))
                throw contract_error("boundary-induced subgraphs differ");

    GlueResult out;
    out.left_map.resize(static_cast<std::size_t>(g1.vertex_count()));
    for (int v = 0; v < g1.vertex_count(); ++v) out.left_map[v] = v;

    out.right_map.assign(static_cast<std::size_t>(g2.vertex_count()), -1);
    for (std::size_t i = 0; i < z2.size(); ++i) out.right_map[z2[i]] = z1[i];
    int next = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (out.right_map[v] < 0) out.right_map[v] = next++;

    std::vector<std::pair<int, int>> edge_list = g1.edges();
    for (auto [u, v] : g2.edges()) {
        int mu = out.right_map[u];
        int mv = out.right_map[v];
        if (mu > mv) std::swap(mu, mv);
        // Shared boundary edges already exist on the g1 side.
        if (mv < g1.vertex_count() && g1.has_edge(mu, mv)) continue;
        edge_list.emplace_back(mu, mv);
    }
    out.graph = Graph(next, edge_list);
    return out;
}

DemandMap::DemandMap(std::vector<int> values, int bound) : values_(std::move(values)), bound_(bound) {
    if (bound_ < 0) throw input_error("demand bound must be nonnegative");
    for (int d : values_)
        if (d < 0 || d > bound_) throw input_error("demand outside 0..bound");
}

int DemandMap::operator[](int v) const {
    if (v < 0 || v >= size()) throw input_error("unknown vertex id in demand map");
    return values_[v];
}

vertex_set DemandMap::positive_vertices() const {
    vertex_set out;
    for (int v = 0; v < size(); ++v)
        if (values_[v] > 0) out.push_back(v);
    return out;
}

DemandMap DemandMap::with_demand(int v, int value) const {
    if (v < 0 || v >= size()) throw input_error("unknown vertex id in demand map");
    std::vector<int> copy = values_;
    copy[v] = value;
    return DemandMap(std::move(copy), bound_);
}

Instance make_instance(Graph g, DemandMap demands, int budget) {
    if (demands.size() != g.vertex_count())
        throw input_error("demand map must cover exactly the vertex set");
    if (budget < 0) throw input_error("budget must be nonnegative");
    return Instance{std::move(g), std::move(demands), budget};
}

void validate_separation(const Graph& g, const Separation& sep) {
    if (!is_normalized(sep.t) || !is_normalized(sep.u))
        throw input_error("separation sides must be sorted vertex sets");
    check_vertices(g, sep.t);
    check_vertices(g, sep.u);
    if (static_cast<int>(set_union(sep.t, sep.u).size()) != g.vertex_count())
        throw input_error("separation sides must cover the vertex set");
    vertex_set t_only = set_difference(sep.t, sep.u);
    vertex_set u_only = set_difference(sep.u, sep.t);
    for (int v : t_only)
        for (int nb : g.neighbors(v))
            if (set_contains(u_only, nb))
                throw input_error("edge crosses the separation");
}

vertex_set separation_boundary(const Separation& sep) {
    return set_intersection(sep.t, sep.u);
}

} // namespace vecon
