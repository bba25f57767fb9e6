#ifndef VECON_GRAPH_HPP
#define VECON_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vecon/error.hpp"
#include "vecon/vset.hpp"

namespace vecon {

/// Undirected simple graph on dense vertex ids 0..n-1.
///
/// Adjacency is stored as sorted neighbor vectors, which gives a canonical
/// serialization and reproducible iteration everywhere. Instances are
/// immutable after construction; derived graphs are new values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Optional external names; empty when unset.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
    std::vector<std::string> labels_;
};

/// Induced subgraph together with the id remapping (new id -> old id).
struct SubgraphResult {
    Graph graph;
    vertex_set to_original;

    /// Old id -> new id, or -1 when absent. Sized to the host graph.
    std::vector<int> from_original;
};

/// G[X]: vertices of X, edges of g with both ends in X. X may be unsorted;
/// ids in the result follow the sorted order of X.
SubgraphResult induced_subgraph(const Graph& g, std::span<const int> x);

/// Open neighborhood N(X): vertices outside X adjacent to some vertex of X.
vertex_set neighborhood(const Graph& g, std::span<const int> x);

/// Closed neighborhood N[X] = X ∪ N(X).
vertex_set closed_neighborhood(const Graph& g, std::span<const int> x);

/// Connected component of v in g - removed.
vertex_set component_of(const Graph& g, int v, std::span<const int> removed = {});

/// All connected components, each sorted, ordered by smallest member.
std::vector<vertex_set> connected_components(const Graph& g);

bool is_connected_subset(const Graph& g, std::span<const int> x);

/// Result of glueing two graphs along a shared ordered boundary.
struct GlueResult {
    Graph graph;
    std::vector<int> left_map;  ///< g1 id -> glued id
    std::vector<int> right_map; ///< g2 id -> glued id
};

/// Glues g1 and g2, identifying z1[i] with z2[i]. The boundary is an ordered
/// list, not a set: position i names the same glued vertex on both sides.
/// Requires the two boundary-induced subgraphs to coincide position-wise.
/// g1 keeps its ids; g2's non-boundary vertices are appended in id order.
GlueResult glue(const Graph& g1, std::span<const int> z1,
                const Graph& g2, std::span<const int> z2);

/// Per-vertex demands with a declared upper bound.
class DemandMap {
public:
    DemandMap() = default;
    DemandMap(std::vector<int> values, int bound);

    int size() const { return static_cast<int>(values_.size()); }
    int bound() const { return bound_; }
    int operator[](int v) const;
    const std::vector<int>& values() const { return values_; }

    /// D: all vertices with nonzero demand, ascending.
    vertex_set positive_vertices() const;

    /// Copy with one demand changed.
    DemandMap with_demand(int v, int value) const;

    bool operator==(const DemandMap&) const = default;

private:
    std::vector<int> values_;
    int bound_ = 0;
};

/// A problem instance: graph, demands, and the solution budget.
struct Instance {
    Graph graph;
    DemandMap demands;
    int budget = 0;

    int bound() const { return demands.bound(); }
};

Instance make_instance(Graph g, DemandMap demands, int budget);

/// A separation (T, U): T ∪ U = V and no edge joins T∖U with U∖T.
struct Separation {
    vertex_set t;
    vertex_set u;
};

/// Throws input_error unless sep is a valid separation of g.
void validate_separation(const Graph& g, const Separation& sep);

/// The separator Z = T ∩ U, sorted.
vertex_set separation_boundary(const Separation& sep);

} // namespace vecon

#endif
