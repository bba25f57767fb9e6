#ifndef VECON_FLOW_HPP
#define VECON_FLOW_HPP

#include <optional>
#include <span>

#include "vecon/graph.hpp"

namespace vecon {

/// A v,S-separator together with the component it cuts off.
///
/// C excludes v but may contain vertices of S. R is the connected component
/// of v in g - C. For a minimum separator N(R) = C.
struct SeparatorResult {
    int source = -1;
    vertex_set sinks;
    vertex_set cut;
    vertex_set component;
    bool degenerate = false; ///< set when S was empty

    int size() const { return static_cast<int>(cut.size()); }
};

/// Minimum-cardinality v,S-separator. The source has unbounded capacity, all
/// other vertices unit capacity, so the size equals the maximum number of
/// paths from v to distinct vertices of S that overlap only in v.
/// An empty S yields size 0 with an empty cut, flagged degenerate.
SeparatorResult min_vs_separator(const Graph& g, int v, std::span<const int> sinks);

/// Among all minimum v,S-separators, the unique one whose component of v is
/// smallest. Extracted from the residual frontier after max flow.
SeparatorResult closest_min_separator(const Graph& g, int v, std::span<const int> sinks);

/// Maximum number of v-independent v->S paths, capped at stop_at.
/// Cheaper than min_vs_separator when only a threshold is needed.
int vs_connectivity(const Graph& g, int v, std::span<const int> sinks, int stop_at);

/// True iff no v,C-separator other than C has size at most |C|.
bool is_closest(const Graph& g, int v, std::span<const int> c);

/// A constrained path-packing query: does host - forbidden contain
/// multiplicity + |A| paths from A ∪ {v} to B, pairwise vertex-disjoint
/// except at v, where members of A ∩ B count as length-zero paths?
struct PackingQuery {
    Graph host;
    std::optional<int> v;    ///< may be absent only when multiplicity == 0
    int multiplicity = 0;
    vertex_set a;
    vertex_set b;
    vertex_set forbidden;    ///< removed from the host before packing
};

bool constrained_packing_exists(const PackingQuery& q);

/// True iff every vertex with positive demand is in S or has demand-many
/// vertex-disjoint paths to distinct vertices of S.
bool verify_solution(const Instance& inst, std::span<const int> s);

/// Decides dv-path-packing existence from v to S by splitting the search
/// across a separation: tries every multiplicity split and every partition
/// of the boundary into source/sink/forbidden roles on the two sides.
bool split_packing_check(const Graph& g, const Separation& sep, int v,
                         std::span<const int> s, int dv);

} // namespace vecon

#endif
