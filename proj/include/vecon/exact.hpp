#ifndef VECON_EXACT_HPP
#define VECON_EXACT_HPP

#include <span>

#include "vecon/graph.hpp"

namespace vecon {

inline constexpr int kDefaultExactCap = 16;

/// Optimum value with the lexicographically first witness of that size.
struct ExactResult {
    int opt = 0;
    vertex_set witness;
};

/// Exhaustive minimum vector-connectivity set, searched in ascending size
/// with lexicographic subsets. Desk-scale ground truth; throws
/// capacity_error past the cap.
ExactResult brute_force_opt(const Instance& inst, int cap = kDefaultExactCap);

/// One minimal connected set whose internal demand exceeds its boundary.
struct XSet {
    vertex_set vertices;
    int witness = -1;       ///< lowest-id vertex with demand > |N(X)|
    int boundary_size = 0;  ///< |N(X)|
};

/// The family of all inclusion-minimal connected X with some vertex of
/// demand exceeding |N(X)|. Solutions are exactly the hitting sets of this
/// family. Ordered by (size, vertex list).
struct XFamily {
    std::vector<XSet> sets;
};

XFamily enumerate_x(const Instance& inst, int cap = kDefaultExactCap);

/// Backtracking search for r paths from v to distinct vertices of S that
/// pairwise overlap only in v. Deliberately flow-free: this is the
/// independent oracle the flow routines are validated against.
bool packing_oracle(const Graph& g, int v, std::span<const int> s, int r,
                    int cap = kDefaultExactCap);

} // namespace vecon

#endif
