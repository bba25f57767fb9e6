#ifndef VECON_APPROX_HPP
#define VECON_APPROX_HPP

#include "vecon/graph.hpp"

namespace vecon {

/// One round of the local-ratio loop: the vertex picked, the cut added with
/// it, and the partial solution size afterwards.
struct ApproxRound {
    int picked = -1;
    vertex_set cut;
    int solution_size_after = 0;
    int demands_open = 0; ///< nonzero-demand vertices left after forgetting
};

struct ApproxTrace {
    vertex_set solution;
    std::vector<ApproxRound> rounds;
};

/// Local-ratio approximation: repeatedly forget satisfiable demands relative
/// to the partial solution, then commit a minimum-demand vertex together
/// with its closest separator. The result is feasible and at most d times
/// the optimum when demands are bounded by d.
vertex_set approximate_d(const Instance& inst);
ApproxTrace approximate_d_traced(const Instance& inst);

/// Guessing wrapper for unbounded demands: for every guess of the optimum,
/// seed the partial solution with all vertices whose demand exceeds the
/// guess, run the round loop, and keep the smallest feasible result. The
/// returned set has size at most opt^2.
vertex_set approximate_opt_squared(const Instance& inst, int threads = 1);

} // namespace vecon

#endif
