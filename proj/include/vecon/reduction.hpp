#ifndef VECON_REDUCTION_HPP
#define VECON_REDUCTION_HPP

#include <span>
#include <utility>

#include "vecon/graph.hpp"

namespace vecon {

/// The region of a demand vertex: the closest minimum separator cutting it
/// off from the other vertices of at least the same demand, and the
/// component it bounds.
struct Region {
    int vertex = -1;
    vertex_set cut;       ///< C(v)
    vertex_set component; ///< R(v), contains v
};

struct TraceStep {
    int rule = 0;
    int vertex = -1;
    int demand_before = 0;
};

/// Record of a preprocessing run. Demands only ever decrease.
struct ReductionTrace {
    std::vector<TraceStep> steps;
    DemandMap final_demands;
    bool rejected = false;
};

/// Rule 1: the demand of v may be forgotten when v has demand-many
/// vertex-disjoint paths to distinct other vertices of at least that demand.
bool rule1_applicable(const Instance& inst, int v);

/// Applies Rule 1 until fixpoint, zeroing demands in ascending
/// (demand, vertex id) order. The feasible-solution family is unchanged.
std::pair<Instance, ReductionTrace> exhaust_rule1(const Instance& inst);

enum class Rule2Verdict { accepted, rejected };

/// Rule 2: a Rule-1-reduced instance with more than d^2 * k nonzero-demand
/// vertices cannot have a solution within budget. Throws contract_error when
/// the instance is not Rule-1-reduced.
Rule2Verdict rule2_check(const Instance& inst);

/// Rule 3: Rule 1 relative to a partial solution. Members of s0 count as
/// targets regardless of their demand, and vertices already in s0 qualify
/// outright.
bool rule3_applicable(const Instance& inst, std::span<const int> s0, int v);

/// Applies Rule 3 until fixpoint, same ordering as exhaust_rule1.
std::pair<Instance, ReductionTrace> exhaust_rule3(const Instance& inst,
                                                  std::span<const int> s0);

/// C(v) and R(v) for a demand vertex of a Rule-1-reduced instance; the cut
/// is strictly smaller than the demand, or the reduction contract is broken.
Region region(const Instance& inst, int v);

} // namespace vecon

#endif
