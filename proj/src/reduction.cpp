#include "vecon/reduction.hpp"

#include <algorithm>

#include "vecon/flow.hpp"

namespace vecon {

namespace {

// Sinks for the demand-forgetting test at v: vertices of demand >= phi(v),
// optionally extended by a partial solution.
vertex_set forgetting_sinks(const Instance& inst, int v, std::span<const int> s0) {
    vertex_set sinks(s0.begin(), s0.end());
    int need = inst.demands[v];
    for (int u = 0; u < inst.graph.vertex_count(); ++u)
        if (u != v && inst.demands[u] >= need) sinks.push_back(u);
    sinks = normalized(std::move(sinks));
    return set_erase(std::move(sinks), v);
}

bool forgetting_applicable(const Instance& inst, int v, std::span<const int> s0) {
    if (inst.demands[v] < 1) throw contract_error("rule applies to nonzero demands only");
    if (set_contains(s0, v)) return true;
    int need = inst.demands[v];
    vertex_set sinks = forgetting_sinks(inst, v, s0);
    return vs_connectivity(inst.graph, v, sinks, need) >= need;
}

std::pair<Instance, ReductionTrace> exhaust(const Instance& inst, std::span<const int> s0,
                                            int rule_id) {
    Instance current = inst;
    ReductionTrace trace{{}, inst.demands, false};
    for (;;) {
        int best = -1;
        for (int v = 0; v < current.graph.vertex_count(); ++v) {
            if (current.demands[v] < 1) continue;
            if (!forgetting_applicable(current, v, s0)) continue;
            if (best < 0 || current.demands[v] < current.demands[best] ||
                (current.demands[v] == current.demands[best] && v < best))
                best = v;
        }
        if (best < 0) break;
        trace.steps.push_back({rule_id, best, current.demands[best]});
        current.demands = current.demands.with_demand(best, 0);
    }
    trace.final_demands = current.demands;
    return {std::move(current), std::move(trace)};
}

} // namespace

bool rule1_applicable(const Instance& inst, int v) {
    if (!inst.graph.has_vertex(v)) throw input_error("unknown vertex");
    return forgetting_applicable(inst, v, {});
}

std::pair<Instance, ReductionTrace> exhaust_rule1(const Instance& inst) {
    return exhaust(inst, {}, 1);
}

Rule2Verdict rule2_check(const Instance& inst) {
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (inst.demands[v] >= 1 && forgetting_applicable(inst, v, {}))
            throw contract_error("rule2_check requires a Rule-1-reduced instance");
    long threshold = static_cast<long>(inst.bound()) * inst.bound() * inst.budget;
    long positive = static_cast<long>(inst.demands.positive_vertices().size());
    return positive > threshold ? Rule2Verdict::rejected : Rule2Verdict::accepted;
}

bool rule3_applicable(const Instance& inst, std::span<const int> s0, int v) {
    if (!inst.graph.has_vertex(v)) throw input_error("unknown vertex");
    if (!is_normalized(s0)) throw input_error("partial solution must be sorted and unique");
    for (int x : s0)
        if (!inst.graph.has_vertex(x)) throw input_error("unknown vertex in partial solution");
    return forgetting_applicable(inst, v, s0);
}

std::pair<Instance, ReductionTrace> exhaust_rule3(const Instance& inst,
                                                  std::span<const int> s0) {
    if (!is_normalized(s0)) throw input_error("partial solution must be sorted and unique");
    for (int x : s0)
        if (!inst.graph.has_vertex(x)) throw input_error("unknown vertex in partial solution");
    return exhaust(inst, s0, 3);
}

Region region(const Instance& inst, int v) {
    if (!inst.graph.has_vertex(v)) throw input_error("unknown vertex");
    int need = inst.demands[v];
    if (need < 1) throw contract_error("region is defined for demand vertices only");

    vertex_set sinks = forgetting_sinks(inst, v, {});
    SeparatorResult sep = closest_min_separator(inst.graph, v, sinks);
    if (sep.size() >= need)
        throw contract_error("cut not smaller than the demand; instance is not reduced");
    return Region{v, sep.cut, sep.component};
}

} // namespace vecon
