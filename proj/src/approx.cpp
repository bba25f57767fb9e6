#include "vecon/approx.hpp"

#include <algorithm>
#include <thread>

#include "vecon/flow.hpp"
#include "vecon/reduction.hpp"

namespace vecon {

namespace {

ApproxTrace run_rounds(const Instance& inst, vertex_set s0) {
    ApproxTrace trace;
    Instance work = inst;
    for (;;) {
        work = exhaust_rule3(work, s0).first;
        vertex_set remaining = work.demands.positive_vertices();
        if (remaining.empty()) break;

        // Minimum nonzero demand, ties to the lowest id.
        int picked = remaining.front();
        for (int v : remaining)
            if (work.demands[v] < work.demands[picked]) picked = v;

        int need = work.demands[picked];
        vertex_set sinks = s0;
        for (int u : remaining)
            if (u != picked && work.demands[u] >= need) sinks.push_back(u);
        sinks = normalized(std::move(sinks));
        sinks = set_erase(std::move(sinks), picked);

        SeparatorResult sep = closest_min_separator(work.graph, picked, sinks);
        if (sep.size() >= need)
            throw contract_error("no small separator left after demand forgetting");

        s0 = set_union(s0, set_insert(sep.cut, picked));
        trace.rounds.push_back({picked, sep.cut, static_cast<int>(s0.size()),
                                static_cast<int>(remaining.size())});
    }
    trace.solution = std::move(s0);
    return trace;
}

} // namespace

vertex_set approximate_d(const Instance& inst) {
    return approximate_d_traced(inst).solution;
}

ApproxTrace approximate_d_traced(const Instance& inst) {
    return run_rounds(inst, {});
}

vertex_set approximate_opt_squared(const Instance& inst, int threads) {
    if (threads < 1) throw input_error("thread count must be positive");
    int n = inst.graph.vertex_count();
    if (n == 0 || inst.demands.positive_vertices().empty()) return {};

    std::vector<vertex_set> results(static_cast<std::size_t>(n));
    auto run_guess = [&](int guess_index) {
        int guess = guess_index + 1;
        vertex_set seed;
        for (int v = 0; v < n; ++v)
            if (inst.demands[v] > guess) seed.push_back(v);
        results[guess_index] = run_rounds(inst, std::move(seed)).solution;
    };

    if (threads == 1) {
        for (int i = 0; i < n; ++i) run_guess(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t count = static_cast<std::size_t>(std::min(threads, n));
        for (std::size_t t = 0; t < count; ++t) {
            pool.emplace_back([&, t]() {
                for (int i = static_cast<int>(t); i < n; i += static_cast<int>(count))
                    run_guess(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Smallest result; ties resolved by the smallest guess, so the answer
    // does not depend on the thread count.
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].size() < results[best].size()) best = i;
    return results[best];
}

} // namespace vecon
