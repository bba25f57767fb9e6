#include <doctest.h>

#include "oracles.hpp"
#include "vecon/approx.hpp"
#include "vecon/exact.hpp"
#include "vecon/flow.hpp"

using namespace vecon;

TEST_CASE("unit demands on a connected graph need one vertex") {
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Instance inst = make_instance(path, DemandMap({1, 1, 1, 1, 1}, 1), 1);
    vertex_set s = approximate_d(inst);
    CHECK(s.size() == 1);
    CHECK(verify_solution(inst, s));
    CHECK(brute_force_opt(inst).opt == 1);
}

TEST_CASE("zero demands produce the empty solution") {
    Graph g(4, {{0, 1}});
    Instance inst = make_instance(g, DemandMap({0, 0, 0, 0}, 2), 1);
    CHECK(approximate_d(inst).empty());
    CHECK(approximate_opt_squared(inst).empty());
}

TEST_CASE("factor-d approximation: feasibility, ratio, round structure") {
    std::mt19937_64 rng(51);
    for (int round = 0; round < 60; ++round) {
        int d = 1 + static_cast<int>(oracles::bounded(rng, 3));
        Instance inst = oracles::random_instance(rng, 8, 0.4, d, 3);
        ApproxTrace trace = approximate_d_traced(inst);
        CHECK(verify_solution(inst, trace.solution));
        int opt = brute_force_opt(inst).opt;
        CHECK(static_cast<int>(trace.solution.size()) <= d * opt);
        CHECK(static_cast<int>(trace.rounds.size()) <= opt);
        int previous = 0;
        for (const auto& r : trace.rounds) {
            CHECK(r.solution_size_after - previous <= d);         // growth per round
            CHECK(static_cast<int>(r.cut.size()) < inst.demands[r.picked]);
            previous = r.solution_size_after;
        }
    }
}

TEST_CASE("guessing wrapper: feasibility and squared ratio") {
    std::mt19937_64 rng(52);
    for (int round = 0; round < 40; ++round) {
        // Unbounded demands: allow values up to n-1.
        Instance inst = oracles::random_instance(rng, 8, 0.45, 7, 3);
        vertex_set s = approximate_opt_squared(inst);
        CHECK(verify_solution(inst, s));
        int opt = brute_force_opt(inst).opt;
        CHECK(static_cast<int>(s.size()) <= opt * opt);
    }
}

TEST_CASE("high-demand vertices are seeded into every relevant guess") {
    // One vertex demands n-1; it must appear in the final solution whenever
    // small guesses win.
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    Instance inst = make_instance(star, DemandMap({4, 0, 0, 0, 0}, 4), 1);
    vertex_set s = approximate_opt_squared(inst);
    CHECK(verify_solution(inst, s));
    CHECK(set_contains(s, 0));
    CHECK(s.size() == 1);
}

TEST_CASE("open demands shrink strictly from round to round") {
    std::mt19937_64 rng(54);
    for (int round = 0; round < 40; ++round) {
        Instance inst = oracles::random_instance(rng, 8, 0.4, 3, 3);
        ApproxTrace trace = approximate_d_traced(inst);
        for (std::size_t i = 1; i < trace.rounds.size(); ++i)
            CHECK(trace.rounds[i].demands_open < trace.rounds[i - 1].demands_open);
    }
}

TEST_CASE("after each round some small extension completes the partial solution") {
    // A-posteriori version of the loop's correctness contract: after round
    // l, at most opt - l further vertices suffice.
    std::mt19937_64 rng(55);
    for (int round = 0; round < 25; ++round) {
        Instance inst = oracles::random_instance(rng, 7, 0.4, 3, 3);
        ApproxTrace trace = approximate_d_traced(inst);
        int opt = brute_force_opt(inst).opt;
        int n = inst.graph.vertex_count();

        vertex_set s0;
        for (std::size_t l = 0; l < trace.rounds.size(); ++l) {
            s0 = set_union(s0, set_insert(trace.rounds[l].cut, trace.rounds[l].picked));
            int best_extension = n + 1;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                vertex_set s1 = set_from_mask(bits);
                if (static_cast<int>(s1.size()) >= best_extension) continue;
                if (verify_solution(inst, set_union(s0, s1)))
                    best_extension = static_cast<int>(s1.size());
            }
            CHECK(best_extension <= opt - static_cast<int>(l + 1));
        }
    }
}

TEST_CASE("thread count does not change the answer") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 10; ++round) {
        Instance inst = oracles::random_instance(rng, 8, 0.4, 7, 3);
        CHECK(approximate_opt_squared(inst, 1) == approximate_opt_squared(inst, 3));
    }
}
