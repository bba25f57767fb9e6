#include <doctest.h>

#include "oracles.hpp"
#include "vecon/hardness.hpp"
#include "vecon/io.hpp"

using namespace vecon;

TEST_CASE("minimal document parses") {
    Instance inst = parse_instance("p vc 2 1 1 1\ne 0 1\nd 0 1\n");
    CHECK(inst.graph.vertex_count() == 2);
    CHECK(inst.graph.has_edge(0, 1));
    CHECK(inst.demands[0] == 1);
    CHECK(inst.demands[1] == 0);
    CHECK(inst.budget == 1);
    CHECK(inst.bound() == 1);
}

TEST_CASE("comments and blank lines are ignored") {
    Instance inst = parse_instance("c hello\n\np vc 2 0 0 1\nc mid\n\n");
    CHECK(inst.graph.vertex_count() == 2);
}

TEST_CASE("each malformed document is a distinct parse error") {
    CHECK_THROWS_AS(parse_instance(""), input_error);
    CHECK_THROWS_AS(parse_instance("p vc 2 0 0\n"), input_error);         // short header
    CHECK_THROWS_AS(parse_instance("p vc 2 0 0 1\ne 0 1\n"), input_error); // edge count
    CHECK_THROWS_AS(parse_instance("p vc 2 2 0 1\ne 0 1\ne 1 0\n"), input_error); // dup edge
    CHECK_THROWS_AS(parse_instance("p vc 2 1 0 1\ne 0 0\n"), input_error); // self loop
    CHECK_THROWS_AS(parse_instance("p vc 2 1 0 1\ne 0 2\n"), input_error); // id range
    CHECK_THROWS_AS(parse_instance("p vc 2 0 0 1\nd 0 2\n"), input_error); // demand > d
    CHECK_THROWS_AS(parse_instance("p vc 2 0 0 1\nd 0 1\nd 0 1\n"), input_error); // dup demand
    CHECK_THROWS_AS(parse_instance("p vc 2 0 0 1\nq 1\n"), input_error);   // unknown type
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse_instance("p vc 2 1 0 1\ne 0 0\n");
        FAIL("expected an error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("serialize-parse round trip is canonical") {
    std::string text = "c comment\np vc 3 2 1 2\ne 1 2\ne 0 1\nd 2 2\nd 0 1\n";
    Instance inst = parse_instance(text);
    std::string canonical = serialize_instance(inst);
    CHECK(canonical == "p vc 3 2 1 2\ne 0 1\ne 1 2\nd 0 1\nd 2 2\n");
    CHECK(serialize_instance(parse_instance(canonical)) == canonical);
}

TEST_CASE("random instances round trip") {
    std::mt19937_64 rng(81);
    for (int round = 0; round < 40; ++round) {
        GenParams params;
        params.n = static_cast<int>(oracles::bounded(rng, 10));
        params.edge_prob = 0.4;
        params.d = static_cast<int>(oracles::bounded(rng, 4));
        params.k = static_cast<int>(oracles::bounded(rng, 5));
        params.seed = rng();
        Instance inst = gen_random(params);
        std::string text = serialize_instance(inst);
        Instance back = parse_instance(text);
        CHECK(back.graph == inst.graph);
        CHECK(back.demands == inst.demands);
        CHECK(back.budget == inst.budget);
        CHECK(serialize_instance(back) == text);
    }
}

TEST_CASE("fuzzed documents never crash") {
    std::mt19937_64 rng(82);
    std::string base = "p vc 4 3 2 2\ne 0 1\ne 1 2\ne 2 3\nd 0 2\nd 3 1\n";
    const std::string alphabet = "pvced 0123456789\n-x";
    for (int round = 0; round < 400; ++round) {
        std::string mutated = base;
        int edits = 1 + static_cast<int>(oracles::bounded(rng, 4));
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = oracles::bounded(rng, mutated.size());
            mutated[pos] = alphabet[oracles::bounded(rng, alphabet.size())];
        }
        try {
            Instance first = parse_instance(mutated);
            Instance second = parse_instance(mutated); // accept deterministically
            CHECK(first.graph == second.graph);
            CHECK(first.demands == second.demands);
        } catch (const input_error&) {
            CHECK_THROWS_AS(parse_instance(mutated), input_error);
        }
    }
}

TEST_CASE("generator determinism and edge-probability extremes") {
    GenParams params;
    params.n = 6;
    params.seed = 99;
    Instance a = gen_random(params);
    Instance b = gen_random(params);
    CHECK(a.graph == b.graph);
    CHECK(a.demands == b.demands);

    params.edge_prob = 0.0;
    CHECK(gen_random(params).graph.edge_count() == 0);
    params.edge_prob = 1.0;
    params.n = 5;
    CHECK(gen_random(params).graph.edge_count() == 10);

    params.demand_dist = "zero";
    CHECK(gen_random(params).demands.positive_vertices().empty());
    params.demand_dist = "sparse:0.5";
    gen_random(params); // parses
    params.demand_dist = "bogus";
    CHECK_THROWS_AS(gen_random(params), input_error);
}

TEST_CASE("hitting set documents parse and round trip") {
    HittingSetInstance hs = parse_hs("p hs 3 2 1\ns 0 1\ns 1 2\n");
    CHECK(hs.universe == 3);
    CHECK(hs.sets.size() == 2);
    CHECK(hs.budget == 1);
    CHECK(serialize_hs(hs) == "p hs 3 2 1\ns 0 1\ns 1 2\n");
    CHECK_THROWS_AS(parse_hs("p hs 3 1 2\ns 0\n"), input_error); // k > m
    CHECK_THROWS_AS(parse_hs("p hs 3 2 1\ns 0\n"), input_error); // set count
    CHECK_THROWS_AS(parse_hs("p hs 3 1 1\ns 7\n"), input_error); // element range
}

TEST_CASE("fuzzed hitting-set documents never crash") {
    std::mt19937_64 rng(83);
    std::string base = "p hs 4 3 2\ns 0 1\ns 1 2\ns 3\n";
    const std::string alphabet = "phs 0123456789\n-x";
    for (int round = 0; round < 300; ++round) {
        std::string mutated = base;
        int edits = 1 + static_cast<int>(oracles::bounded(rng, 4));
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = oracles::bounded(rng, mutated.size());
            mutated[pos] = alphabet[oracles::bounded(rng, alphabet.size())];
        }
        try {
            HittingSetInstance first = parse_hs(mutated);
            HittingSetInstance second = parse_hs(mutated);
            CHECK(first.sets == second.sets);
        } catch (const input_error&) {
            CHECK_THROWS_AS(parse_hs(mutated), input_error);
        }
    }
}

TEST_CASE("solution lists parse") {
    Graph g(4, {{0, 1}});
    CHECK(parse_solution("c note\n2 0\n1\n", g) == vertex_set{0, 1, 2});
    CHECK(parse_solution("", g).empty());
    CHECK_THROWS_AS(parse_solution("9", g), input_error);
}

TEST_CASE("digest is stable") {
    CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(content_digest("a") != content_digest("b"));
}
