#include <doctest.h>

#include "oracles.hpp"
#include "vecon/graph.hpp"

using namespace vecon;

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), input_error);
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("induced subgraph: triangle and identity") {
    Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    auto sub = induced_subgraph(triangle, vertex_set{0, 1});
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.has_edge(0, 1));
    CHECK(sub.to_original == vertex_set{0, 1});

    auto all = induced_subgraph(triangle, vertex_set{0, 1, 2});
    CHECK(all.graph == triangle);
    CHECK(all.to_original == vertex_set{0, 1, 2});

    CHECK_THROWS_AS(induced_subgraph(triangle, vertex_set{5}), input_error);
}

TEST_CASE("induced subgraph matches the edge-filter oracle on random graphs") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        Graph g = oracles::random_graph(rng, 8, 0.4);
        vertex_set x = oracles::random_subset(rng, 8, 0.5);
        auto sub = induced_subgraph(g, x);
        std::vector<std::pair<int, int>> expected;
        for (auto [u, v] : g.edges())
            if (set_contains(x, u) && set_contains(x, v))
                expected.emplace_back(sub.from_original[u], sub.from_original[v]);
        std::sort(expected.begin(), expected.end());
        CHECK(sub.graph.edges() == expected);
    }
}

TEST_CASE("neighborhood basics and oracle") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(neighborhood(path, vertex_set{1}) == vertex_set{0, 2});
    CHECK(neighborhood(path, vertex_set{0, 1, 2}).empty());

    std::mt19937_64 rng(12);
    for (int round = 0; round < 50; ++round) {
        Graph g = oracles::random_graph(rng, 8, 0.4);
        vertex_set x = oracles::random_subset(rng, 8, 0.5);
        vertex_set expected;
        for (int v : x)
            for (int nb : g.neighbors(v)) expected.push_back(nb);
        expected = set_difference(normalized(std::move(expected)), x);
        CHECK(neighborhood(g, x) == expected);
    }
}

TEST_CASE("closed neighborhood is additive") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 30; ++round) {
        Graph g = oracles::random_graph(rng, 8, 0.4);
        vertex_set x = oracles::random_subset(rng, 8, 0.4);
        vertex_set y = oracles::random_subset(rng, 8, 0.4);
        CHECK(is_subset(neighborhood(g, x), closed_neighborhood(g, x)));
        CHECK(closed_neighborhood(g, set_union(x, y)) ==
              set_union(closed_neighborhood(g, x), closed_neighborhood(g, y)));
    }
}

TEST_CASE("glue: two edges through one shared vertex") {
    Graph g1(2, {{0, 1}}); // z=0, a=1
    Graph g2(2, {{0, 1}}); // z=0, b=1
    auto glued = glue(g1, vertex_set{0}, g2, vertex_set{0});
    CHECK(glued.graph.vertex_count() == 3);
    CHECK(glued.graph.edge_count() == 2);
    CHECK(glued.graph.degree(0) == 2);
}

TEST_CASE("glue with the bare boundary is the identity") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    vertex_set z{1, 3};
    auto only_z = induced_subgraph(g, z);
    std::vector<int> z_pos{0, 1};
    auto glued = glue(g, z, only_z.graph, z_pos);
    CHECK(glued.graph == g);
}

TEST_CASE("glue rejects mismatched boundary subgraphs") {
    Graph g1(2, {{0, 1}});
    Graph g2(2, {});
    CHECK_THROWS_AS(glue(g1, vertex_set{0, 1}, g2, vertex_set{0, 1}), contract_error);
}

TEST_CASE("vertex count after glueing") {
    std::mt19937_64 rng(14);
    for (int round = 0; round < 30; ++round) {
        Graph g1 = oracles::random_graph(rng, 6, 0.5);
        Graph g2 = oracles::random_graph(rng, 5, 0.5);
        // Pick boundaries with matching induced subgraphs: empty boundaries
        // of equal size on isolated-ized pairs is fiddly, so glue on a single
        // shared vertex, which always matches.
        auto glued = glue(g1, vertex_set{0}, g2, vertex_set{0});
        CHECK(glued.graph.vertex_count() == 6 + 5 - 1);
    }
}

TEST_CASE("split along a separation and re-glue reproduces the graph") {
    std::mt19937_64 rng(15);
    for (int round = 0; round < 60; ++round) {
        Graph g = oracles::random_graph(rng, 8, 0.35);
        Separation sep = oracles::random_separation(rng, g, 0.3);
        validate_separation(g, sep);
        vertex_set z = separation_boundary(sep);

        auto left = induced_subgraph(g, sep.t);
        auto right = induced_subgraph(g, sep.u);
        std::vector<int> zl, zr;
        for (int v : z) {
            zl.push_back(left.from_original[v]);
            zr.push_back(right.from_original[v]);
        }
        auto glued = glue(left.graph, zl, right.graph, zr);
        CHECK(glued.graph.vertex_count() == g.vertex_count());

        // Compare edge sets under the composed remap.
        std::vector<std::pair<int, int>> expected;
        for (auto [u, v] : g.edges()) {
            int mu, mv;
            if (left.from_original[u] >= 0)
                mu = glued.left_map[left.from_original[u]];
            else
                mu = glued.right_map[right.from_original[u]];
            if (left.from_original[v] >= 0)
                mv = glued.left_map[left.from_original[v]];
            else
                mv = glued.right_map[right.from_original[v]];
            expected.emplace_back(std::min(mu, mv), std::max(mu, mv));
        }
        std::sort(expected.begin(), expected.end());
        CHECK(glued.graph.edges() == expected);
    }
}

TEST_CASE("separation validation") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    validate_separation(g, Separation{{0, 1}, {1, 2, 3}});
    CHECK_THROWS_AS(validate_separation(g, Separation{{0, 1}, {2, 3}}), input_error);
    CHECK_THROWS_AS(validate_separation(g, Separation{{0}, {1, 2, 3}}), input_error);
    CHECK(separation_boundary(Separation{{0, 1}, {1, 2, 3}}) == vertex_set{1});
}

TEST_CASE("labels are optional and validated") {
    Graph g(2, {{0, 1}});
    CHECK(g.labels().empty());
    g.set_labels({"alpha", "beta"});
    CHECK(g.labels()[1] == "beta");
    CHECK_THROWS_AS(g.set_labels({"only-one"}), input_error);
}

TEST_CASE("demand map validation") {
    CHECK_THROWS_AS(DemandMap({0, 3}, 2), input_error);
    CHECK_THROWS_AS(DemandMap({-1}, 2), input_error);
    DemandMap dm({0, 2, 1}, 2);
    CHECK(dm.positive_vertices() == vertex_set{1, 2});
    CHECK(dm.with_demand(1, 0).positive_vertices() == vertex_set{2});
}
