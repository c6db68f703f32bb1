#include <doctest.h>

#include "oracles.hpp"
#include "quasitree/generators.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/treedec.hpp"

using namespace quasitree;

TEST_CASE("building a path") {
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("single isolated vertex") {
    const Graph g = Graph::from_edges(1, {});
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("duplicate and reversed edges collapse") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(g.num_edges() == 1);
    CHECK(g.adjacent(1, 0));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("bad edges are rejected") {
    try {
        Graph::from_edges(3, {{1, 1}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SelfLoop);
    }
    try {
        Graph::from_edges(3, {{0, 3}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VertexOutOfRange);
    }
}

TEST_CASE("induced subgraphs") {
    const Graph p3 = gen_path(3);
    CHECK(induced_subgraph(p3, {0, 2}).graph.num_edges() == 0);

    const Graph k4 = gen_complete(4);
    const auto tri = induced_subgraph(k4, {0, 2, 3});
    CHECK(tri.graph == gen_complete(3));
    CHECK(tri.to_parent == std::vector<Vertex>{0, 2, 3});
    CHECK(tri.to_local[1] == -1);
    CHECK(tri.lift({0, 2}) == VertexSet{0, 3});
    CHECK(tri.lower({2, 3}) == VertexSet{1, 2});

    const auto p4 = induced_subgraph(gen_cycle(6), {0, 1, 2, 3});
    CHECK(p4.graph == gen_path(4));

    CHECK_THROWS_AS(induced_subgraph(p3, {5}), Error);
}

TEST_CASE("components") {
    CHECK(components(gen_path(3)) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(components(Graph::from_edges(4, {})).size() == 4);
    const auto rest = induced_subgraph(gen_cycle(6), {1, 2, 4, 5});
    const auto comps = components(rest.graph);
    REQUIRE(comps.size() == 2);
    CHECK(rest.lift(comps[0]) == VertexSet{1, 2});
    CHECK(rest.lift(comps[1]) == VertexSet{4, 5});
}

TEST_CASE("neighbours with at least s neighbours in X") {
    CHECK(neighbours_at_least(gen_kst(2, 3), {0, 1}, 2) == VertexSet{2, 3, 4});
    CHECK(neighbours_at_least(gen_cycle(6), {0, 2}, 2) == VertexSet{1});
    const Graph g = gen_grid(3, 3);
    CHECK(neighbours_at_least(g, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 1).empty());
}

TEST_CASE("neighbours_at_least agrees with a recount") {
    for (int seed = 0; seed < 40; ++seed) {
        const Graph g = gen_gnp(12, 300, seed);
        const auto adj = oracle::adjacency(g);
        for (std::uint32_t mask = 1; mask < 64; mask += 7) {
            VertexSet x;
            for (int b = 0; b < 6; ++b) {
                if (mask >> b & 1) {
                    x.push_back(2 * b);
                }
            }
            for (int s = 1; s <= 3; ++s) {
                const auto got = neighbours_at_least(g, x, s);
                CHECK(set_intersection(got, x).empty());
                for (Vertex v : got) {
                    int hits = 0;
                    for (Vertex u : x) {
                        hits += adj[v][u];
                    }
                    CHECK(hits >= s);
                }
                CHECK(static_cast<int>(got.size()) == oracle::count_neighbours_at_least(adj, x, s));
            }
        }
    }
}

TEST_CASE("degeneracy examples") {
    CHECK(degeneracy_order(gen_random_tree(15, 3)).degeneracy == 1);
    for (int n = 2; n <= 6; ++n) {
        CHECK(degeneracy_order(gen_grid(n, n)).degeneracy == 2);
    }
    CHECK(degeneracy_order(gen_complete(5)).degeneracy == 4);
}

TEST_CASE("degeneracy order matches the brute-force oracle") {
    for (int seed = 0; seed < 60; ++seed) {
        const Graph g = gen_gnp(3 + seed % 8, 150 + 10 * seed, seed);
        const auto order = degeneracy_order(g);
        CHECK(order.degeneracy == oracle::degeneracy(g));
        // Each vertex has at most d neighbours later in the order.
        std::vector<int> pos(g.num_vertices());
        for (std::size_t i = 0; i < order.order.size(); ++i) {
            pos[order.order[i]] = static_cast<int>(i);
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            int later = 0;
            for (Vertex w : g.neighbours(v)) {
                later += pos[w] > pos[v];
            }
            CHECK(later <= order.degeneracy);
        }
    }
}

TEST_CASE("induced edge counts agree two ways") {
    for (int seed = 0; seed < 20; ++seed) {
        const Graph g = gen_gnp(14, 350, seed);
        VertexSet w;
        for (Vertex v = seed % 3; v < 14; v += 2) {
            w.push_back(v);
        }
        const auto sub = induced_subgraph(g, w);
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                pairs += g.adjacent(w[i], w[j]);
            }
        }
        CHECK(sub.graph.num_edges() == pairs);
    }
}

TEST_CASE("degeneracy is at most tree-width") {
    for (int seed = 0; seed < 30; ++seed) {
        const Graph g = gen_gnp(4 + seed % 9, 300, seed);
        CHECK(degeneracy_order(g).degeneracy <= std::max(treewidth_exact_small(g), 0));
    }
}
