#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "copsurf/generators.hpp"
#include "copsurf/graph6.hpp"
#include "copsurf/isomorphism.hpp"
#include "copsurf/polyhedra.hpp"
#include "oracles.hpp"

using namespace copsurf;

TEST(Graph, NormalisesAndRejects) {
    Graph g(3, std::vector<Edge>{{2, 0}, {1, 0}});
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_FALSE(g.adjacent(1, 2));
    EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), InvalidArgument);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), InvalidArgument);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), InvalidArgument);
}

TEST(Graph, Neighborhoods) {
    Graph p = path_graph(4);
    EXPECT_EQ(neighborhood(p, 1, false), (VertexSet{0, 2}));
    EXPECT_EQ(neighborhood(p, 1, true), (VertexSet{0, 1, 2}));
    EXPECT_EQ(neighborhood(p, 0, true), (VertexSet{0, 1}));
}

TEST(Graph, Components) {
    Graph g = disjoint_union(cycle_graph(3), path_graph(2));
    EXPECT_EQ(component_count(g), 2u);
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(petersen_graph()));
    EXPECT_EQ(component_count(Graph(3, std::vector<Edge>{})), 3u);
}

TEST(Graph, Girth) {
    EXPECT_EQ(girth(petersen_graph()), 5u);
    EXPECT_EQ(girth(platonic_solid("dodecahedron").skeleton), 5u);
    EXPECT_EQ(girth(cycle_graph(7)), 7u);
    EXPECT_EQ(girth(path_graph(5)), 0u);
    EXPECT_EQ(girth(complete_graph(4)), 3u);
    EXPECT_EQ(girth(grid_graph(3, 3)), 4u);
}

TEST(Graph6, KnownStrings) {
    Graph empty5 = parse_graph6("D??");
    EXPECT_EQ(empty5.order(), 5u);
    EXPECT_EQ(empty5.size(), 0u);
    Graph k2 = parse_graph6("A_");
    EXPECT_EQ(k2.order(), 2u);
    EXPECT_TRUE(k2.adjacent(0, 1));
    EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(write_graph6(Graph(5, std::vector<Edge>{})), "D??");
    EXPECT_EQ(write_graph6(petersen_graph()).size(), 1u + 8u);
    EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), k2);
}

TEST(Graph6, MatchesIndependentDecoder) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 70;
        Graph g = random_gnp(n, 0.3, rng());
        std::string s = write_graph6(g);
        auto adj = oracle::decode_graph6(s);
        ASSERT_EQ(adj.size(), n);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (i != j) ASSERT_EQ(adj[i][j], g.adjacent(i, j)) << s;
        EXPECT_EQ(parse_graph6(s), g);
    }
}

TEST(Graph6, LongHeaderRoundTrip) {
    Graph g = cycle_graph(100);
    std::string s = write_graph6(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, ErrorsCarryOffsets) {
    try {
        parse_graph6("A");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    try {
        parse_graph6("D\x01?");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    try {
        parse_graph6("A_?");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("~~??????"), CapacityError);
}

TEST(Generators, Families) {
    EXPECT_EQ(path_graph(5).size(), 4u);
    EXPECT_EQ(cycle_graph(6).size(), 6u);
    EXPECT_EQ(complete_graph(6).size(), 15u);
    EXPECT_EQ(complete_bipartite_graph(3, 3).size(), 9u);
    EXPECT_EQ(grid_graph(3, 4).size(), 17u);
    Graph p = petersen_graph();
    EXPECT_EQ(p.order(), 10u);
    EXPECT_EQ(p.size(), 15u);
    EXPECT_EQ(min_degree(p), 3u);
    EXPECT_THROW(cycle_graph(2), InvalidArgument);
    EXPECT_THROW(generate("cycle", {}), InvalidArgument);
    EXPECT_THROW(generate("nope", {3}), InvalidArgument);
    EXPECT_EQ(generate("grid", {2, 3}), grid_graph(2, 3));
    EXPECT_EQ(generate("random_gnp", {12, 40}, 7), generate("random_gnp", {12, 40}, 7));
}

TEST(Generators, PlatonicSolids) {
    struct Row {
        const char* name;
        std::size_t v, e, deg;
    };
    for (Row r : {Row{"tetrahedron", 4, 6, 3}, Row{"cube", 8, 12, 3}, Row{"octahedron", 6, 12, 4},
                  Row{"dodecahedron", 20, 30, 3}, Row{"icosahedron", 12, 30, 5}}) {
        auto p = platonic_solid(r.name);
        EXPECT_EQ(p.skeleton.order(), r.v) << r.name;
        EXPECT_EQ(p.skeleton.size(), r.e) << r.name;
        EXPECT_EQ(min_degree(p.skeleton), r.deg) << r.name;
        if (std::string(r.name) != "tetrahedron") {
            auto a = antipodal_map(p);
            for (Vertex v = 0; v < r.v; ++v) {
                EXPECT_NE(a[v], v);
                EXPECT_EQ(a[a[v]], v);
            }
        }
    }
    EXPECT_TRUE(is_isomorphic(platonic_solid("tetrahedron").skeleton, complete_graph(4)));
    EXPECT_TRUE(is_isomorphic(platonic_solid("octahedron").skeleton,
                              parse_graph6(write_graph6(platonic_solid("octahedron").skeleton))));
}

TEST(Isomorphism, FindsAndRejects) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_gnp(12, 0.35, rng());
        std::vector<Vertex> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        auto iso = find_isomorphism(g, h);
        ASSERT_TRUE(iso.has_value());
        EXPECT_TRUE(is_isomorphism(g, h, *iso));
    }
    EXPECT_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    EXPECT_FALSE(is_isomorphic(petersen_graph(), complete_bipartite_graph(5, 5)));
    EXPECT_TRUE(is_isomorphic(complete_bipartite_graph(3, 3),
                              parse_graph6(write_graph6(complete_bipartite_graph(3, 3)))));
}

TEST(Enumeration, CountsMatchKnownSequence) {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n).size(), expected[n - 1]) << n;
}
