#include <gtest/gtest.h>

#include <random>

#include "copsurf/corpus.hpp"
#include "copsurf/embedding.hpp"
#include "copsurf/generators.hpp"
#include "copsurf/io.hpp"
#include "copsurf/polyhedra.hpp"
#include "oracles.hpp"

using namespace copsurf;

namespace {

EmbeddingScheme c3_planar() { return scheme_from_neighbor_orders(cycle_graph(3), {{1, 2}, {0, 2}, {0, 1}}); }

std::vector<Graph> sample_graphs() {
    return {complete_graph(4),
            complete_graph(5),
            complete_bipartite_graph(3, 3),
            petersen_graph(),
            platonic_solid("cube").skeleton,
            grid_graph(3, 3),
            cycle_graph(6)};
}

} // namespace

TEST(Faces, CycleAndK4) {
    auto c3 = c3_planar();
    auto faces = trace_faces(c3);
    EXPECT_EQ(faces.count(), 2u);
    EXPECT_EQ(faces.total_length(), 6u);
    EXPECT_EQ(euler_genus(c3), 0u);

    auto c3p = c3;
    c3p.signature[0] = -1;
    auto pf = trace_faces(c3p);
    ASSERT_EQ(pf.count(), 1u);
    EXPECT_EQ(pf.faces[0].size(), 6u);
    EXPECT_EQ(euler_genus(c3p), 1u);
    EXPECT_FALSE(is_orientable_scheme(c3p));

    auto k4 = planar_scheme(platonic_solid("tetrahedron"));
    auto kf = trace_faces(k4);
    EXPECT_EQ(kf.count(), 4u);
    for (const auto& f : kf.faces) EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(euler_characteristic(k4), 2);
}

TEST(Faces, PlatonicSchemesArePlanar) {
    for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
        auto s = planar_scheme(platonic_solid(name));
        EXPECT_TRUE(validate_scheme(s).empty()) << name;
        EXPECT_EQ(euler_genus(s), 0u) << name;
        EXPECT_TRUE(is_orientable_scheme(s)) << name;
    }
}

TEST(Faces, RandomTriangulationsArePlanar) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::size_t n = 4 + seed % 15;
        auto s = random_planar_triangulation(n, seed);
        EXPECT_EQ(s.edges.size(), 3 * n - 6);
        EXPECT_EQ(euler_genus(s), 0u);
        for (const auto& f : trace_faces(s).faces) EXPECT_EQ(f.size(), 3u);
    }
}

TEST(Faces, LengthSumIsTwiceEdgesAndMatchesOracle) {
    std::uint64_t seed = 1;
    for (const Graph& g : sample_graphs()) {
        for (int i = 0; i < 40; ++i, ++seed) {
            auto s = random_scheme(g, seed);
            auto faces = trace_faces(s);
            ASSERT_EQ(faces.total_length(), 2 * g.size());
            ASSERT_EQ(faces.count(), oracle::face_count(s)) << to_json(s).dump();
            ASSERT_EQ(face_count(s), faces.count());
        }
    }
}

TEST(Faces, IsolatedVertexIsOneFace) {
    EmbeddingScheme s;
    s.n = 1;
    s.rotation = {{}};
    EXPECT_EQ(face_count(s), 1u);
    EXPECT_EQ(euler_genus(s), 0u);
}

TEST(Schemes, ValidationMessages) {
    auto s = c3_planar();
    s.rotation[1].pop_back();
    auto v = validate_scheme(s);
    ASSERT_FALSE(v.empty());
    EXPECT_THROW(require_valid(s), InvalidArgument);
    auto t = c3_planar();
    t.signature[2] = 0;
    EXPECT_FALSE(validate_scheme(t).empty());
    auto d = scheme_from_neighbor_orders(disjoint_union(cycle_graph(3), cycle_graph(3)),
                                         {{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}});
    EXPECT_TRUE(validate_scheme(d, false).empty());
    EXPECT_FALSE(validate_scheme(d, true).empty());
    EXPECT_THROW(euler_genus(d), InvalidArgument);
}

TEST(Schemes, JsonRoundTrip) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = random_scheme(petersen_graph(), seed);
        EXPECT_EQ(embedding_from_json(json::parse(to_json(s).dump())), s);
    }
    EXPECT_THROW(embedding_from_json(json::parse(R"({"n": 2})")), InvalidArgument);
}

TEST(Schemes, FromFacesRebuildsRotation) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = random_planar_triangulation(10, seed);
        std::vector<std::vector<Vertex>> walks;
        for (const auto& f : trace_faces(s).faces) {
            std::vector<Vertex> w;
            for (const auto& step : f) w.push_back(step.from);
            // Walks traced against the rotation come out reversed.
            if (f.front().orientation < 0) std::reverse(w.begin(), w.end());
            walks.push_back(w);
        }
        auto r = scheme_from_faces(s.n, walks);
        EXPECT_EQ(euler_genus(r), 0u);
        EXPECT_EQ(face_count(r), face_count(s));
    }
}

TEST(Switching, PreservesGenusAndOrientability) {
    std::mt19937_64 rng(17);
    std::uint64_t seed = 100;
    for (const Graph& g : sample_graphs()) {
        for (int i = 0; i < 20; ++i, ++seed) {
            auto s = random_scheme(g, seed);
            const auto eg = euler_genus(s);
            const bool ori = is_orientable_scheme(s);
            auto t = s;
            for (int j = 0; j < 5; ++j) {
                t = switch_vertex(t, static_cast<Vertex>(rng() % g.order()));
                ASSERT_EQ(euler_genus(t), eg);
                ASSERT_EQ(is_orientable_scheme(t), ori);
                ASSERT_EQ(face_count(t), face_count(s));
            }
            auto nf = tree_normal_form(s);
            EXPECT_EQ(euler_genus(nf), eg);
            EXPECT_EQ(is_orientable_scheme(nf), ori);
        }
    }
}

TEST(Switching, OrientableMeansSwitchableToAllPositive) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto s = random_scheme(complete_graph(5), seed);
        auto nf = tree_normal_form(s);
        bool all_pos = std::all_of(nf.signature.begin(), nf.signature.end(), [](Sign x) { return x > 0; });
        EXPECT_EQ(all_pos, is_orientable_scheme(s));
        if (is_orientable_scheme(s)) EXPECT_EQ(euler_genus(s) % 2, 0u);
    }
}

TEST(Crosscap, Examples) {
    auto x = add_crosscap(c3_planar());
    EXPECT_FALSE(is_orientable_scheme(x));
    EXPECT_EQ(euler_genus(x), 1u);
    auto k4 = add_crosscap(planar_scheme(platonic_solid("tetrahedron")));
    EXPECT_EQ(euler_genus(k4), 1u);
    EXPECT_THROW(add_crosscap(x), InvalidArgument);
    auto tree = scheme_from_neighbor_orders(path_graph(3), {{1}, {0, 2}, {1}});
    EXPECT_THROW(add_crosscap(tree), InvalidArgument);
}

TEST(Crosscap, BoundOnRandomOrientableSchemes) {
    std::uint64_t seed = 500;
    for (const Graph& g : sample_graphs()) {
        for (int i = 0; i < 20; ++i, ++seed) {
            auto s = tree_normal_form(random_scheme(g, seed));
            std::fill(s.signature.begin(), s.signature.end(), Sign{1});
            auto x = add_crosscap(s);
            EXPECT_FALSE(is_orientable_scheme(x));
            EXPECT_LE(euler_genus(x), euler_genus(s) + 1);
        }
    }
}

TEST(Genus, ExhaustiveSearch) {
    auto k4 = min_euler_genus(complete_graph(4), GenusMode::Orientable);
    EXPECT_EQ(k4.euler_genus, 0u);
    auto k5o = min_euler_genus(complete_graph(5), GenusMode::Orientable);
    EXPECT_EQ(k5o.euler_genus, 2u);
    EXPECT_EQ(k5o.orientable_genus(), 1u);
    EXPECT_EQ(euler_genus(k5o.witness), 2u);
    auto k5n = min_euler_genus(complete_graph(5), GenusMode::NonOrientable);
    EXPECT_EQ(k5n.euler_genus, 1u);
    EXPECT_FALSE(is_orientable_scheme(k5n.witness));
    EXPECT_EQ(min_euler_genus(complete_bipartite_graph(3, 3), GenusMode::Orientable).euler_genus, 2u);
    EXPECT_EQ(min_euler_genus(complete_bipartite_graph(3, 3), GenusMode::NonOrientable).euler_genus, 1u);
    auto pn = min_euler_genus(petersen_graph(), GenusMode::NonOrientable);
    EXPECT_EQ(pn.euler_genus, 1u);
    EXPECT_EQ(face_count(pn.witness), 6u);
    EXPECT_EQ(min_euler_genus(petersen_graph(), GenusMode::Orientable).euler_genus, 2u);
    EXPECT_EQ(min_euler_genus(cycle_graph(5), GenusMode::Any).euler_genus, 0u);
}

TEST(Genus, DeterministicAcrossThreads) {
    for (auto mode : {GenusMode::Orientable, GenusMode::NonOrientable}) {
        auto a = min_euler_genus(complete_bipartite_graph(3, 3), mode, {50'000'000, 1});
        auto b = min_euler_genus(complete_bipartite_graph(3, 3), mode, {50'000'000, 4});
        EXPECT_EQ(a.euler_genus, b.euler_genus);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(Genus, BudgetAndArguments) {
    EXPECT_GT(genus_search_space(complete_graph(7), GenusMode::Orientable), 1'000'000u);
    EXPECT_THROW(min_euler_genus(complete_graph(7), GenusMode::Orientable, {1000, 1}), CapacityError);
    EXPECT_THROW(min_euler_genus(path_graph(4), GenusMode::NonOrientable), InvalidArgument);
}
