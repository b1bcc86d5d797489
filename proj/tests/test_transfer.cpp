#include <gtest/gtest.h>

#include <random>

#include "copsurf/covering.hpp"
#include "copsurf/embedding.hpp"
#include "copsurf/generators.hpp"
#include "copsurf/polyhedra.hpp"
#include "copsurf/transfer.hpp"

using namespace copsurf;

namespace {

struct ProjectionObserver {
    const SimulatedCopStrategy* sim;
    std::size_t* calls;
    void operator()(const CopTuple& cops, Vertex r, const SimulatedCopStrategy::State& s) const {
        ++*calls;
        if (s.cover_cops.empty()) return; // capture at placement, before start()
        EXPECT_EQ(sim->project(s.cover_cops), cops);
        EXPECT_EQ(sim->covering().p[s.imaginary], r);
    }
};

void expect_transfer_wins(const CoveringMap& map) {
    auto cc = cop_number(map.source);
    auto strat = extract_cop_strategy(cc.result);
    auto sim = transfer_strategy(map, strat);
    auto w = verify_winning(map.target, sim, cc.value);
    ASSERT_TRUE(w.winning) << w.failure;
    EXPECT_LE(w.worst_cop_moves, static_cast<std::size_t>(cc.result.placement_rank() + 1) / 2);

    RobberStrategy robber(solve_k_copwin(map.target, cc.value));
    std::size_t calls = 0;
    auto tr = play(map.target, sim, robber, 1000, ProjectionObserver{&sim, &calls});
    EXPECT_EQ(tr.outcome, Outcome::Capture);
    EXPECT_EQ(calls, tr.moves.size() + 1);
}

} // namespace

TEST(Transfer, IdentityCover) {
    Graph g = petersen_graph();
    std::vector<Vertex> id(g.order());
    for (Vertex v = 0; v < g.order(); ++v) id[v] = v;
    expect_transfer_wins(make_covering_map(g, g, id));
}

TEST(Transfer, HexagonOntoTriangle) {
    expect_transfer_wins(make_covering_map(cycle_graph(6), cycle_graph(3), {0, 1, 2, 0, 1, 2}));
}

TEST(Transfer, FoldedPath) { expect_transfer_wins(make_covering_map(path_graph(5), path_graph(3), {0, 1, 2, 1, 0})); }

TEST(Transfer, DodecahedronOntoPetersen) {
    auto dodeca = platonic_solid("dodecahedron");
    auto base = quotient_scheme(planar_scheme(dodeca), antipodal_map(dodeca));
    auto dc = double_cover(base);
    expect_transfer_wins(dc.map);
}

TEST(Transfer, IcosahedronOntoK6) {
    auto ico = platonic_solid("icosahedron");
    auto dc = double_cover(quotient_scheme(planar_scheme(ico), antipodal_map(ico)));
    expect_transfer_wins(dc.map);
}

TEST(Transfer, RandomDoubleCovers) {
    std::uint64_t seed = 40;
    for (const Graph& g : {complete_graph(4), complete_graph(5), complete_bipartite_graph(3, 3)}) {
        for (int i = 0; i < 6; ++i, ++seed) {
            auto s = random_scheme(g, seed);
            if (is_orientable_scheme(s)) continue;
            expect_transfer_wins(double_cover(s).map);
        }
    }
}

TEST(Transfer, RejectsNonCovers) {
    CoveringMap bad;
    bad.source = path_graph(4);
    bad.target = cycle_graph(3);
    bad.p = {0, 1, 2, 2};
    CopStrategy strat(1, CopTuple{0});
    EXPECT_THROW(transfer_strategy(bad, strat), InvalidCoverError);
}

TEST(Transfer, HoleInCoverStrategySurfaces) {
    auto map = make_covering_map(cycle_graph(6), cycle_graph(3), {0, 1, 2, 0, 1, 2});
    CopStrategy partial(2, CopTuple{0, 3});
    auto sim = transfer_strategy(map, partial);
    auto w = verify_winning(map.target, sim, 2);
    EXPECT_FALSE(w.winning);
}
