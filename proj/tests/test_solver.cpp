#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "copsurf/generators.hpp"
#include "copsurf/graph6.hpp"
#include "copsurf/polyhedra.hpp"
#include "copsurf/solver.hpp"
#include "oracles.hpp"

using namespace copsurf;

TEST(TupleIndexer, RankUnrankRoundTrip) {
    for (std::size_t n : {1, 3, 7, 12}) {
        for (std::size_t k : {1, 2, 3, 4}) {
            TupleIndexer ix(n, k);
            EXPECT_EQ(ix.count(), binomial_saturating(n + k - 1, k));
            CopTuple prev;
            for (std::uint64_t r = 0; r < ix.count(); ++r) {
                CopTuple t = ix.unrank(r);
                ASSERT_TRUE(std::is_sorted(t.begin(), t.end()));
                ASSERT_LT(t.back(), n);
                ASSERT_EQ(ix.rank(t), r);
                if (r) ASSERT_NE(t, prev);
                prev = t;
            }
        }
    }
}

TEST(TupleIndexer, LegalCopMoves) {
    Graph p = path_graph(4);
    EXPECT_TRUE(is_legal_cop_move(p, CopTuple{0, 2}, CopTuple{1, 3}));
    EXPECT_TRUE(is_legal_cop_move(p, CopTuple{0, 2}, CopTuple{1, 1}));
    EXPECT_FALSE(is_legal_cop_move(p, CopTuple{0, 2}, CopTuple{3, 3}));
    EXPECT_FALSE(is_legal_cop_move(p, CopTuple{0, 0}, CopTuple{1, 2}));
}

TEST(Solver, AgreesWithMinimaxOnSmallGraphs) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (std::size_t k : {1, 2}) {
                auto diff = oracle::compare_solver(g, k);
                ASSERT_TRUE(diff.empty()) << write_graph6(g) << " k=" << k << ": " << diff;
            }
        }
    }
}

TEST(Solver, AgreesWithMinimaxOnRandomGraphs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnp(5 + trial % 5, 0.3, rng());
        for (std::size_t k : {1, 2, 3}) {
            if (k == 3 && g.order() > 7) continue;
            auto diff = oracle::compare_solver(g, k);
            ASSERT_TRUE(diff.empty()) << write_graph6(g) << " k=" << k << ": " << diff;
        }
    }
}

TEST(Solver, NamedCopNumbers) {
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(cop_number(path_graph(n)).value, 1u);
    for (std::size_t n = 4; n <= 12; ++n) EXPECT_EQ(cop_number(cycle_graph(n)).value, 2u) << n;
    EXPECT_EQ(cop_number(cycle_graph(3)).value, 1u);
    EXPECT_EQ(cop_number(complete_graph(6)).value, 1u);
    EXPECT_EQ(cop_number(grid_graph(4, 4)).value, 2u);
    EXPECT_EQ(cop_number(complete_bipartite_graph(3, 3)).value, 2u);
    EXPECT_EQ(cop_number(petersen_graph()).value, 3u);
    EXPECT_EQ(cop_number(platonic_solid("dodecahedron").skeleton).value, 3u);
    EXPECT_EQ(cop_number(platonic_solid("cube").skeleton).value, 2u);
    EXPECT_EQ(cop_number(platonic_solid("octahedron").skeleton).value, 2u);
}

TEST(Solver, IcosahedronNeedsTwoCops) {
    // A vertex and its antipode dominate the icosahedron, and it has no dominated vertex.
    auto ico = platonic_solid("icosahedron");
    auto a = antipodal_map(ico);
    auto cover = neighborhood(ico.skeleton, 0, true);
    for (Vertex v : neighborhood(ico.skeleton, a[0], true)) cover.push_back(v);
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    EXPECT_EQ(cover.size(), 12u);
    EXPECT_FALSE(dismantle(ico.skeleton).dismantlable);
    EXPECT_EQ(cop_number(ico.skeleton).value, 2u);
    EXPECT_EQ(oracle::cop_number(ico.skeleton), 2u);
}

TEST(Solver, PlacementRankAndHistogram) {
    auto r = solve_k_copwin(path_graph(3), 1);
    ASSERT_TRUE(r.copwin());
    EXPECT_EQ(*r.best_placement(), (CopTuple{1}));
    EXPECT_EQ(r.placement_rank(), 1);
    std::uint64_t total = r.robber_win_states();
    for (auto c : r.ranks_histogram()) total += c;
    EXPECT_EQ(total, r.states());

    auto c4 = solve_k_copwin(cycle_graph(4), 1);
    EXPECT_FALSE(c4.copwin());
    EXPECT_FALSE(c4.best_placement().has_value());
    EXPECT_THROW(extract_cop_strategy(c4), NoStrategyError);
}

TEST(Solver, Errors) {
    EXPECT_THROW(solve_k_copwin(path_graph(3), 0), InvalidArgument);
    EXPECT_THROW(solve_k_copwin(Graph(0, std::vector<Edge>{}), 1), InvalidArgument);
    EXPECT_THROW(solve_k_copwin(complete_graph(30), 4, {1000}), CapacityError);
    auto r = solve_k_copwin(path_graph(3), 2);
    EXPECT_THROW(r.rank(CopTuple{0}, 1, Turn::Cops), InvalidArgument);
    EXPECT_THROW(r.rank(CopTuple{0, 5}, 1, Turn::Cops), InvalidArgument);
}

TEST(Solver, RankRecurrences) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_gnp(9, 0.35, rng());
        auto res = solve_k_copwin(g, 2);
        for (std::uint64_t t = 0; t < res.tuple_count(); ++t) {
            for (Vertex r = 0; r < g.order(); ++r) {
                if (contains(res.tuple(t), r)) continue;
                const auto cop = res.rank_of(res.state_id(t, r, Turn::Cops));
                std::int32_t best = kRobberWin;
                for (auto s : res.successors(t)) {
                    auto v = res.rank_of(res.state_id(s, r, Turn::Robber));
                    if (v != kRobberWin && (best == kRobberWin || v < best)) best = v;
                }
                ASSERT_EQ(cop, best == kRobberWin ? kRobberWin : best + 1);

                const auto rob = res.rank_of(res.state_id(t, r, Turn::Robber));
                std::int32_t worst = 0;
                for (Vertex r2 : neighborhood(g, r, true)) {
                    auto v = res.rank_of(res.state_id(t, r2, Turn::Cops));
                    worst = (worst == kRobberWin || v == kRobberWin) ? kRobberWin : std::max(worst, v);
                }
                ASSERT_EQ(rob, worst == kRobberWin ? kRobberWin : worst + 1);
            }
        }
    }
}

TEST(Solver, MonotoneInCops) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_gnp(8, 0.3, rng());
        bool prev = false;
        for (std::size_t k = 1; k <= 4; ++k) {
            bool now = solve_k_copwin(g, k).copwin();
            EXPECT_TRUE(!prev || now);
            prev = now;
        }
    }
}

TEST(Solver, DisjointUnionAddsCopNumbers) {
    const Graph parts[] = {path_graph(3), cycle_graph(4), cycle_graph(5), complete_graph(3)};
    for (const auto& a : parts)
        for (const auto& b : parts)
            EXPECT_EQ(cop_number(disjoint_union(a, b)).value, cop_number(a).value + cop_number(b).value);
}

TEST(Solver, DominationNumberBound) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnp(9, 0.3, rng());
        const std::size_t n = g.order();
        std::size_t gamma = n;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::uint32_t covered = 0;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1)
                    for (Vertex w : neighborhood(g, v, true)) covered |= 1u << w;
            if (covered == (1u << n) - 1) gamma = std::min<std::size_t>(gamma, std::popcount(mask));
        }
        EXPECT_LE(cop_number(g).value, gamma);
    }
}

TEST(Dismantle, EquivalentToOneCop) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_gnp(4 + trial % 12, 0.2 + 0.05 * (trial % 10), rng());
        auto d = dismantle(g);
        EXPECT_EQ(d.dismantlable, solve_k_copwin(g, 1).copwin()) << write_graph6(g);
        if (d.dismantlable) {
            EXPECT_EQ(d.order.size(), g.order());
            EXPECT_TRUE(d.irreducible.empty());
        } else {
            EXPECT_GE(d.irreducible.size(), 2u);
        }
    }
}

TEST(Dismantle, Examples) {
    EXPECT_TRUE(dismantle(path_graph(6)).dismantlable);
    EXPECT_FALSE(dismantle(cycle_graph(4)).dismantlable);
    EXPECT_EQ(dismantle(cycle_graph(5)).irreducible.size(), 5u);
    EXPECT_TRUE(dismantle(complete_graph(6)).dismantlable);
}

TEST(Strategy, ExtractedMovesDecreaseRank) {
    auto res = solve_k_copwin(petersen_graph(), 3);
    auto strat = extract_cop_strategy(res);
    EXPECT_EQ(strat.placement(), *res.best_placement());
    for (const auto& [key, to] : strat.moves()) {
        ASSERT_TRUE(is_legal_cop_move(petersen_graph(), key.first, to));
        auto before = res.rank(key.first, key.second, Turn::Cops);
        auto after = res.rank(to, key.second, Turn::Robber);
        ASSERT_EQ(after, before - 1);
    }
}
