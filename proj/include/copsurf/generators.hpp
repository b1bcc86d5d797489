#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"
#include "copsurf/isomorphism.hpp"
#include "copsurf/polyhedra.hpp"

namespace copsurf {

inline Graph path_graph(std::size_t n) {
    if (n == 0) throw InvalidArgument("path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
    return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    if (n == 0) throw InvalidArgument("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
}

/// Parts are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) throw InvalidArgument("complete bipartite graph needs non-empty parts");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
    return Graph(a + b, edges);
}

/// rows x cols grid, vertex r*cols + c.
inline Graph grid_graph(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("grid needs positive dimensions");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            auto v = static_cast<Vertex>(r * cols + c);
            if (c + 1 < cols) edges.push_back({v, v + 1});
            if (r + 1 < rows) edges.push_back({v, static_cast<Vertex>(v + cols)});
        }
    }
    return Graph(rows * cols, edges);
}

/// Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in lexicographic
/// order, adjacent when disjoint.
inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < pairs.size(); ++i) {
        for (Vertex j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
        }
    }
    return Graph(pairs.size(), edges);
}

/// Vertices of h follow those of g.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const auto off = static_cast<Vertex>(g.order());
    for (Edge e : h.edges()) edges.push_back({e.u + off, e.v + off});
    return Graph(g.order() + h.order(), edges);
}

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Erdos-Renyi G(n,p); pairs are sampled in lexicographic order.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("random_gnp needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("random_gnp probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (unit_interval(rng) < p) edges.push_back({i, j});
    return Graph(n, edges);
}

/// Named family with integer parameters. `random_gnp` takes (n, percent).
inline Graph generate(std::string_view family, const std::vector<long long>& params,
                      std::optional<std::uint64_t> seed = std::nullopt) {
    auto expect = [&](std::size_t count) {
        if (params.size() != count) {
            throw InvalidArgument(std::string(family) + " expects " + std::to_string(count) +
                                  " parameter(s), got " + std::to_string(params.size()));
        }
        for (long long p : params) {
            if (p < 0) throw InvalidArgument(std::string(family) + ": negative parameter");
        }
    };
    auto at = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };

    if (family == "path") {
        expect(1);
        return path_graph(at(0));
    }
    if (family == "cycle") {
        expect(1);
        return cycle_graph(at(0));
    }
    if (family == "complete") {
        expect(1);
        return complete_graph(at(0));
    }
    if (family == "complete_bipartite") {
        expect(2);
        return complete_bipartite_graph(at(0), at(1));
    }
    if (family == "grid") {
        expect(2);
        return grid_graph(at(0), at(1));
    }
    if (family == "petersen") {
        expect(0);
        return petersen_graph();
    }
    if (family == "tetrahedron" || family == "cube" || family == "octahedron" ||
        family == "dodecahedron" || family == "icosahedron") {
        expect(0);
        return platonic_solid(family).skeleton;
    }
    if (family == "random_gnp") {
        expect(2);
        if (at(1) > 100) throw InvalidArgument("random_gnp percent must be <= 100");
        return random_gnp(at(0), static_cast<double>(at(1)) / 100.0, seed.value_or(0));
    }
    throw InvalidArgument("unknown graph family '" + std::string(family) + "'");
}

/// All graphs on n vertices up to isomorphism, built by vertex extension
/// and deduplicated with the isomorphism search.
inline std::vector<Graph> enumerate_graphs(std::size_t n) {
    if (n == 0) return {Graph(0)};
    std::vector<Graph> level{Graph(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        std::vector<Graph> next;
        std::map<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>> buckets;
        for (const Graph& base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                std::vector<Edge> edges(base.edges().begin(), base.edges().end());
                for (Vertex u = 0; u + 1 < m; ++u)
                    if (mask >> u & 1) edges.push_back({u, static_cast<Vertex>(m - 1)});
                Graph cand(m, edges);
                auto key = detail::vertex_invariants(cand);
                std::sort(key.begin(), key.end());
                auto& bucket = buckets[key];
                bool fresh = std::none_of(bucket.begin(), bucket.end(), [&](std::size_t idx) {
                    return is_isomorphic(next[idx], cand);
                });
                if (fresh) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(cand));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace copsurf
