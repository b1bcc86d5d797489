#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "copsurf/covering.hpp"
#include "copsurf/embedding.hpp"
#include "copsurf/generators.hpp"
#include "copsurf/io.hpp"
#include "copsurf/polyhedra.hpp"
#include "copsurf/solver.hpp"

namespace copsurf {

inline constexpr const char* kToolName = "copsurf";
inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a, hex encoded. Stable across platforms.
inline std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
    return out;
}

/// Run fn(i) for i in [0, count) on `jobs` threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    std::vector<decltype(fn(std::size_t{}))> out(count);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
            });
        }
    }
    return out;
}

/// Remove every "elapsed_ms" member, recursively.
inline json strip_timings(json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [key, value] : j.items()) value = strip_timings(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_timings(value);
    }
    return j;
}

struct CorpusEntry {
    std::string name;
    EmbeddingScheme scheme;
    std::string provenance;
};

/// The shipped embedding corpus, rebuilt from first principles. Genus
/// witnesses come from exhaustive search, the projective K6 from the
/// antipodal quotient of the icosahedron, and the genus-2/3 non-orientable
/// cubes from the first seeds with the wanted genus.
inline std::vector<CorpusEntry> build_default_corpus() {
    std::vector<CorpusEntry> out;
    auto c3 = scheme_from_neighbor_orders(cycle_graph(3), {{1, 2}, {0, 2}, {0, 1}});
    out.push_back({"c3_planar", c3, "cycle(3), trivial rotation"});
    auto c3p = c3;
    c3p.signature[0] = -1;
    out.push_back({"c3_projective", c3p, "cycle(3) with edge 0 negative"});
    for (const char* solid : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
        out.push_back({std::string(solid) + "_planar", planar_scheme(platonic_solid(solid)),
                       "convex coordinates, counterclockwise rotations"});
    }
    out.push_back({"k5_torus", min_euler_genus(complete_graph(5), GenusMode::Orientable).witness,
                   "exhaustive orientable genus search"});
    out.push_back({"k5_projective", min_euler_genus(complete_graph(5), GenusMode::NonOrientable).witness,
                   "exhaustive non-orientable genus search"});
    out.push_back({"k33_torus", min_euler_genus(complete_bipartite_graph(3, 3), GenusMode::Orientable).witness,
                   "exhaustive orientable genus search"});
    out.push_back({"k33_projective",
                   min_euler_genus(complete_bipartite_graph(3, 3), GenusMode::NonOrientable).witness,
                   "exhaustive non-orientable genus search"});
    out.push_back({"petersen_projective", min_euler_genus(petersen_graph(), GenusMode::NonOrientable).witness,
                   "exhaustive non-orientable genus search"});
    {
        auto ico = platonic_solid("icosahedron");
        out.push_back({"k6_projective", quotient_scheme(planar_scheme(ico), antipodal_map(ico)),
                       "antipodal quotient of the planar icosahedron"});
    }
    out.push_back({"k5_torus_crosscap", add_crosscap(out[7].scheme), "add_crosscap(k5_torus)"});
    const Graph cube = platonic_solid("cube").skeleton;
    for (std::size_t want : {2, 3}) {
        for (std::uint64_t seed = 1;; ++seed) {
            auto s = random_scheme(cube, seed);
            if (!is_orientable_scheme(s) && euler_genus(s) == want) {
                out.push_back({"cube_nonorientable_g" + std::to_string(want), s,
                               "random_scheme(cube, seed=" + std::to_string(seed) + ")"});
                break;
            }
        }
    }
    return out;
}

/// Every graph on 1..max_n vertices up to isomorphism, in generation order.
inline std::vector<Graph> small_graph_corpus(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto level = enumerate_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Planar graphs with verified planar schemes: platonic skeletons, grids and
/// random triangulations on up to 20 vertices.
inline std::vector<std::pair<std::string, EmbeddingScheme>> planar_scheme_corpus(std::size_t triangulations = 40,
                                                                                 std::uint64_t seed = 2008) {
    std::vector<std::pair<std::string, EmbeddingScheme>> out;
    for (const char* solid : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"})
        out.emplace_back(solid, planar_scheme(platonic_solid(solid)));
    for (std::size_t t = 0; t < triangulations; ++t) {
        std::size_t n = 4 + (t % 17);
        out.emplace_back("triangulation_" + std::to_string(t), random_planar_triangulation(n, seed + t));
    }
    return out;
}

inline std::vector<std::pair<std::string, Graph>> planar_graph_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (auto& [name, s] : planar_scheme_corpus()) out.emplace_back(name, s.graph());
    for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t c = r; c <= 5; ++c)
            out.emplace_back("grid_" + std::to_string(r) + "x" + std::to_string(c), grid_graph(r, c));
    return out;
}

/// Write the shipped corpus layout under `root`.
inline void write_default_corpus(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    fs::create_directories(root / "embeddings");
    fs::create_directories(root / "maps");
    fs::create_directories(root / "graphs");
    json manifest = {{"tool", kToolName}, {"version", kToolVersion}, {"embeddings", json::array()}};
    for (const auto& e : build_default_corpus()) {
        std::string text = to_json(e.scheme).dump() + "\n";
        write_text_file(root / "embeddings" / (e.name + ".json"), text);
        manifest["embeddings"].push_back({{"name", e.name}, {"provenance", e.provenance}, {"hash", fnv1a_hex(text)}});
    }
    {
        std::vector<Vertex> p{0, 1, 2, 0, 1, 2};
        auto map = make_covering_map(cycle_graph(6), cycle_graph(3), p);
        write_text_file(root / "maps" / "c6_to_c3.json", to_json(map).dump() + "\n");
    }
    std::string planar;
    for (const auto& [name, g] : planar_graph_corpus()) planar += write_graph6(g) + "\n";
    write_text_file(root / "graphs" / "planar.g6", planar);
    std::string small;
    for (const auto& g : small_graph_corpus(7)) small += write_graph6(g) + "\n";
    write_text_file(root / "graphs" / "small7.g6", small);
    write_text_file(root / "manifest.json", manifest.dump(2) + "\n");
}

} // namespace copsurf
