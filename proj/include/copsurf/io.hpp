#pragma once

// JSON and file formats. Requires nlohmann/json on the include path.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "copsurf/bounds.hpp"
#include "copsurf/covering.hpp"
#include "copsurf/embedding.hpp"
#include "copsurf/error.hpp"
#include "copsurf/game.hpp"
#include "copsurf/graph6.hpp"
#include "copsurf/solver.hpp"

namespace copsurf {

using json = nlohmann::json;

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << text;
}

inline json read_json_file(const std::filesystem::path& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what(), e.byte);
    }
}

/// A graph argument: a path to a file whose first line is graph6, or a graph6 string.
inline Graph load_graph_arg(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::string text = read_text_file(arg);
        auto nl = text.find('\n');
        return parse_graph6(text.substr(0, nl));
    }
    return parse_graph6(arg);
}

/// Non-empty lines of a newline-separated graph6 corpus.
inline std::vector<std::string> read_graph6_corpus(const std::filesystem::path& path) {
    std::vector<std::string> out;
    std::istringstream in(read_text_file(path));
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

namespace detail {

template <class T>
T json_get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad JSON field '") + key + "': " + e.what());
    }
}

} // namespace detail

inline json to_json(const EmbeddingScheme& s) {
    json edges = json::array();
    for (Edge e : s.edges) edges.push_back({e.u, e.v});
    json sig = json::array();
    for (Sign x : s.signature) sig.push_back(static_cast<int>(x));
    return {{"n", s.n}, {"edges", edges}, {"rotation", s.rotation}, {"signature", sig}};
}

/// Parses and validates (structure only; connectivity is left to the caller).
inline EmbeddingScheme embedding_from_json(const json& j) {
    EmbeddingScheme s;
    s.n = detail::json_get<std::size_t>(j, "n");
    for (const auto& pair : detail::json_get<std::vector<std::vector<Vertex>>>(j, "edges")) {
        if (pair.size() != 2) throw InvalidArgument("edge entries must be [u, v] pairs");
        s.edges.push_back({pair[0], pair[1]});
    }
    s.rotation = detail::json_get<std::vector<std::vector<EdgeId>>>(j, "rotation");
    for (int x : detail::json_get<std::vector<int>>(j, "signature")) s.signature.push_back(static_cast<Sign>(x));
    require_valid(s, false);
    return s;
}

inline const char* to_string(CoverKind k) { return k == CoverKind::TwoSheeted ? "two_sheeted" : "weak"; }

inline json to_json(const CoveringMap& m) {
    return {{"source_graph6", write_graph6(m.source)},
            {"target_graph6", write_graph6(m.target)},
            {"p", m.p},
            {"kind", to_string(m.kind)}};
}

/// Parses and certifies the map (weak-cover check). A map with the
/// double-cover vertex layout gets its deck involution back.
inline CoveringMap covering_from_json(const json& j) {
    Graph source = parse_graph6(detail::json_get<std::string>(j, "source_graph6"));
    Graph target = parse_graph6(detail::json_get<std::string>(j, "target_graph6"));
    auto p = detail::json_get<std::vector<Vertex>>(j, "p");
    CoveringMap m = make_covering_map(std::move(source), std::move(target), std::move(p));
    const std::size_t n = m.target.order();
    if (m.kind == CoverKind::TwoSheeted && m.source.order() == 2 * n) {
        bool layout = true;
        for (Vertex v = 0; v < 2 * n; ++v) layout = layout && m.p[v] == v % n;
        for (Edge e : m.source.edges())
            layout = layout && m.source.adjacent(static_cast<Vertex>((e.u + n) % (2 * n)),
                                                 static_cast<Vertex>((e.v + n) % (2 * n)));
        m.sheet_layout = layout;
    }
    if (j.contains("kind") && j["kind"] == "two_sheeted" && m.kind != CoverKind::TwoSheeted) {
        throw InvalidCoverError("map declared two_sheeted but some fibre or neighbourhood is not");
    }
    return m;
}

inline json to_json(const CopStrategy& s, const Graph& g) {
    json moves = json::array();
    for (const auto& [key, to] : s.moves()) moves.push_back({{"cops", key.first}, {"robber", key.second}, {"to", to}});
    return {{"k", s.cops()}, {"graph6", write_graph6(g)}, {"placement", s.placement()}, {"moves", moves}};
}

struct LoadedStrategy {
    Graph graph;
    CopStrategy strategy;
};

inline LoadedStrategy strategy_from_json(const json& j) {
    LoadedStrategy out;
    out.graph = parse_graph6(detail::json_get<std::string>(j, "graph6"));
    auto k = detail::json_get<std::size_t>(j, "k");
    auto placement = detail::json_get<CopTuple>(j, "placement");
    if (placement.size() != k) throw InvalidArgument("placement size differs from k");
    out.strategy = CopStrategy(k, placement);
    for (const auto& m : detail::json_get<json>(j, "moves")) {
        auto cops = detail::json_get<CopTuple>(m, "cops");
        auto to = detail::json_get<CopTuple>(m, "to");
        if (cops.size() != k || to.size() != k) throw InvalidArgument("strategy move with wrong cop count");
        out.strategy.set_move(std::move(cops), detail::json_get<Vertex>(m, "robber"), std::move(to));
    }
    return out;
}

inline json to_json(const Transcript& t) {
    json moves = json::array();
    for (const auto& m : t.moves) {
        moves.push_back({{"side", m.side == Turn::Cops ? "cops" : "robber"}, {"cops", m.cops}, {"robber", m.robber}});
    }
    json out = {{"graph6", t.graph6},
                {"k", t.k},
                {"placements", {{"cops", t.cop_placement}, {"robber", t.robber_placement}}},
                {"moves", moves},
                {"outcome", t.outcome == Outcome::Capture ? "capture" : "timeout"}};
    out["capture_index"] = t.outcome == Outcome::Capture ? json(t.capture_index) : json(nullptr);
    return out;
}

inline json solve_json(const SolveResult& r, std::optional<std::size_t> cop_number, double elapsed_ms) {
    json out = {{"n", r.graph().order()},
                {"k", r.cops()},
                {"copwin", r.copwin()},
                {"states", r.states()},
                {"ranks_histogram", r.ranks_histogram()},
                {"robber_win_states", r.robber_win_states()},
                {"elapsed_ms", elapsed_ms}};
    if (cop_number) out["cop_number"] = *cop_number;
    out["best_placement"] = r.best_placement() ? json(*r.best_placement()) : json(nullptr);
    if (r.copwin()) out["placement_rank"] = r.placement_rank();
    return out;
}

inline json faces_json(const EmbeddingScheme& s) {
    FaceSet faces = trace_faces(s);
    json list = json::array();
    for (const auto& f : faces.faces) {
        json walk = json::array();
        for (const auto& step : f) walk.push_back({step.from, step.edge, static_cast<int>(step.orientation)});
        list.push_back(walk);
    }
    json out = {{"faces", list},
                {"face_count", faces.count()},
                {"euler_characteristic", euler_characteristic(s)},
                {"orientable", is_orientable_scheme(s)}};
    if (validate_scheme(s, true).empty()) out["euler_genus"] = euler_genus(s);
    return out;
}

inline json to_json(const std::vector<BoundsRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"g", r.genus}, {"ns_bound", r.ns_bound}, {"here_bound", r.here_bound}});
    return out;
}

} // namespace copsurf
