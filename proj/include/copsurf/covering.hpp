#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copsurf/embedding.hpp"
#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"

namespace copsurf {

enum class CoverKind { WeakCover, TwoSheeted };

/// Vertex map p from source (the covering graph G') onto target (G).
struct CoveringMap {
    Graph source;
    Graph target;
    std::vector<Vertex> p;
    CoverKind kind = CoverKind::WeakCover;
    /// Built by double_cover: vertex v + t*n is (v, sheet t), t in {0, 1}.
    bool sheet_layout = false;

    Vertex operator()(Vertex v) const { return p.at(v); }
};

struct WeakCoverViolation {
    Vertex vertex = 0;
    /// N(p(u)) \ p(N(u)).
    VertexSet missing;
    /// p(N(u)) \ N(p(u)).
    VertexSet extra;
};

struct WeakCoverCheck {
    std::vector<std::string> problems;
    std::vector<WeakCoverViolation> violations;
    /// Target vertices with empty fibre.
    VertexSet unhit;

    bool ok() const noexcept { return problems.empty() && violations.empty() && unhit.empty(); }
    explicit operator bool() const noexcept { return ok(); }

    std::string describe() const {
        std::string s;
        for (const auto& p : problems) s += p + "; ";
        if (!unhit.empty()) s += "not surjective, e.g. vertex " + std::to_string(unhit.front()) + " has no preimage; ";
        for (const auto& v : violations) {
            s += "vertex " + std::to_string(v.vertex) + ":";
            if (!v.missing.empty()) s += " " + std::to_string(v.missing.size()) + " target neighbour(s) not covered";
            if (!v.extra.empty()) s += " " + std::to_string(v.extra.size()) + " image(s) outside N(p(u))";
            s += "; ";
        }
        return s;
    }
};

/// Check surjectivity and p(N(u)) = N(p(u)) for every source vertex.
inline WeakCoverCheck check_weak_cover(const std::vector<Vertex>& p, const Graph& source, const Graph& target) {
    WeakCoverCheck out;
    if (p.size() != source.order()) {
        out.problems.push_back("map has " + std::to_string(p.size()) + " entries for " +
                               std::to_string(source.order()) + " source vertices");
        return out;
    }
    for (Vertex u = 0; u < p.size(); ++u) {
        if (p[u] >= target.order()) {
            out.problems.push_back("vertex " + std::to_string(u) + " maps outside the target");
        }
    }
    if (!out.problems.empty()) return out;

    std::vector<bool> hit(target.order(), false);
    for (Vertex x : p) hit[x] = true;
    for (Vertex v = 0; v < target.order(); ++v)
        if (!hit[v]) out.unhit.push_back(v);

    for (Vertex u = 0; u < source.order(); ++u) {
        VertexSet image;
        for (Vertex w : source.neighbors(u)) image.push_back(p[w]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        auto expected = target.neighbors(p[u]);
        WeakCoverViolation viol{u, {}, {}};
        std::set_difference(expected.begin(), expected.end(), image.begin(), image.end(),
                            std::back_inserter(viol.missing));
        std::set_difference(image.begin(), image.end(), expected.begin(), expected.end(),
                            std::back_inserter(viol.extra));
        if (!viol.missing.empty() || !viol.extra.empty()) out.violations.push_back(std::move(viol));
    }
    return out;
}

/// Preimage of v, ascending.
inline VertexSet fibre(const CoveringMap& map, Vertex v) {
    if (v >= map.target.order()) throw InvalidArgument("fibre: vertex out of range");
    VertexSet out;
    for (Vertex u = 0; u < map.p.size(); ++u)
        if (map.p[u] == v) out.push_back(u);
    return out;
}

/// True when every fibre has two vertices and p is bijective on each N(u).
inline bool is_two_sheeted(const std::vector<Vertex>& p, const Graph& source, const Graph& target) {
    std::vector<std::size_t> size(target.order(), 0);
    for (Vertex x : p) ++size[x];
    if (std::any_of(size.begin(), size.end(), [](std::size_t s) { return s != 2; })) return false;
    for (Vertex u = 0; u < source.order(); ++u) {
        if (source.degree(u) != target.degree(p[u])) return false;
    }
    return true;
}

/// Certified covering map; throws InvalidCoverError unless p is a weak cover.
inline CoveringMap make_covering_map(Graph source, Graph target, std::vector<Vertex> p) {
    auto check = check_weak_cover(p, source, target);
    if (!check) throw InvalidCoverError("not a weak cover: " + check.describe());
    CoveringMap map;
    map.kind = is_two_sheeted(p, source, target) ? CoverKind::TwoSheeted : CoverKind::WeakCover;
    map.source = std::move(source);
    map.target = std::move(target);
    map.p = std::move(p);
    return map;
}

struct DoubleCover {
    EmbeddingScheme cover;
    CoveringMap map;
};

/// Orientation double cover of a signed scheme.
///
/// Cover vertex v is (v, +1) and v + n is (v, -1). Edge e = uv with sign s
/// lifts to id e joining (u,+1)-(v,s) and id e + E joining (u,-1)-(v,-s).
/// The +1 sheet inherits each rotation, the -1 sheet its reverse, and every
/// cover sign is +1.
inline DoubleCover double_cover(const EmbeddingScheme& s) {
    require_valid(s, false);
    const std::size_t n = s.n;
    const std::size_t m = s.edges.size();
    auto lift = [&](Vertex v, bool upper) { return static_cast<Vertex>(upper ? v : v + n); };

    EmbeddingScheme c;
    c.n = 2 * n;
    c.edges.resize(2 * m);
    c.signature.assign(2 * m, 1);
    for (std::size_t e = 0; e < m; ++e) {
        auto [a, b] = s.edges[e];
        const bool same = s.signature[e] > 0;
        c.edges[e] = {lift(a, true), lift(b, same)};
        c.edges[e + m] = {lift(a, false), lift(b, !same)};
    }
    // Lift of edge e incident to (v, sheet).
    auto lifted_edge = [&](EdgeId e, Vertex v, bool upper) {
        bool a_upper = s.edges[e].u == v ? upper : (upper == (s.signature[e] > 0));
        return static_cast<EdgeId>(a_upper ? e : e + m);
    };
    c.rotation.resize(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        for (EdgeId e : s.rotation[v]) c.rotation[v].push_back(lifted_edge(e, v, true));
        for (auto it = s.rotation[v].rbegin(); it != s.rotation[v].rend(); ++it)
            c.rotation[v + n].push_back(lifted_edge(*it, v, false));
    }
    require_valid(c, false);

    CoveringMap map;
    map.source = c.graph();
    map.target = s.graph();
    map.p.resize(2 * n);
    for (Vertex v = 0; v < 2 * n; ++v) map.p[v] = static_cast<Vertex>(v % n);
    map.kind = CoverKind::TwoSheeted;
    map.sheet_layout = true;
    auto check = check_weak_cover(map.p, map.source, map.target);
    if (!check) throw InvariantError("double cover failed the weak-cover check: " + check.describe());
    return {std::move(c), std::move(map)};
}

/// The sheet swap (v, t) -> (v, -t) of a double cover.
inline std::vector<Vertex> deck_involution(const CoveringMap& map) {
    if (!map.sheet_layout || map.kind != CoverKind::TwoSheeted) {
        throw InvalidArgument("deck involution is only available for maps built by double_cover");
    }
    const std::size_t n = map.target.order();
    std::vector<Vertex> inv(2 * n);
    for (Vertex v = 0; v < 2 * n; ++v) inv[v] = static_cast<Vertex>((v + n) % (2 * n));
    for (Edge e : map.source.edges()) {
        if (!map.source.adjacent(inv[e.u], inv[e.v])) throw InvariantError("sheet swap is not an automorphism");
    }
    for (Vertex v = 0; v < 2 * n; ++v) {
        if (inv[v] == v || map.p[inv[v]] != map.p[v]) throw InvariantError("sheet swap does not commute with p");
    }
    return inv;
}

namespace detail {

// Orbit representatives (smaller member) in increasing order, and the class of every vertex.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> involution_classes(const Graph& g,
                                                                              const std::vector<Vertex>& inv) {
    if (inv.size() != g.order()) throw InvalidArgument("involution size mismatch");
    for (Vertex v = 0; v < inv.size(); ++v) {
        if (inv[v] >= inv.size() || inv[inv[v]] != v || inv[v] == v) {
            throw InvalidArgument("map is not a fixed-point-free involution");
        }
    }
    for (Edge e : g.edges()) {
        if (!g.adjacent(inv[e.u], inv[e.v])) throw InvalidArgument("involution is not an automorphism");
    }
    std::vector<Vertex> reps;
    std::vector<Vertex> cls(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v < inv[v]) {
            cls[v] = cls[inv[v]] = static_cast<Vertex>(reps.size());
            reps.push_back(v);
        }
    }
    return {reps, cls};
}

} // namespace detail

struct Quotient {
    Graph graph;
    std::vector<Vertex> projection;
};

/// Quotient of g by a fixed-point-free involutive automorphism.
inline Quotient quotient_graph(const Graph& g, const std::vector<Vertex>& inv) {
    auto [reps, cls] = detail::involution_classes(g, inv);
    std::set<std::pair<Vertex, Vertex>> edges;
    for (Edge e : g.edges()) {
        Vertex a = cls[e.u], b = cls[e.v];
        if (a == b) throw InvalidArgument("quotient would contain a loop");
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    if (edges.size() * 2 != g.size()) throw InvalidArgument("quotient would contain parallel edges");
    std::vector<Edge> list;
    for (auto [a, b] : edges) list.push_back({a, b});
    return {Graph(reps.size(), list), cls};
}

/// Signed scheme whose orientation double cover is `cover` (all signs +),
/// given an orientation-reversing fixed-point-free involution of it. Base
/// vertex i is the orbit of the i-th smallest representative.
inline EmbeddingScheme quotient_scheme(const EmbeddingScheme& cover, const std::vector<Vertex>& inv) {
    require_valid(cover, false);
    if (std::any_of(cover.signature.begin(), cover.signature.end(), [](Sign x) { return x < 0; })) {
        throw InvalidArgument("quotient_scheme needs an all-positive scheme");
    }
    const Graph cg = cover.graph();
    auto [reps, cls] = detail::involution_classes(cg, inv);
    Quotient q = quotient_graph(cg, inv);

    EmbeddingScheme base;
    base.n = reps.size();
    base.edges = q.graph.edges();
    base.signature.resize(base.edges.size());
    base.rotation.resize(base.n);
    auto base_edge = [&](Vertex a, Vertex b) {
        Edge key{std::min(a, b), std::max(a, b)};
        return static_cast<EdgeId>(std::lower_bound(base.edges.begin(), base.edges.end(), key) - base.edges.begin());
    };
    for (std::size_t e = 0; e < base.edges.size(); ++e) {
        Vertex ru = reps[base.edges[e].u], rv = reps[base.edges[e].v];
        base.signature[e] = cg.adjacent(ru, rv) ? 1 : -1;
    }
    auto image = [&](Vertex x) {
        std::vector<EdgeId> out;
        for (EdgeId e : cover.rotation[x]) out.push_back(base_edge(cls[x], cls[cover.other_end(e, x)]));
        return out;
    };
    auto same_cycle = [](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
        if (a.size() != b.size()) return false;
        if (a.empty()) return true;
        auto it = std::find(b.begin(), b.end(), a[0]);
        if (it == b.end()) return false;
        std::vector<EdgeId> rotated(it, b.end());
        rotated.insert(rotated.end(), b.begin(), it);
        return rotated == a;
    };
    for (Vertex i = 0; i < base.n; ++i) {
        base.rotation[i] = image(reps[i]);
        auto mirror = image(inv[reps[i]]);
        std::reverse(mirror.begin(), mirror.end());
        if (!same_cycle(base.rotation[i], mirror)) {
            throw InvalidArgument("involution does not reverse the orientation at vertex " + std::to_string(reps[i]));
        }
    }
    require_valid(base, false);
    return base;
}

/// Smallest vertex of N[s] lying over `target`, if any.
inline std::optional<Vertex> lift_step(const CoveringMap& map, Vertex s, Vertex target) {
    if (map.p.at(s) == target) return s;
    for (Vertex x : map.source.neighbors(s))
        if (map.p[x] == target) return x;
    return std::nullopt;
}

} // namespace copsurf
