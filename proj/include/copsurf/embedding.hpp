#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"
#include "copsurf/polyhedra.hpp"

namespace copsurf {

using EdgeId = std::uint32_t;
using Sign = std::int8_t;

/// Signed rotation system: a cyclic order of incident edge ids at each
/// vertex plus a sign per edge. Edge ids index `edges`.
struct EmbeddingScheme {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> rotation;
    std::vector<Sign> signature;

    Graph graph() const { return Graph(n, edges); }

    Vertex other_end(EdgeId e, Vertex v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }

    friend bool operator==(const EmbeddingScheme&, const EmbeddingScheme&) = default;
};

/// Structural problems with a scheme; empty means valid. With
/// `require_connected` a disconnected graph is reported as well, since only
/// connected graphs have cellular embeddings.
inline std::vector<std::string> validate_scheme(const EmbeddingScheme& s, bool require_connected = true) {
    std::vector<std::string> out;
    if (s.rotation.size() != s.n) {
        out.push_back("rotation lists " + std::to_string(s.rotation.size()) + " vertices, expected " +
                      std::to_string(s.n));
    }
    if (s.signature.size() != s.edges.size()) {
        out.push_back("signature has " + std::to_string(s.signature.size()) + " entries for " +
                      std::to_string(s.edges.size()) + " edges");
    }
    for (std::size_t e = 0; e < s.signature.size(); ++e) {
        if (s.signature[e] != 1 && s.signature[e] != -1) {
            out.push_back("edge " + std::to_string(e) + " has signature " + std::to_string(s.signature[e]));
        }
    }
    bool edges_ok = true;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        auto [u, v] = s.edges[e];
        if (u >= s.n || v >= s.n) {
            out.push_back("edge " + std::to_string(e) + " has an endpoint out of range");
            edges_ok = false;
        } else if (u == v) {
            out.push_back("edge " + std::to_string(e) + " is a loop");
            edges_ok = false;
        } else if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            out.push_back("edge " + std::to_string(e) + " is parallel to an earlier edge");
            edges_ok = false;
        }
    }
    if (!edges_ok || s.rotation.size() != s.n) return out;

    for (Vertex v = 0; v < s.n; ++v) {
        std::map<EdgeId, int> count;
        for (EdgeId e : s.rotation[v]) {
            if (e >= s.edges.size()) {
                out.push_back("rotation at vertex " + std::to_string(v) + " names unknown edge " + std::to_string(e));
                continue;
            }
            if (s.edges[e].u != v && s.edges[e].v != v) {
                out.push_back("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
            }
            ++count[e];
        }
        for (auto [e, c] : count) {
            if (c > 1) out.push_back("edge " + std::to_string(e) + " repeated at vertex " + std::to_string(v));
        }
    }
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        for (Vertex end : {s.edges[e].u, s.edges[e].v}) {
            const auto& rot = s.rotation[end];
            if (std::find(rot.begin(), rot.end(), static_cast<EdgeId>(e)) == rot.end()) {
                out.push_back("edge " + std::to_string(e) + " missing at vertex " + std::to_string(end));
            }
        }
    }
    if (require_connected && out.empty() && !is_connected(s.graph())) {
        out.push_back("not cellular-capable: graph is disconnected");
    }
    return out;
}

inline void require_valid(const EmbeddingScheme& s, bool require_connected = true) {
    auto problems = validate_scheme(s, require_connected);
    if (problems.empty()) return;
    std::string msg = "invalid embedding scheme:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InvalidArgument(msg);
}

/// Build a scheme from per-vertex neighbour orders. Edge ids follow g.edges().
inline EmbeddingScheme scheme_from_neighbor_orders(const Graph& g, const std::vector<std::vector<Vertex>>& order,
                                                   std::vector<Sign> signature = {}) {
    EmbeddingScheme s;
    s.n = g.order();
    s.edges = g.edges();
    s.signature = signature.empty() ? std::vector<Sign>(s.edges.size(), 1) : std::move(signature);
    s.rotation.resize(s.n);
    auto id_of = [&](Vertex a, Vertex b) {
        Edge key{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(s.edges.begin(), s.edges.end(), key);
        if (it == s.edges.end() || *it != key) {
            throw InvalidArgument("no edge " + std::to_string(a) + "-" + std::to_string(b));
        }
        return static_cast<EdgeId>(it - s.edges.begin());
    };
    if (order.size() != s.n) throw InvalidArgument("neighbour orders for wrong vertex count");
    for (Vertex v = 0; v < s.n; ++v)
        for (Vertex w : order[v]) s.rotation[v].push_back(id_of(v, w));
    require_valid(s, false);
    return s;
}

/// One traversal of an edge inside a facial walk: leave `from` along `edge`
/// while carrying local orientation `orientation`.
struct FaceStep {
    Vertex from = 0;
    EdgeId edge = 0;
    Sign orientation = 1;
};

/// Facial walks, one per face. An isolated vertex contributes one empty walk.
struct FaceSet {
    std::vector<std::vector<FaceStep>> faces;

    std::size_t count() const noexcept { return faces.size(); }

    std::size_t total_length() const {
        std::size_t t = 0;
        for (const auto& f : faces) t += f.size();
        return t;
    }
};

namespace detail {

// Darts: 2e is edge e leaving edges[e].u, 2e+1 leaves edges[e].v.
// A walk state is (dart, orientation) packed as 2*dart + (orientation < 0).
struct DartTables {
    std::vector<std::uint32_t> succ;
    std::vector<std::uint32_t> pred;
    std::vector<Vertex> tail;

    explicit DartTables(const EmbeddingScheme& s) : succ(2 * s.edges.size()), pred(2 * s.edges.size()), tail(2 * s.edges.size()) {
        for (std::size_t e = 0; e < s.edges.size(); ++e) {
            tail[2 * e] = s.edges[e].u;
            tail[2 * e + 1] = s.edges[e].v;
        }
        for (Vertex v = 0; v < s.n; ++v) rebuild(s, v);
    }

    void rebuild(const EmbeddingScheme& s, Vertex v) {
        const auto& rot = s.rotation[v];
        const std::size_t d = rot.size();
        for (std::size_t i = 0; i < d; ++i) {
            std::uint32_t here = dart(s, rot[i], v);
            std::uint32_t next = dart(s, rot[(i + 1) % d], v);
            succ[here] = next;
            pred[next] = here;
        }
    }

    static std::uint32_t dart(const EmbeddingScheme& s, EdgeId e, Vertex from) {
        return 2 * e + (s.edges[e].u == from ? 0 : 1);
    }
};

inline std::uint32_t walk_step(const DartTables& t, const std::vector<Sign>& sig, std::uint32_t state) {
    const std::uint32_t d = state >> 1;
    const int eps = (state & 1) ? -1 : 1;
    const int next_eps = eps * sig[d >> 1];
    const std::uint32_t back = d ^ 1u;
    const std::uint32_t nd = next_eps > 0 ? t.succ[back] : t.pred[back];
    return 2 * nd + (next_eps < 0 ? 1u : 0u);
}

// Reverse traversal of the same edge; pairs each facial walk with its mirror.
inline std::uint32_t mirror_state(const std::vector<Sign>& sig, std::uint32_t state) {
    const std::uint32_t d = state >> 1;
    const int eps = (state & 1) ? -1 : 1;
    const int m = -eps * sig[d >> 1];
    return 2 * (d ^ 1u) + (m < 0 ? 1u : 0u);
}

inline std::size_t isolated_vertices(const EmbeddingScheme& s) {
    return static_cast<std::size_t>(
        std::count_if(s.rotation.begin(), s.rotation.end(), [](const auto& r) { return r.empty(); }));
}

// Face count via orbit counting: the 4E walk states split into mirror pairs of orbits.
inline std::size_t count_faces(const DartTables& t, const std::vector<Sign>& sig, std::vector<std::uint8_t>& seen) {
    const std::size_t states = 2 * t.succ.size();
    seen.assign(states, 0);
    std::size_t orbits = 0;
    for (std::uint32_t s0 = 0; s0 < states; ++s0) {
        if (seen[s0]) continue;
        ++orbits;
        std::uint32_t s = s0;
        do {
            seen[s] = 1;
            s = walk_step(t, sig, s);
        } while (s != s0);
    }
    return orbits / 2;
}

} // namespace detail

/// Trace every face. Works on any structurally valid scheme, connected or not.
inline FaceSet trace_faces(const EmbeddingScheme& s) {
    require_valid(s, false);
    detail::DartTables t(s);
    const std::size_t states = 4 * s.edges.size();
    std::vector<std::uint8_t> seen(states, 0);
    FaceSet out;
    for (std::uint32_t s0 = 0; s0 < states; ++s0) {
        if (seen[s0]) continue;
        std::vector<FaceStep> walk;
        std::uint32_t st = s0;
        do {
            seen[st] = 1;
            seen[detail::mirror_state(s.signature, st)] = 1;
            const std::uint32_t d = st >> 1;
            walk.push_back({t.tail[d], d >> 1, static_cast<Sign>((st & 1) ? -1 : 1)});
            st = detail::walk_step(t, s.signature, st);
        } while (st != s0);
        out.faces.push_back(std::move(walk));
    }
    for (std::size_t i = 0; i < detail::isolated_vertices(s); ++i) out.faces.emplace_back();
    return out;
}

inline std::size_t face_count(const EmbeddingScheme& s) {
    require_valid(s, false);
    detail::DartTables t(s);
    std::vector<std::uint8_t> seen;
    return detail::count_faces(t, s.signature, seen) + detail::isolated_vertices(s);
}

/// V - E + F, summed over components.
inline long long euler_characteristic(const EmbeddingScheme& s) {
    return static_cast<long long>(s.n) - static_cast<long long>(s.edges.size()) +
           static_cast<long long>(face_count(s));
}

/// 2 - V + E - F of a cellular (connected) scheme.
inline std::size_t euler_genus(const EmbeddingScheme& s) {
    require_valid(s, true);
    long long g = 2 - euler_characteristic(s);
    if (g < 0) throw InvariantError("negative Euler genus");
    return static_cast<std::size_t>(g);
}

namespace detail {

// Vertex switch values making every BFS-tree edge positive (per component).
inline std::vector<Sign> tree_switching(const EmbeddingScheme& s, std::vector<bool>* tree_edge = nullptr) {
    std::vector<Sign> sw(s.n, 0);
    if (tree_edge) tree_edge->assign(s.edges.size(), false);
    for (Vertex root = 0; root < s.n; ++root) {
        if (sw[root] != 0) continue;
        sw[root] = 1;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            // Neighbours in increasing vertex order for a canonical tree.
            std::vector<std::pair<Vertex, EdgeId>> nb;
            for (EdgeId e : s.rotation[v]) nb.emplace_back(s.other_end(e, v), e);
            std::sort(nb.begin(), nb.end());
            for (auto [w, e] : nb) {
                if (sw[w] != 0) continue;
                sw[w] = static_cast<Sign>(sw[v] * s.signature[e]);
                if (tree_edge) (*tree_edge)[e] = true;
                queue.push_back(w);
            }
        }
    }
    return sw;
}

} // namespace detail

/// Every cycle has positive sign product, i.e. some switching makes all signs +.
inline bool is_orientable_scheme(const EmbeddingScheme& s) {
    require_valid(s, false);
    auto sw = detail::tree_switching(s);
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        if (sw[s.edges[e].u] * s.signature[e] * sw[s.edges[e].v] < 0) return false;
    }
    return true;
}

/// Local switch at v: flip the sign of every edge at v and reverse the
/// rotation at v. Describes the same embedded surface.
inline EmbeddingScheme switch_vertex(EmbeddingScheme s, Vertex v) {
    if (v >= s.n) throw InvalidArgument("vertex out of range");
    for (EdgeId e : s.rotation[v]) s.signature[e] = static_cast<Sign>(-s.signature[e]);
    std::reverse(s.rotation[v].begin(), s.rotation[v].end());
    return s;
}

/// Switch-equivalent scheme whose BFS-tree edges are all positive. For an
/// orientable scheme every sign becomes +.
inline EmbeddingScheme tree_normal_form(const EmbeddingScheme& s) {
    require_valid(s, false);
    auto sw = detail::tree_switching(s);
    EmbeddingScheme out = s;
    for (Vertex v = 0; v < s.n; ++v) {
        if (sw[v] < 0) out = switch_vertex(std::move(out), v);
    }
    return out;
}

/// Turn an orientable embedding non-orientable by making one fundamental
/// cycle negative: switch to the all-positive form, then flip the smallest
/// (by endpoints) edge outside the BFS tree from vertex 0. The Euler genus of
/// the result is checked to differ by at most one.
inline EmbeddingScheme add_crosscap(const EmbeddingScheme& s) {
    require_valid(s, true);
    if (!is_orientable_scheme(s)) throw InvalidArgument("add_crosscap needs an orientable scheme");
    EmbeddingScheme out = tree_normal_form(s);
    std::vector<bool> tree;
    detail::tree_switching(out, &tree);
    std::optional<EdgeId> pick;
    auto key = [&](EdgeId e) { return std::minmax(out.edges[e].u, out.edges[e].v); };
    for (EdgeId e = 0; e < out.edges.size(); ++e) {
        if (tree[e]) continue;
        if (!pick || key(e) < key(*pick)) pick = e;
    }
    if (!pick) throw InvalidArgument("no crosscap possible: graph is acyclic");
    out.signature[*pick] = static_cast<Sign>(-out.signature[*pick]);

    const auto before = static_cast<long long>(euler_genus(s));
    const auto after = static_cast<long long>(euler_genus(out));
    if (is_orientable_scheme(out) || after > before + 1 || after < before - 1) {
        throw InvariantError("crosscap addition broke the genus bound: " + std::to_string(before) + " -> " +
                             std::to_string(after));
    }
    return out;
}

enum class GenusMode { Orientable, NonOrientable, Any };

struct GenusSearchOptions {
    /// Maximum number of schemes examined.
    std::uint64_t budget = 50'000'000;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct GenusSearchResult {
    std::size_t euler_genus = 0;
    EmbeddingScheme witness;
    std::uint64_t space = 0;
    bool orientable = true;

    /// Orientable genus (handles) when the witness is orientable.
    std::optional<std::size_t> orientable_genus() const {
        return orientable ? std::optional<std::size_t>(euler_genus / 2) : std::nullopt;
    }
};

/// Number of schemes min_euler_genus would enumerate, saturating.
inline std::uint64_t genus_search_space(const Graph& g, GenusMode mode) {
    unsigned __int128 total = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (Vertex v = 0; v < g.order(); ++v) {
        for (std::size_t f = 2; f < g.degree(v); ++f) {
            total *= f;
            if (total > cap) return cap;
        }
    }
    if (mode != GenusMode::Orientable) {
        const std::size_t beta = g.size() + component_count(g) - g.order();
        if (beta >= 64) return cap;
        unsigned __int128 masks = (static_cast<unsigned __int128>(1) << beta);
        if (mode == GenusMode::NonOrientable) masks -= 1;
        total *= masks;
        if (total > cap) return cap;
    }
    return static_cast<std::uint64_t>(total);
}

/// Exhaustive minimum Euler genus over all rotation systems, with signatures
/// restricted to switching-class representatives (BFS-tree edges positive).
/// Ties resolve to the first scheme in enumeration order, for any thread count.
inline GenusSearchResult min_euler_genus(const Graph& g, GenusMode mode, const GenusSearchOptions& opts = {}) {
    if (g.order() == 0 || !is_connected(g)) throw InvalidArgument("genus search needs a connected graph");
    const std::uint64_t space = genus_search_space(g, mode);
    if (space > opts.budget) {
        throw CapacityError("genus search space of " + std::to_string(space) + " schemes exceeds the budget of " +
                            std::to_string(opts.budget));
    }
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> base_order(n);
    for (Vertex v = 0; v < n; ++v) base_order[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    const EmbeddingScheme base = scheme_from_neighbor_orders(g, base_order);

    std::vector<bool> tree;
    detail::tree_switching(base, &tree);
    std::vector<EdgeId> cotree;
    for (EdgeId e = 0; e < base.edges.size(); ++e)
        if (!tree[e]) cotree.push_back(e);
    if (mode == GenusMode::NonOrientable && cotree.empty()) {
        throw InvalidArgument("acyclic graph has no non-orientable embedding");
    }
    const std::uint64_t mask_begin = mode == GenusMode::NonOrientable ? 1 : 0;
    const std::uint64_t mask_end = mode == GenusMode::Orientable ? 1 : (std::uint64_t{1} << cotree.size());

    // Rotation system index: mixed radix over vertices, digit v is the
    // lexicographic rank of the permutation of rotation[v][1..].
    std::vector<std::uint64_t> radix(n, 1);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t f = 2; f < g.degree(v); ++f) radix[v] *= f;
    std::uint64_t rotations = 1;
    for (auto r : radix) rotations *= r;

    const long long lower = mode == GenusMode::NonOrientable ? 1 : 0;
    struct Best {
        long long genus = std::numeric_limits<long long>::max();
        std::uint64_t rotation = 0;
        std::uint64_t mask = 0;
    };

    auto decode = [&](std::uint64_t index) {
        EmbeddingScheme s = base;
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t digit = index % radix[v];
            index /= radix[v];
            auto& rot = s.rotation[v];
            if (rot.size() < 3) continue;
            // Lehmer decode of the tail permutation.
            std::vector<EdgeId> pool(rot.begin() + 1, rot.end());
            std::vector<EdgeId> tail;
            std::uint64_t fact = radix[v];
            for (std::size_t left = pool.size(); left > 0; --left) {
                fact /= left;
                std::size_t pos = digit / fact;
                digit %= fact;
                tail.push_back(pool[pos]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
            }
            std::copy(tail.begin(), tail.end(), rot.begin() + 1);
        }
        return s;
    };

    auto scan = [&](std::uint64_t first, std::uint64_t last) {
        Best best;
        if (first >= last) return best;
        EmbeddingScheme s = decode(first);
        detail::DartTables tables(s);
        std::vector<std::uint8_t> seen;
        std::vector<Sign> sig(s.edges.size(), 1);
        const long long ve = static_cast<long long>(n) - static_cast<long long>(s.edges.size());
        for (std::uint64_t idx = first; idx < last; ++idx) {
            for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
                for (std::size_t i = 0; i < cotree.size(); ++i) sig[cotree[i]] = (mask >> i & 1) ? -1 : 1;
                long long genus = 2 - ve - static_cast<long long>(detail::count_faces(tables, sig, seen));
                if (genus < best.genus) best = {genus, idx, mask};
                if (best.genus == lower) return best;
            }
            // Advance the odometer; vertex 0 is the fastest digit.
            for (Vertex v = 0; v < n; ++v) {
                auto& rot = s.rotation[v];
                bool carry = rot.size() < 3 || !std::next_permutation(rot.begin() + 1, rot.end());
                tables.rebuild(s, v);
                if (!carry) break;
            }
        }
        return best;
    };

    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, rotations));
    std::vector<Best> partial(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t first = rotations * w / workers;
            std::uint64_t last = rotations * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] { partial[w] = scan(first, last); });
        }
    }
    Best best;
    for (const auto& b : partial) {
        if (b.genus < best.genus ||
            (b.genus == best.genus && std::pair(b.rotation, b.mask) < std::pair(best.rotation, best.mask)))
            best = b;
    }

    GenusSearchResult out;
    out.space = space;
    out.witness = decode(best.rotation);
    for (std::size_t i = 0; i < cotree.size(); ++i)
        out.witness.signature[cotree[i]] = (best.mask >> i & 1) ? -1 : 1;
    out.euler_genus = euler_genus(out.witness);
    if (static_cast<long long>(out.euler_genus) != best.genus) throw InvariantError("genus search witness mismatch");
    out.orientable = is_orientable_scheme(out.witness);
    return out;
}

/// Orientable scheme from a list of facial cycles given in one consistent
/// direction. Consecutive (a, w, b) on a face place edge wb right after wa
/// in the rotation at w.
inline EmbeddingScheme scheme_from_faces(std::size_t n, const std::vector<std::vector<Vertex>>& faces) {
    std::set<std::pair<Vertex, Vertex>> edge_set;
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Vertex a = f[i], b = f[(i + 1) % f.size()];
            edge_set.insert({std::min(a, b), std::max(a, b)});
        }
    }
    std::vector<Edge> edges;
    for (auto [a, b] : edge_set) edges.push_back({a, b});
    Graph g(n, edges);
    std::vector<std::map<Vertex, Vertex>> next(n);
    for (const auto& f : faces) {
        const std::size_t m = f.size();
        for (std::size_t i = 0; i < m; ++i) {
            Vertex a = f[(i + m - 1) % m], w = f[i], b = f[(i + 1) % m];
            if (!next[w].emplace(a, b).second) throw InvalidArgument("face list is not a consistent surface");
        }
    }
    std::vector<std::vector<Vertex>> order(n);
    for (Vertex w = 0; w < n; ++w) {
        if (g.degree(w) == 0) continue;
        Vertex start = g.neighbors(w)[0];
        Vertex cur = start;
        do {
            order[w].push_back(cur);
            auto it = next[w].find(cur);
            if (it == next[w].end()) throw InvalidArgument("face list leaves a gap around a vertex");
            cur = it->second;
        } while (cur != start && order[w].size() <= g.degree(w));
        if (order[w].size() != g.degree(w)) throw InvalidArgument("vertex neighbourhood is not a single disc");
    }
    return scheme_from_neighbor_orders(g, order);
}

/// Planar scheme of a convex polyhedron: neighbours sorted counterclockwise
/// as seen from outside.
inline EmbeddingScheme planar_scheme(const Polyhedron& p) {
    const Graph& g = p.skeleton;
    std::vector<std::vector<Vertex>> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const Point3& c = p.points[v];
        auto sub = [](const Point3& a, const Point3& b) { return Point3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
        auto dot = [](const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
        auto cross = [](const Point3& a, const Point3& b) {
            return Point3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        };
        const double nn = dot(c, c);
        auto tangent = [&](Vertex w) {
            Point3 d = sub(p.points[w], c);
            double k = dot(d, c) / nn;
            return Point3{d[0] - k * c[0], d[1] - k * c[1], d[2] - k * c[2]};
        };
        auto nb = g.neighbors(v);
        Point3 e1 = tangent(nb[0]);
        Point3 e2 = cross(c, e1);
        std::vector<std::pair<double, Vertex>> angles;
        for (Vertex w : nb) {
            Point3 d = tangent(w);
            double a = std::atan2(dot(d, e2), dot(d, e1));
            if (a < -1e-9) a += 2 * M_PI;
            angles.emplace_back(std::max(a, 0.0), w);
        }
        std::sort(angles.begin(), angles.end());
        for (auto [a, w] : angles) order[v].push_back(w);
    }
    return scheme_from_neighbor_orders(g, order);
}

/// Random maximal planar graph on n >= 3 vertices: vertex insertion into
/// random faces followed by random edge flips.
inline EmbeddingScheme random_planar_triangulation(std::size_t n, std::uint64_t seed, std::size_t flips = 0) {
    if (n < 3) throw InvalidArgument("triangulation needs at least three vertices");
    std::mt19937_64 rng(seed);
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    std::set<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {1, 2}};
    auto key = [](Vertex a, Vertex b) { return std::pair(std::min(a, b), std::max(a, b)); };
    for (Vertex x = 3; x < n; ++x) {
        const std::size_t fi = rng() % faces.size();
        const auto [a, b, c] = faces[fi];
        faces[fi] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
        edges.insert(key(a, x));
        edges.insert(key(b, x));
        edges.insert(key(c, x));
    }
    if (flips == 0) flips = 3 * n;
    for (std::size_t it = 0; it < flips; ++it) {
        std::size_t f1 = rng() % faces.size();
        std::size_t side = rng() % 3;
        Vertex a = faces[f1][side], b = faces[f1][(side + 1) % 3], c = faces[f1][(side + 2) % 3];
        std::size_t f2 = faces.size();
        Vertex d = 0;
        for (std::size_t j = 0; j < faces.size(); ++j) {
            for (int r = 0; r < 3; ++r) {
                if (faces[j][r] == b && faces[j][(r + 1) % 3] == a) {
                    f2 = j;
                    d = faces[j][(r + 2) % 3];
                }
            }
        }
        if (f2 == faces.size() || c == d || edges.count(key(c, d))) continue;
        edges.erase(key(a, b));
        edges.insert(key(c, d));
        faces[f1] = {a, d, c};
        faces[f2] = {d, b, c};
    }
    std::vector<std::vector<Vertex>> face_list;
    for (const auto& f : faces) face_list.push_back({f[0], f[1], f[2]});
    return scheme_from_faces(n, face_list);
}

/// Uniformly shuffled rotations; each edge negative with probability
/// `negative_probability`.
inline EmbeddingScheme random_scheme(const Graph& g, std::uint64_t seed, double negative_probability = 0.5) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        order[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        for (std::size_t i = order[v].size(); i > 1; --i) std::swap(order[v][i - 1], order[v][rng() % i]);
    }
    std::vector<Sign> sig(g.size());
    for (auto& x : sig) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 < negative_probability ? -1 : 1;
    return scheme_from_neighbor_orders(g, order, sig);
}

} // namespace copsurf
