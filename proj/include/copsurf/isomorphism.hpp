#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "copsurf/graph.hpp"

namespace copsurf {

namespace detail {

// Degree followed by the sorted degrees of the neighbours.
inline std::vector<std::vector<std::size_t>> vertex_invariants(const Graph& g) {
    std::vector<std::vector<std::size_t>> inv(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        inv[v].push_back(g.degree(v));
        std::vector<std::size_t> nd;
        for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    return inv;
}

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h)
        : g_(g), h_(h), inv_g_(vertex_invariants(g)), inv_h_(vertex_invariants(h)),
          map_(g.order(), kNone), inverse_(h.order(), kNone) {
        // BFS order per component so that later vertices usually have a mapped neighbour.
        std::vector<bool> seen(g.order(), false);
        for (Vertex s = 0; s < g.order(); ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            std::size_t head = order_.size();
            order_.push_back(s);
            while (head < order_.size()) {
                Vertex v = order_[head++];
                for (Vertex w : g.neighbors(v)) {
                    if (!seen[w]) {
                        seen[w] = true;
                        order_.push_back(w);
                    }
                }
            }
        }
    }

    std::optional<std::vector<Vertex>> run() {
        if (!extend(0)) return std::nullopt;
        return map_;
    }

private:
    static constexpr Vertex kNone = static_cast<Vertex>(-1);

    bool consistent(Vertex v, Vertex c) const {
        if (inv_g_[v] != inv_h_[c]) return false;
        std::size_t mapped_nb = 0;
        for (Vertex x : g_.neighbors(v)) {
            if (map_[x] == kNone) continue;
            if (!h_.adjacent(c, map_[x])) return false;
            ++mapped_nb;
        }
        std::size_t image_nb = 0;
        for (Vertex y : h_.neighbors(c)) image_nb += inverse_[y] != kNone;
        return mapped_nb == image_nb;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        Vertex v = order_[depth];
        Vertex anchor = kNone;
        for (Vertex x : g_.neighbors(v)) {
            if (map_[x] != kNone) {
                anchor = x;
                break;
            }
        }
        auto attempt = [&](Vertex c) {
            if (inverse_[c] != kNone || !consistent(v, c)) return false;
            map_[v] = c;
            inverse_[c] = v;
            if (extend(depth + 1)) return true;
            map_[v] = kNone;
            inverse_[c] = kNone;
            return false;
        };
        if (anchor != kNone) {
            for (Vertex c : h_.neighbors(map_[anchor])) {
                if (attempt(c)) return true;
            }
        } else {
            for (Vertex c = 0; c < h_.order(); ++c) {
                if (attempt(c)) return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<std::vector<std::size_t>> inv_g_;
    std::vector<std::vector<std::size_t>> inv_h_;
    std::vector<Vertex> map_;
    std::vector<Vertex> inverse_;
    std::vector<Vertex> order_;
};

} // namespace detail

/// True iff `perm` maps edges of g bijectively onto edges of h.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& perm) {
    if (g.order() != h.order() || g.size() != h.size() || perm.size() != g.order()) return false;
    std::vector<bool> hit(h.order(), false);
    for (Vertex x : perm) {
        if (x >= h.order() || hit[x]) return false;
        hit[x] = true;
    }
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](Edge e) { return h.adjacent(perm[e.u], perm[e.v]); });
}

/// Backtracking isomorphism search with degree / neighbour-degree pruning.
/// Returns a verified witness mapping g -> h when one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    auto ig = detail::vertex_invariants(g);
    auto ih = detail::vertex_invariants(h);
    std::sort(ig.begin(), ig.end());
    std::sort(ih.begin(), ih.end());
    if (ig != ih) return std::nullopt;
    auto witness = detail::IsoSearch(g, h).run();
    if (witness && !is_isomorphism(g, h, *witness)) {
        throw InvariantError("isomorphism search produced an invalid witness");
    }
    return witness;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

} // namespace copsurf
