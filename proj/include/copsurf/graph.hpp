#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "copsurf/error.hpp"

namespace copsurf {

using Vertex = std::uint32_t;

/// Undirected edge stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adj_(n) {}

    /// Throws InvalidArgument on loops, repeated edges or out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
        edges_.reserve(edges.size());
        for (Edge e : edges) {
            if (e.u >= n || e.v >= n) {
                throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      ") has an endpoint >= " + std::to_string(n));
            }
            if (e.u == e.v) {
                throw InvalidArgument("loop at vertex " + std::to_string(e.u));
            }
            if (e.u > e.v) std::swap(e.u, e.v);
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) {
            throw InvalidArgument("parallel edge (" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + ")");
        }
        for (Edge e : edges_) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }

    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(n, to_edges(edges)) {}

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& list = adj_.at(u);
        return std::binary_search(list.begin(), list.end(), v);
    }

    /// Edges sorted lexicographically, each with u < v.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> list) {
        std::vector<Edge> out;
        for (auto [u, v] : list) out.push_back({u, v});
        return out;
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Open (N(v)) or closed (N[v]) neighbourhood.
inline VertexSet neighborhood(const Graph& g, Vertex v, bool closed) {
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    auto nb = g.neighbors(v);
    VertexSet out(nb.begin(), nb.end());
    if (closed) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

/// Component id per vertex, numbered in order of smallest member.
inline std::vector<std::uint32_t> component_labels(const Graph& g) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(g.order(), unset);
    std::uint32_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

inline std::size_t component_count(const Graph& g) {
    auto label = component_labels(g);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

/// Length of a shortest cycle; 0 for forests.
inline std::size_t girth(const Graph& g) {
    std::size_t best = 0;
    const std::size_t n = g.order();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
        dist[s] = 0;
        parent[s] = s;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    std::size_t len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline std::size_t min_degree(const Graph& g) {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return g.order() == 0 ? 0 : d;
}

/// Subgraph induced by `keep` (sorted); vertex i of the result is keep[i].
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<std::int64_t> index(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0) {
            edges.push_back({static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v])});
        }
    }
    return Graph(keep.size(), edges);
}

/// Relabel so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw InvalidArgument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (Edge e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.order(), edges);
}

} // namespace copsurf
