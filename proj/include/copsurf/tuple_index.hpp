#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"

namespace copsurf {

/// Canonical cop placement: a sorted multiset of k vertices.
using CopTuple = std::vector<Vertex>;

/// C(n, k) saturating at uint64 max.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

/// Dense ranking of sorted k-multisets over n symbols (stars and bars).
///
/// A multiset c_0 <= ... <= c_{k-1} maps to the strictly increasing sequence
/// d_i = c_i + i over n+k-1 symbols, which is ranked in colexicographic order
/// by sum_i C(d_i, i+1).
class TupleIndexer {
public:
    TupleIndexer() = default;

    TupleIndexer(std::size_t n, std::size_t k) : n_(n), k_(k), binom_(n + k + 1, std::vector<std::uint64_t>(k + 2, 0)) {
        for (std::size_t a = 0; a < binom_.size(); ++a) {
            binom_[a][0] = 1;
            for (std::size_t b = 1; b <= k + 1 && b <= a; ++b) {
                binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
            }
        }
        count_ = binomial_saturating(n + k - 1, k);
    }

    std::size_t vertices() const noexcept { return n_; }
    std::size_t cops() const noexcept { return k_; }
    std::uint64_t count() const noexcept { return count_; }

    std::uint64_t rank(std::span<const Vertex> sorted) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < k_; ++i) r += binom_[sorted[i] + i][i + 1];
        return r;
    }

    void unrank(std::uint64_t r, std::span<Vertex> out) const {
        for (std::size_t i = k_; i-- > 0;) {
            // Largest d with C(d, i+1) <= r.
            std::size_t d = i;
            while (d + 2 < n_ + k_ && binom_[d + 1][i + 1] <= r) ++d;
            r -= binom_[d][i + 1];
            out[i] = static_cast<Vertex>(d - i);
        }
    }

    CopTuple unrank(std::uint64_t r) const {
        CopTuple t(k_);
        unrank(r, t);
        return t;
    }

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::uint64_t count_ = 0;
    std::vector<std::vector<std::uint64_t>> binom_;
};

/// Whether `to` is reachable from `from` in one cop move: each cop stays or
/// steps to a neighbour (perfect matching on the closed-adjacency relation).
inline bool is_legal_cop_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
    if (from.size() != to.size()) return false;
    const std::size_t k = from.size();
    for (Vertex v : from) if (v >= g.order()) return false;
    for (Vertex v : to) if (v >= g.order()) return false;
    auto ok = [&](std::size_t i, std::size_t j) { return from[i] == to[j] || g.adjacent(from[i], to[j]); };
    std::vector<std::size_t> match_to(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<bool> seen(k, false);
        auto augment = [&](auto&& self, std::size_t a) -> bool {
            for (std::size_t j = 0; j < k; ++j) {
                if (!ok(a, j) || seen[j]) continue;
                seen[j] = true;
                if (match_to[j] == k || self(self, match_to[j])) {
                    match_to[j] = a;
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, i)) return false;
    }
    return true;
}

inline bool contains(std::span<const Vertex> cops, Vertex r) {
    for (Vertex c : cops) if (c == r) return true;
    return false;
}

} // namespace copsurf
