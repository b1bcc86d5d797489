#pragma once

// Reference implementations used only by the tests. Apart from the Graph
// container and the scheme struct they are written from scratch.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsurf/embedding.hpp"
#include "copsurf/graph.hpp"
#include "copsurf/solver.hpp"

namespace oracle {

using copsurf::Graph;
using copsurf::Vertex;

/// Adjacency matrix from a graph6 string, decoded bit by bit.
inline std::vector<std::vector<bool>> decode_graph6(const std::string& s) {
    std::size_t pos = 0, n = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s[1] != 126) {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        return {};
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<bool> bits;
    for (; pos < s.size(); ++pos)
        for (int b = 5; b >= 0; --b) bits.push_back(((s[pos] - 63) >> b) & 1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (bits.at(k)) adj[i][j] = adj[j][i] = true;
    return adj;
}

/// Exact capture times of the k-cop game by depth-bounded minimax over
/// ordered cop tuples. time[c][r] = fewest cop moves needed from a cops-to-move
/// position (c, r), or kInf if the robber escapes forever.
class Minimax {
public:
    static constexpr int kInf = std::numeric_limits<int>::max();

    Minimax(const Graph& g, std::size_t k) : n_(g.order()), k_(k) {
        if (n_ > 64) throw std::invalid_argument("oracle handles at most 64 vertices");
        closed_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            closed_[v].push_back(v);
            for (Vertex w : g.neighbors(v)) closed_[v].push_back(w);
        }
        total_ = 1;
        for (std::size_t i = 0; i < k_; ++i) total_ *= n_;
        for (std::size_t c = 0; c < total_; ++c) {
            std::uint64_t mask = 0;
            for (Vertex v : decode(c)) mask |= std::uint64_t{1} << v;
            occ_.push_back(mask);
        }
        for (std::size_t c = 0; c < total_; ++c) moves_.push_back(cop_moves(c));
        solve();
    }

    std::size_t encode(const std::vector<Vertex>& cops) const {
        std::size_t c = 0;
        for (Vertex v : cops) c = c * n_ + v;
        return c;
    }

    std::vector<Vertex> decode(std::size_t c) const {
        std::vector<Vertex> out(k_);
        for (std::size_t i = k_; i-- > 0; c /= n_) out[i] = static_cast<Vertex>(c % n_);
        return out;
    }

    bool occupied(std::size_t c, Vertex r) const { return (occ_[c] >> r) & 1; }

    /// Cops to move at (cops, r) with r not on a cop.
    int time(const std::vector<Vertex>& cops, Vertex r) const { return time_.at(encode(cops) * n_ + r); }

    /// Half-move rank of a robber-to-move position (cops, r), r not on a cop; kInf if escaping.
    int robber_rank(const std::vector<Vertex>& cops, Vertex r) const {
        const std::size_t c = encode(cops);
        int worst = 0;
        for (Vertex r2 : closed_[r]) {
            if (occupied(c, r2)) {
                worst = std::max(worst, 1);
                continue;
            }
            int t = time_[c * n_ + r2];
            if (t == kInf) return kInf;
            worst = std::max(worst, 2 * t);
        }
        return worst;
    }

    bool copwin() const {
        for (std::size_t c = 0; c < total_; ++c) {
            bool all = true;
            for (Vertex r = 0; r < n_ && all; ++r) all = occupied(c, r) || time_[c * n_ + r] != kInf;
            if (all) return true;
        }
        return false;
    }

private:
    std::vector<std::size_t> cop_moves(std::size_t c) const {
        std::set<std::size_t> out;
        auto cops = decode(c);
        std::vector<Vertex> next(k_);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == k_) {
                out.insert(encode(next));
                return;
            }
            for (Vertex w : closed_[cops[i]]) {
                next[i] = w;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        return {out.begin(), out.end()};
    }

    // win[d][(c, r)]: cops to move capture within d cop moves.
    void solve() {
        std::vector<char> win(total_ * n_, 0);
        time_.assign(total_ * n_, kInf);
        for (int d = 1;; ++d) {
            std::vector<char> next(total_ * n_, 0);
            bool changed = false;
            for (std::size_t c = 0; c < total_; ++c) {
                for (Vertex r = 0; r < n_; ++r) {
                    if (occupied(c, r)) continue;
                    bool ok = false;
                    for (std::size_t c2 : moves_[c]) {
                        if (occupied(c2, r)) {
                            ok = true;
                            break;
                        }
                        bool all = true;
                        for (Vertex r2 : closed_[r]) {
                            if (!occupied(c2, r2) && !win[c2 * n_ + r2]) {
                                all = false;
                                break;
                            }
                        }
                        if (all) {
                            ok = true;
                            break;
                        }
                    }
                    next[c * n_ + r] = ok;
                    if (ok && !win[c * n_ + r]) {
                        time_[c * n_ + r] = d;
                        changed = true;
                    }
                }
            }
            win.swap(next);
            if (!changed) break;
        }
    }

    std::size_t n_, k_, total_ = 0;
    std::vector<std::vector<Vertex>> closed_;
    std::vector<std::vector<std::size_t>> moves_;
    std::vector<std::uint64_t> occ_;
    std::vector<int> time_;
};

inline std::size_t cop_number(const Graph& g) {
    for (std::size_t k = 1;; ++k)
        if (Minimax(g, k).copwin()) return k;
}

/// Compare every state of solve_k_copwin(g, k) against the minimax oracle.
/// Returns an empty string on agreement, else the first mismatch.
inline std::string compare_solver(const Graph& g, std::size_t k) {
    Minimax mm(g, k);
    auto res = copsurf::solve_k_copwin(g, k);
    if (res.copwin() != mm.copwin()) return "copwin flag differs for k=" + std::to_string(k);
    for (std::uint64_t t = 0; t < res.tuple_count(); ++t) {
        auto span = res.tuple(t);
        std::vector<Vertex> cops(span.begin(), span.end());
        for (Vertex r = 0; r < g.order(); ++r) {
            const bool on = std::find(cops.begin(), cops.end(), r) != cops.end();
            const int want_cop = on ? 0 : mm.time(cops, r) == Minimax::kInf ? -1 : 2 * mm.time(cops, r) - 1;
            const int want_rob = on ? 0 : mm.robber_rank(cops, r) == Minimax::kInf ? -1 : mm.robber_rank(cops, r);
            const int got_cop = res.rank(cops, r, copsurf::Turn::Cops);
            const int got_rob = res.rank(cops, r, copsurf::Turn::Robber);
            if (got_cop != want_cop || got_rob != want_rob) {
                return "state " + copsurf::CopStrategy::describe(cops, r) + ": solver " + std::to_string(got_cop) +
                       "/" + std::to_string(got_rob) + ", oracle " + std::to_string(want_cop) + "/" +
                       std::to_string(want_rob);
            }
        }
    }
    return {};
}

/// Face count via the orientable double cover: darts of the cover are
/// traced by the plain rotation-system face permutation, and every face
/// of the scheme has exactly two lifts.
inline std::size_t face_count(const copsurf::EmbeddingScheme& s) {
    const std::size_t n = s.n, m = s.edges.size();
    // Cover dart (e, sheet, dir): edge e traversed from u (dir 0) or from v (dir 1),
    // starting at sheet `sheet` of the tail.
    struct Dart {
        std::size_t e;
        int sheet;
        int dir;
        auto operator<=>(const Dart&) const = default;
    };
    auto tail = [&](const Dart& d) { return d.dir == 0 ? s.edges[d.e].u : s.edges[d.e].v; };
    auto reverse = [&](const Dart& d) {
        int sheet = s.signature[d.e] > 0 ? d.sheet : 1 - d.sheet;
        return Dart{d.e, sheet, 1 - d.dir};
    };
    // Rotation at cover vertex (v, sheet): sheet 0 keeps the order, sheet 1 reverses it.
    auto next_around = [&](const Dart& d) {
        Vertex v = tail(d);
        const auto& rot = s.rotation[v];
        std::size_t deg = rot.size();
        std::size_t i = 0;
        // Locate this dart among the rotation entries at v (loops are excluded by the graph).
        while (!(rot[i] == d.e && (s.edges[d.e].u == v) == (d.dir == 0))) ++i;
        std::size_t j = d.sheet == 0 ? (i + 1) % deg : (i + deg - 1) % deg;
        std::size_t e = rot[j];
        return Dart{e, d.sheet, s.edges[e].u == v ? 0 : 1};
    };
    std::set<Dart> seen;
    std::size_t orbits = 0;
    for (std::size_t e = 0; e < m; ++e) {
        for (int sheet = 0; sheet < 2; ++sheet) {
            for (int dir = 0; dir < 2; ++dir) {
                Dart start{e, sheet, dir};
                if (seen.count(start)) continue;
                ++orbits;
                Dart d = start;
                do {
                    seen.insert(d);
                    d = next_around(reverse(d));
                } while (!(d == start));
            }
        }
    }
    std::size_t isolated = 0;
    for (Vertex v = 0; v < n; ++v) isolated += s.rotation[v].empty();
    return orbits / 2 + isolated;
}

} // namespace oracle
