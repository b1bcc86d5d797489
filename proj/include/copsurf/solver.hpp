#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"
#include "copsurf/tuple_index.hpp"

namespace copsurf {

enum class Turn : std::uint8_t { Cops = 0, Robber = 1 };

/// Rank value of states from which the robber evades forever.
inline constexpr std::int32_t kRobberWin = -1;

struct SolveOptions {
    /// Upper bound on C(n+k-1,k) * n * 2.
    std::uint64_t max_states = 200'000'000;
};

namespace detail {

struct SolveData {
    Graph graph;
    std::size_t k = 0;
    TupleIndexer indexer;
    std::vector<Vertex> tuples;          // tuple t occupies [t*k, t*k + k)
    std::vector<std::uint64_t> succ_offset;
    std::vector<std::uint32_t> succ;     // cop-move successor tuple ids, ascending
    std::vector<std::int32_t> ranks;     // indexed by state id
    bool copwin = false;
    std::optional<CopTuple> best_placement;
    std::int32_t placement_rank = kRobberWin;
};

} // namespace detail

/// Classification of every state of the k-cop game on one graph.
///
/// State ids pack (tuple rank, robber vertex, turn) as (t * n + r) * 2 + turn.
/// Ranks count half-moves to capture under optimal play; capture states
/// (robber on a cop) have rank 0.
class SolveResult {
public:
    SolveResult() = default;
    explicit SolveResult(std::shared_ptr<const detail::SolveData> data) : d_(std::move(data)) {}

    const Graph& graph() const { return d_->graph; }
    std::size_t cops() const { return d_->k; }
    const TupleIndexer& indexer() const { return d_->indexer; }
    std::uint64_t tuple_count() const { return d_->indexer.count(); }
    std::uint64_t states() const { return d_->ranks.size(); }
    bool copwin() const { return d_->copwin; }
    const std::optional<CopTuple>& best_placement() const { return d_->best_placement; }

    /// Worst-case rank over robber placements against best_placement.
    std::int32_t placement_rank() const { return d_->placement_rank; }

    std::uint64_t state_id(std::uint64_t tuple, Vertex r, Turn turn) const {
        return (tuple * graph().order() + r) * 2 + static_cast<std::uint64_t>(turn);
    }

    std::span<const Vertex> tuple(std::uint64_t t) const {
        return {d_->tuples.data() + t * d_->k, d_->k};
    }

    std::span<const std::uint32_t> successors(std::uint64_t t) const {
        return {d_->succ.data() + d_->succ_offset[t], d_->succ.data() + d_->succ_offset[t + 1]};
    }

    std::int32_t rank_of(std::uint64_t state) const { return d_->ranks[state]; }

    /// Cops may be given in any order.
    std::int32_t rank(std::span<const Vertex> cops, Vertex r, Turn turn) const {
        return d_->ranks[state_id(tuple_id(cops), r, turn)];
    }

    std::uint64_t tuple_id(std::span<const Vertex> cops) const {
        if (cops.size() != d_->k) {
            throw InvalidArgument("expected " + std::to_string(d_->k) + " cops, got " + std::to_string(cops.size()));
        }
        CopTuple sorted(cops.begin(), cops.end());
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v : sorted) {
            if (v >= graph().order()) throw InvalidArgument("cop vertex out of range");
        }
        return d_->indexer.rank(sorted);
    }

    /// Counts of cop-win states per rank; robber-win states are tallied separately.
    std::vector<std::uint64_t> ranks_histogram() const {
        std::vector<std::uint64_t> hist;
        for (std::int32_t r : d_->ranks) {
            if (r < 0) continue;
            if (static_cast<std::size_t>(r) >= hist.size()) hist.resize(r + 1, 0);
            ++hist[r];
        }
        return hist;
    }

    std::uint64_t robber_win_states() const {
        return static_cast<std::uint64_t>(std::count(d_->ranks.begin(), d_->ranks.end(), kRobberWin));
    }

private:
    std::shared_ptr<const detail::SolveData> d_;
};

/// Classify all states of the k-cop game by retrograde analysis.
///
/// Capture states seed a FIFO queue with rank 0. A cop-turn state is won as
/// soon as one successor is won; a robber-turn state once all of its robber
/// successors are won, tracked by a per-state counter. FIFO order makes the
/// first assignment the optimal rank.
inline SolveResult solve_k_copwin(const Graph& g, std::size_t k, const SolveOptions& opts = {}) {
    if (k == 0) throw InvalidArgument("k must be at least 1");
    const std::size_t n = g.order();
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
    if (n > std::numeric_limits<std::uint16_t>::max()) throw CapacityError("graph too large for the solver");

    auto data = std::make_shared<detail::SolveData>();
    data->graph = g;
    data->k = k;
    data->indexer = TupleIndexer(n, k);
    const std::uint64_t T = data->indexer.count();
    const unsigned __int128 total = static_cast<unsigned __int128>(T) * n * 2;
    if (T == std::numeric_limits<std::uint64_t>::max() || total > opts.max_states) {
        throw CapacityError("state space of C(" + std::to_string(n + k - 1) + "," + std::to_string(k) + ")*" +
                            std::to_string(n) + "*2 states exceeds the budget of " +
                            std::to_string(opts.max_states));
    }
    const auto S = static_cast<std::uint64_t>(total);

    data->tuples.resize(T * k);
    for (std::uint64_t t = 0; t < T; ++t) data->indexer.unrank(t, std::span<Vertex>(data->tuples.data() + t * k, k));

    // Cop-move successor lists. The relation is symmetric, so they double as predecessor lists.
    std::vector<std::vector<Vertex>> closed(n);
    for (Vertex v = 0; v < n; ++v) closed[v] = neighborhood(g, v, true);
    data->succ_offset.assign(T + 1, 0);
    {
        std::vector<std::uint32_t> scratch;
        std::vector<std::size_t> digit(k);
        CopTuple moved(k);
        for (std::uint64_t t = 0; t < T; ++t) {
            const Vertex* cur = data->tuples.data() + t * k;
            scratch.clear();
            std::fill(digit.begin(), digit.end(), 0);
            while (true) {
                for (std::size_t i = 0; i < k; ++i) moved[i] = closed[cur[i]][digit[i]];
                std::sort(moved.begin(), moved.end());
                scratch.push_back(static_cast<std::uint32_t>(data->indexer.rank(moved)));
                std::size_t i = 0;
                while (i < k && ++digit[i] == closed[cur[i]].size()) digit[i++] = 0;
                if (i == k) break;
            }
            std::sort(scratch.begin(), scratch.end());
            scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            data->succ.insert(data->succ.end(), scratch.begin(), scratch.end());
            data->succ_offset[t + 1] = data->succ.size();
        }
    }

    auto& ranks = data->ranks;
    ranks.assign(S, kRobberWin);
    std::vector<std::uint16_t> pending(T * n);
    std::vector<std::uint64_t> queue;
    queue.reserve(S / 4 + 16);
    for (std::uint64_t t = 0; t < T; ++t) {
        const Vertex* cur = data->tuples.data() + t * k;
        for (Vertex r = 0; r < n; ++r) {
            pending[t * n + r] = static_cast<std::uint16_t>(closed[r].size());
            if (contains(std::span<const Vertex>(cur, k), r)) {
                for (auto turn : {Turn::Cops, Turn::Robber}) {
                    auto id = (t * n + r) * 2 + static_cast<std::uint64_t>(turn);
                    ranks[id] = 0;
                    queue.push_back(id);
                }
            }
        }
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t id = queue[head];
        const std::int32_t next_rank = ranks[id] + 1;
        const auto turn = static_cast<Turn>(id & 1);
        const std::uint64_t t = (id >> 1) / n;
        const auto r = static_cast<Vertex>((id >> 1) % n);
        if (turn == Turn::Cops) {
            // Robber-turn predecessors: the robber stood at some r' in N[r].
            const Vertex* cur = data->tuples.data() + t * k;
            for (Vertex prev : closed[r]) {
                if (contains(std::span<const Vertex>(cur, k), prev)) continue;
                const std::uint64_t pid = (t * n + prev) * 2 + 1;
                if (ranks[pid] != kRobberWin) continue;
                if (--pending[t * n + prev] == 0) {
                    ranks[pid] = next_rank;
                    queue.push_back(pid);
                }
            }
        } else {
            for (std::uint32_t pt : std::span<const std::uint32_t>(data->succ.data() + data->succ_offset[t],
                                                                 data->succ.data() + data->succ_offset[t + 1])) {
                const std::uint64_t pid = (pt * n + r) * 2;
                if (ranks[pid] != kRobberWin) continue;
                ranks[pid] = next_rank;
                queue.push_back(pid);
            }
        }
    }

    // Robber places last with full information; capture at placement scores 0.
    for (std::uint64_t t = 0; t < T; ++t) {
        std::int32_t worst = 0;
        for (Vertex r = 0; r < n && worst != kRobberWin; ++r) {
            std::int32_t v = ranks[(t * n + r) * 2];
            worst = v == kRobberWin ? kRobberWin : std::max(worst, v);
        }
        if (worst == kRobberWin) continue;
        std::span<const Vertex> cur(data->tuples.data() + t * k, k);
        if (!data->copwin || worst < data->placement_rank ||
            (worst == data->placement_rank &&
             std::lexicographical_compare(cur.begin(), cur.end(), data->best_placement->begin(),
                                          data->best_placement->end()))) {
            data->copwin = true;
            data->placement_rank = worst;
            data->best_placement = CopTuple(cur.begin(), cur.end());
        }
    }
    return SolveResult(std::move(data));
}

/// Result of iterated dominated-vertex deletion.
struct Dismantling {
    bool dismantlable = false;
    /// Vertices in deletion order; when dismantlable the last entry is the survivor.
    std::vector<Vertex> order;
    /// Remaining vertices without a dominated member (empty when dismantlable).
    VertexSet irreducible;
};

/// Repeatedly delete the smallest vertex u with N[u] contained in N[v] for some
/// other remaining v. Dismantlable iff one vertex remains.
inline Dismantling dismantle(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("graph must have at least one vertex");
    const std::size_t n = g.order();
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    Dismantling out;
    auto dominated = [&](Vertex u) {
        for (Vertex v : g.neighbors(u)) {
            if (!alive[v]) continue;
            bool covers = true;
            for (Vertex w : g.neighbors(u)) {
                if (w == v || !alive[w]) continue;
                if (!g.adjacent(v, w)) {
                    covers = false;
                    break;
                }
            }
            if (covers) return true;
        }
        return false;
    };
    while (remaining > 1) {
        bool removed = false;
        for (Vertex u = 0; u < n; ++u) {
            if (alive[u] && dominated(u)) {
                alive[u] = false;
                out.order.push_back(u);
                --remaining;
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    if (remaining == 1) {
        out.dismantlable = true;
        for (Vertex u = 0; u < n; ++u)
            if (alive[u]) out.order.push_back(u);
    } else {
        for (Vertex u = 0; u < n; ++u)
            if (alive[u]) out.irreducible.push_back(u);
    }
    return out;
}

struct CopNumber {
    std::size_t value = 0;
    SolveResult result;
};

/// Smallest k that is copwin, ascending from 1. Non-dismantlable graphs skip k = 1.
inline CopNumber cop_number(const Graph& g, const SolveOptions& opts = {}) {
    if (g.order() == 0) throw InvalidArgument("graph must have at least one vertex");
    if (dismantle(g).dismantlable) {
        auto res = solve_k_copwin(g, 1, opts);
        if (!res.copwin()) throw InvariantError("dismantlable graph classified as not 1-copwin");
        return {1, std::move(res)};
    }
    for (std::size_t k = 2;; ++k) {
        auto res = solve_k_copwin(g, k, opts);
        if (res.copwin()) return {k, std::move(res)};
    }
}

/// Positional cop strategy: for each (cop multiset, robber) on the cops' turn,
/// the cop multiset after the move.
class CopStrategy {
public:
    using State = std::monostate;
    using Key = std::pair<CopTuple, Vertex>;

    CopStrategy() = default;
    CopStrategy(std::size_t k, CopTuple placement) : k_(k), placement_(std::move(placement)) {
        std::sort(placement_.begin(), placement_.end());
    }

    std::size_t cops() const noexcept { return k_; }
    const CopTuple& placement() const noexcept { return placement_; }
    const std::map<Key, CopTuple>& moves() const noexcept { return moves_; }

    void set_move(CopTuple cops, Vertex robber, CopTuple to) {
        std::sort(cops.begin(), cops.end());
        std::sort(to.begin(), to.end());
        moves_[{std::move(cops), robber}] = std::move(to);
    }

    const CopTuple* find(const CopTuple& cops, Vertex robber) const {
        auto it = moves_.find({cops, robber});
        return it == moves_.end() ? nullptr : &it->second;
    }

    // Cop policy interface used by play / verify_winning.
    CopTuple place() const { return placement_; }
    State start(const CopTuple&, Vertex) const { return {}; }
    State robber_moved(const State& s, Vertex, Vertex) const { return s; }
    std::pair<CopTuple, State> respond(const State& s, const CopTuple& cops, Vertex robber) const {
        const CopTuple* to = find(cops, robber);
        if (to == nullptr) throw StrategyHoleError("cop strategy has no move at " + describe(cops, robber));
        return {*to, s};
    }

    static std::string describe(const CopTuple& cops, Vertex robber) {
        std::string s = "cops=[";
        for (std::size_t i = 0; i < cops.size(); ++i) s += (i ? "," : "") + std::to_string(cops[i]);
        return s + "] robber=" + std::to_string(robber);
    }

private:
    std::size_t k_ = 0;
    CopTuple placement_;
    std::map<Key, CopTuple> moves_;
};

/// Maximally evasive robber read off a SolveResult: prefers robber-win
/// states, otherwise the largest rank; smallest vertex among ties.
class RobberStrategy {
public:
    RobberStrategy() = default;
    explicit RobberStrategy(SolveResult result) : result_(std::move(result)) {}

    Vertex place(const CopTuple& cops) const {
        const auto t = result_.tuple_id(cops);
        Vertex best = 0;
        std::int64_t best_score = -1;
        for (Vertex r = 0; r < result_.graph().order(); ++r) {
            auto s = score(t, r);
            if (s > best_score) {
                best_score = s;
                best = r;
            }
        }
        return best;
    }

    Vertex move(const CopTuple& cops, Vertex robber) const {
        const auto t = result_.tuple_id(cops);
        Vertex best = robber;
        std::int64_t best_score = -1;
        for (Vertex r : neighborhood(result_.graph(), robber, true)) {
            auto s = score(t, r);
            if (s > best_score) {
                best_score = s;
                best = r;
            }
        }
        return best;
    }

    const SolveResult& result() const noexcept { return result_; }

private:
    std::int64_t score(std::uint64_t t, Vertex r) const {
        std::int32_t v = result_.rank_of(result_.state_id(t, r, Turn::Cops));
        return v == kRobberWin ? std::numeric_limits<std::int64_t>::max() : v;
    }

    SolveResult result_;
};

/// Optimal cop strategy on every cop-turn state reachable from best_placement.
/// Ties between rank-decreasing moves go to the lexicographically smallest tuple.
inline CopStrategy extract_cop_strategy(const SolveResult& res) {
    if (!res.copwin()) {
        throw NoStrategyError("graph is not " + std::to_string(res.cops()) + "-copwin; no cop strategy exists");
    }
    const std::size_t n = res.graph().order();
    CopStrategy strat(res.cops(), *res.best_placement());
    std::set<std::pair<std::uint64_t, Vertex>> seen;
    std::deque<std::pair<std::uint64_t, Vertex>> work;
    const auto start = res.tuple_id(*res.best_placement());
    for (Vertex r = 0; r < n; ++r) {
        if (!contains(res.tuple(start), r) && seen.insert({start, r}).second) work.emplace_back(start, r);
    }
    while (!work.empty()) {
        auto [t, r] = work.front();
        work.pop_front();
        const std::int32_t here = res.rank_of(res.state_id(t, r, Turn::Cops));
        if (here <= 0) throw InvariantError("reached a cop-turn state that is not a cop win");
        std::optional<std::uint32_t> pick;
        for (std::uint32_t s : res.successors(t)) {
            if (res.rank_of(res.state_id(s, r, Turn::Robber)) != here - 1) continue;
            if (!pick) {
                pick = s;
            } else {
                auto a = res.tuple(s);
                auto b = res.tuple(*pick);
                if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) pick = s;
            }
        }
        if (!pick) throw InvariantError("no rank-decreasing cop move");
        auto from = res.tuple(t);
        auto to = res.tuple(*pick);
        strat.set_move(CopTuple(from.begin(), from.end()), r, CopTuple(to.begin(), to.end()));
        if (contains(to, r)) continue;
        for (Vertex nr : neighborhood(res.graph(), r, true)) {
            if (!contains(to, nr) && seen.insert({*pick, nr}).second) work.emplace_back(*pick, nr);
        }
    }
    return strat;
}

inline RobberStrategy extract_robber_strategy(const SolveResult& res) { return RobberStrategy(res); }

inline std::pair<CopStrategy, RobberStrategy> extract_strategies(const SolveResult& res) {
    return {extract_cop_strategy(res), extract_robber_strategy(res)};
}

} // namespace copsurf
