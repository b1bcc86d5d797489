#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"
#include "copsurf/graph6.hpp"
#include "copsurf/solver.hpp"
#include "copsurf/tuple_index.hpp"

namespace copsurf {

/// A cop player. Policies are pure: any memory they need is threaded through
/// an explicit `State` value, which the play and verification loops carry.
template <class P>
concept CopPolicy = std::totally_ordered<typename P::State> &&
    requires(const P& p, const typename P::State& s, const CopTuple& cops, Vertex r) {
        { p.place() } -> std::convertible_to<CopTuple>;
        { p.start(cops, r) } -> std::same_as<typename P::State>;
        { p.respond(s, cops, r) } -> std::same_as<std::pair<CopTuple, typename P::State>>;
        { p.robber_moved(s, r, r) } -> std::same_as<typename P::State>;
    };

template <class P>
concept RobberPolicy = requires(const P& p, const CopTuple& cops, Vertex r) {
    { p.place(cops) } -> std::convertible_to<Vertex>;
    { p.move(cops, r) } -> std::convertible_to<Vertex>;
};

/// Cops that never leave their starting vertices.
class StationaryCops {
public:
    using State = std::monostate;

    explicit StationaryCops(CopTuple placement) : placement_(std::move(placement)) {
        std::sort(placement_.begin(), placement_.end());
    }

    CopTuple place() const { return placement_; }
    State start(const CopTuple&, Vertex) const { return {}; }
    State robber_moved(const State& s, Vertex, Vertex) const { return s; }
    std::pair<CopTuple, State> respond(const State& s, const CopTuple& cops, Vertex) const { return {cops, s}; }

private:
    CopTuple placement_;
};

struct HalfMove {
    Turn side = Turn::Cops;
    CopTuple cops;     // cop positions after the half-move
    Vertex robber = 0; // robber position after the half-move
};

enum class Outcome { Capture, Timeout };

struct Transcript {
    std::string graph6;
    std::size_t k = 0;
    CopTuple cop_placement;
    Vertex robber_placement = 0;
    std::vector<HalfMove> moves;
    Outcome outcome = Outcome::Timeout;
    /// Half-moves played when the capture happened; 0 means at placement.
    std::size_t capture_index = 0;

    std::size_t cop_moves() const {
        return static_cast<std::size_t>(std::count_if(moves.begin(), moves.end(),
                                                      [](const HalfMove& m) { return m.side == Turn::Cops; }));
    }
};

struct NoObserver {
    template <class State>
    void operator()(const CopTuple&, Vertex, const State&) const {}
};

namespace detail {

inline void check_cops(const Graph& g, const CopTuple& cops, std::size_t k, const char* what) {
    if (cops.size() != k) {
        throw StrategyHoleError(std::string(what) + ": expected " + std::to_string(k) + " cops, got " +
                                std::to_string(cops.size()));
    }
    for (Vertex c : cops) {
        if (c >= g.order()) throw StrategyHoleError(std::string(what) + ": cop vertex out of range");
    }
}

inline CopTuple sorted(CopTuple t) {
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace detail

/// Play cops against robber for at most `limit` cop moves.
///
/// `observer(cops, robber, state)` runs after the placements and after each
/// half-move, including the one that ends the game.
template <CopPolicy Cops, RobberPolicy Robber, class Observer = NoObserver>
Transcript play(const Graph& g, const Cops& cops, const Robber& robber, std::size_t limit,
                Observer&& observer = {}) {
    if (limit == 0) throw InvalidArgument("move limit must be at least 1");
    Transcript tr;
    tr.graph6 = write_graph6(g);
    CopTuple c = detail::sorted(cops.place());
    tr.k = c.size();
    detail::check_cops(g, c, tr.k, "placement");
    tr.cop_placement = c;

    Vertex r = robber.place(c);
    if (r >= g.order()) throw StrategyHoleError("robber placed off the graph");
    tr.robber_placement = r;
    if (contains(c, r)) {
        tr.outcome = Outcome::Capture;
        tr.capture_index = 0;
        observer(c, r, typename Cops::State{});
        return tr;
    }
    auto state = cops.start(c, r);
    observer(c, r, state);

    for (std::size_t round = 0; round < limit; ++round) {
        auto [next, next_state] = cops.respond(state, c, r);
        next = detail::sorted(std::move(next));
        detail::check_cops(g, next, tr.k, "cop move");
        if (!is_legal_cop_move(g, c, next)) {
            throw StrategyHoleError("illegal cop move from " + CopStrategy::describe(c, r));
        }
        c = std::move(next);
        state = std::move(next_state);
        tr.moves.push_back({Turn::Cops, c, r});
        observer(c, r, state);
        if (contains(c, r)) {
            tr.outcome = Outcome::Capture;
            tr.capture_index = tr.moves.size();
            return tr;
        }

        Vertex nr = robber.move(c, r);
        if (nr != r && (nr >= g.order() || !g.adjacent(r, nr))) {
            throw StrategyHoleError("illegal robber move " + std::to_string(r) + "->" + std::to_string(nr));
        }
        state = cops.robber_moved(state, r, nr);
        r = nr;
        tr.moves.push_back({Turn::Robber, c, r});
        observer(c, r, state);
        if (contains(c, r)) {
            tr.outcome = Outcome::Capture;
            tr.capture_index = tr.moves.size();
            return tr;
        }
    }
    tr.outcome = Outcome::Timeout;
    return tr;
}

struct WinCheck {
    bool winning = false;
    /// Distinct cop-turn positions (with policy state) visited.
    std::uint64_t explored = 0;
    /// Longest play to capture, in cop moves, over all robber behaviours.
    std::size_t worst_cop_moves = 0;
    std::string failure;

    explicit operator bool() const noexcept { return winning; }
};

/// Decide whether `cops` beats every robber behaviour, by exhaustive search
/// of the reachable positions (cops, robber, policy state) on the cops' turn.
/// A reachable cycle avoiding capture, a strategy hole or an illegal move
/// all count as failure.
template <CopPolicy Cops>
WinCheck verify_winning(const Graph& g, const Cops& cops, std::size_t k, std::uint64_t max_positions = 50'000'000) {
    using State = typename Cops::State;
    struct Node {
        CopTuple cops;
        Vertex robber;
        State state;
        std::weak_ordering operator<=>(const Node& o) const {
            if (auto c = cops <=> o.cops; c != 0) return c;
            if (auto c = robber <=> o.robber; c != 0) return c;
            if (state < o.state) return std::weak_ordering::less;
            if (o.state < state) return std::weak_ordering::greater;
            return std::weak_ordering::equivalent;
        }
        bool operator==(const Node& o) const { return (*this <=> o) == 0; }
    };
    struct Info {
        bool done = false;
        std::size_t depth = 0;
    };
    struct Frame {
        typename std::map<Node, Info>::iterator it;
        std::vector<Node> children;
        std::size_t next = 0;
        std::size_t best = 1;
    };

    WinCheck out;
    auto fail = [&](std::string why) {
        out.winning = false;
        out.failure = std::move(why);
        return out;
    };

    CopTuple start;
    try {
        start = detail::sorted(cops.place());
        detail::check_cops(g, start, k, "placement");
    } catch (const Error& e) {
        return fail(e.what());
    }

    std::map<Node, Info> info;
    // Positions reachable in one round from `node`, or an error message.
    auto expand = [&](const Node& node, std::vector<Node>& children) -> std::optional<std::string> {
        try {
            auto [next, st] = cops.respond(node.state, node.cops, node.robber);
            next = detail::sorted(std::move(next));
            detail::check_cops(g, next, k, "cop move");
            if (!is_legal_cop_move(g, node.cops, next)) {
                return "illegal cop move at " + CopStrategy::describe(node.cops, node.robber);
            }
            if (contains(next, node.robber)) return std::nullopt;
            for (Vertex nr : neighborhood(g, node.robber, true)) {
                if (contains(next, nr)) continue;
                children.push_back(Node{next, nr, cops.robber_moved(st, node.robber, nr)});
            }
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::nullopt;
    };

    std::size_t worst = 0;
    for (Vertex r = 0; r < g.order(); ++r) {
        if (contains(start, r)) continue;
        Node root;
        try {
            root = Node{start, r, cops.start(start, r)};
        } catch (const Error& e) {
            return fail(e.what());
        }
        auto [rit, fresh] = info.try_emplace(root);
        if (!fresh) {
            worst = std::max(worst, rit->second.depth);
            continue;
        }
        std::vector<Frame> stack;
        stack.push_back(Frame{rit, {}, 0, 1});
        if (auto err = expand(root, stack.back().children)) return fail(*err);
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == top.children.size()) {
                top.it->second.done = true;
                top.it->second.depth = top.best;
                std::size_t d = top.best;
                stack.pop_back();
                if (!stack.empty()) stack.back().best = std::max(stack.back().best, d + 1);
                continue;
            }
            Node child = std::move(top.children[top.next++]);
            auto [cit, inserted] = info.try_emplace(child);
            if (!inserted) {
                if (!cit->second.done) {
                    return fail("robber evades forever through " + CopStrategy::describe(child.cops, child.robber));
                }
                top.best = std::max(top.best, cit->second.depth + 1);
                continue;
            }
            if (info.size() > max_positions) return fail("position budget exceeded");
            stack.push_back(Frame{cit, {}, 0, 1});
            if (auto err = expand(child, stack.back().children)) return fail(*err);
        }
        worst = std::max(worst, rit->second.depth);
    }
    out.winning = true;
    out.explored = info.size();
    out.worst_cop_moves = worst;
    return out;
}

} // namespace copsurf
