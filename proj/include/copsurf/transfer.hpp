#pragma once

#include <algorithm>
#include <memory>
#include <utility>

#include "copsurf/covering.hpp"
#include "copsurf/error.hpp"
#include "copsurf/game.hpp"
#include "copsurf/solver.hpp"

namespace copsurf {

/// Cop strategy on the base graph G obtained by playing a cover-side
/// strategy against an imaginary robber on G' and projecting the moves.
///
/// The simulation state (cover cops, imaginary robber) travels in `State`.
/// At every step p(cover cops) equals the base cops as a multiset and
/// p(imaginary robber) equals the base robber.
class SimulatedCopStrategy {
public:
    struct State {
        CopTuple cover_cops;
        Vertex imaginary = 0;

        friend auto operator<=>(const State&, const State&) = default;
    };

    SimulatedCopStrategy(std::shared_ptr<const CoveringMap> map, std::shared_ptr<const CopStrategy> strategy)
        : map_(std::move(map)), strategy_(std::move(strategy)) {}

    const CoveringMap& covering() const noexcept { return *map_; }
    const CopStrategy& cover_strategy() const noexcept { return *strategy_; }

    CopTuple project(const CopTuple& cover) const {
        CopTuple out;
        out.reserve(cover.size());
        for (Vertex v : cover) out.push_back(map_->p.at(v));
        std::sort(out.begin(), out.end());
        return out;
    }

    CopTuple place() const { return project(strategy_->placement()); }

    /// The imaginary robber starts on the smallest vertex of the fibre over r.
    State start(const CopTuple& cops, Vertex r) const {
        State s{strategy_->placement(), fibre(*map_, r).front()};
        check_projection(s, cops, r);
        return s;
    }

    std::pair<CopTuple, State> respond(const State& s, const CopTuple& cops, Vertex r) const {
        check_projection(s, cops, r);
        State t{strategy_->respond({}, s.cover_cops, s.imaginary).first, s.imaginary};
        return {project(t.cover_cops), std::move(t)};
    }

    /// Lift the base robber move to a neighbour (or stay) of the imaginary robber.
    State robber_moved(const State& s, Vertex, Vertex to) const {
        auto lifted = lift_step(*map_, s.imaginary, to);
        if (!lifted) {
            throw InvalidCoverError("robber move to " + std::to_string(to) + " has no lift from cover vertex " +
                                    std::to_string(s.imaginary));
        }
        return State{s.cover_cops, *lifted};
    }

    void check_projection(const State& s, const CopTuple& cops, Vertex r) const {
        if (project(s.cover_cops) != cops || map_->p.at(s.imaginary) != r) {
            throw InvariantError("projection invariant violated at " + CopStrategy::describe(cops, r));
        }
    }

private:
    std::shared_ptr<const CoveringMap> map_;
    std::shared_ptr<const CopStrategy> strategy_;
};

/// Transfer a cop strategy on the cover graph down to the base graph. The
/// map is re-checked as a weak cover first.
inline SimulatedCopStrategy transfer_strategy(const CoveringMap& map, const CopStrategy& strategy) {
    auto check = check_weak_cover(map.p, map.source, map.target);
    if (!check) throw InvalidCoverError("transfer needs a weak cover: " + check.describe());
    for (Vertex v : strategy.placement()) {
        if (v >= map.source.order()) throw InvalidArgument("strategy placement is not on the cover graph");
    }
    return SimulatedCopStrategy(std::make_shared<const CoveringMap>(map), std::make_shared<const CopStrategy>(strategy));
}

static_assert(CopPolicy<SimulatedCopStrategy>);
static_assert(CopPolicy<CopStrategy>);
static_assert(CopPolicy<StationaryCops>);
static_assert(RobberPolicy<RobberStrategy>);

} // namespace copsurf
