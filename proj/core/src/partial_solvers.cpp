/*
 * Copyright 2026 The otfpg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <set>

#include "otfpg/solvers.hpp"

namespace otfpg {

namespace {

constexpr std::array<Player, 2> kPlayers = {Player::Even, Player::Odd};

bool
uses_safe_operators(SolverKind kind)
{
    return kind == SolverKind::SolitaireSafe || kind == SolverKind::CyclesSafe || kind == SolverKind::FatalSafe;
}

SafetyVariant
variant_of(SolverKind kind)
{
    return uses_safe_operators(kind) ? SafetyVariant::SafeOperators : SafetyVariant::SafeSubgame;
}

/// Grows an alpha-dominion D ⊆ safe_alpha(g) to its safe alpha-attractor.
AttractorResult
extend(const IncompleteGame& g, Player alpha, const VertexSet& dominion, SafetyVariant variant)
{
    if (variant == SafetyVariant::SafeOperators) return sattr(g, alpha, dominion);
    return attr(subgame(g.game, safe_set(g, alpha)), alpha, dominion);
}

void
take(Solution& s, Player alpha, const AttractorResult& a)
{
    s.assign(alpha, a.set);
    for (auto v : a.set) {
        if (a.strategy[v] != kNoVertex) s.strategy[v] = a.strategy[v];
    }
}

struct FatalHit
{
    VertexSet fatal;
    VertexSet dominion;
};

FatalHit
find_fatal(const IncompleteGame& g, Priority c, SafetyVariant variant)
{
    const auto alpha = parity_of(c);
    const auto level = priority_equal(g.game, c);
    FatalHit hit;
    if (variant == SafetyVariant::SafeSubgame) {
        const auto safe = safe_set(g, alpha);
        const auto arena = subgame(g.game, safe);
        const auto candidates = level & safe;
        VertexSet z = candidates;
        for (;;) {
            auto next = candidates & mattr(arena, alpha, z, c);
            if (next == z) break;
            z = std::move(next);
        }
        hit.fatal = z;
        if (!z.empty()) hit.dominion = mattr(arena, alpha, z, c);
    } else {
        VertexSet z = level;
        for (;;) {
            auto next = level & smattr(g, alpha, z, c);
            if (next == z) break;
            z = std::move(next);
        }
        hit.fatal = z;
        if (!z.empty()) hit.dominion = smattr(g, alpha, z, c);
    }
    return hit;
}

VertexSet
find_dominion(const IncompleteGame& g, Player alpha, SolverKind kind, std::vector<VertexId>& strategy)
{
    switch (kind) {
    case SolverKind::Solitaire:
        return solitaire_cycles(subgame(g.game, safe_set(g, alpha)), alpha);
    case SolverKind::SolitaireSafe:
        return solitaire_cycles(g.game, alpha);
    case SolverKind::Cycles:
        return forced_cycles(g, alpha, SafetyVariant::SafeSubgame);
    case SolverKind::CyclesSafe:
        return forced_cycles(g, alpha, SafetyVariant::SafeOperators);
    case SolverKind::Partial: {
        auto s = zielonka(subgame(g.game, safe_set(g, alpha)));
        const auto& region = s.won(alpha);
        for (auto v : region) {
            if (s.strategy[v] != kNoVertex) strategy[v] = s.strategy[v];
        }
        return region;
    }
    default:
        throw Error("no dominion search for solver " + std::string(to_string(kind)));
    }
}

} // namespace

std::string_view
to_string(SolverKind kind)
{
    switch (kind) {
    case SolverKind::Full: return "full";
    case SolverKind::Solitaire: return "solitaire";
    case SolverKind::SolitaireSafe: return "solitaire-safe";
    case SolverKind::Cycles: return "cycles";
    case SolverKind::CyclesSafe: return "cycles-safe";
    case SolverKind::Fatal: return "fatal";
    case SolverKind::FatalSafe: return "fatal-safe";
    case SolverKind::Partial: return "partial";
    }
    return "?";
}

std::optional<SolverKind>
parse_solver_kind(std::string_view name)
{
    for (auto kind : kAllSolverKinds) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

VertexSet
parity_vertices(const Game& g, Player alpha)
{
    VertexSet result(g.id_bound());
    for (auto v : g.vertices()) {
        if (parity_of(g.priority(v)) == alpha && !g.is_sink(v)) result.insert(v);
    }
    return result;
}

VertexSet
solve_on_safe(const IncompleteGame& g, Player alpha, const InnerSolver& inner)
{
    auto safe = safe_set(g, alpha);
    if (safe.empty()) return VertexSet(g.game.id_bound());
    return inner(subgame(g.game, safe)).won(alpha);
}

VertexSet
solitaire_cycles(const Game& g, Player alpha)
{
    return greatest_closed(g, alpha, parity_vertices(g, alpha) & g.owned_by(alpha));
}

VertexSet
forced_cycles(const IncompleteGame& g, Player alpha, SafetyVariant variant)
{
    auto good = parity_vertices(g.game, alpha);
    if (variant == SafetyVariant::SafeSubgame) return greatest_closed(g.game, alpha, good & safe_set(g, alpha));
    // spre never admits opponent-owned incomplete vertices
    return greatest_closed(g.game, alpha, good - (g.game.owned_by(opponent(alpha)) & g.incomplete));
}

VertexSet
fatal_attractor(const IncompleteGame& g, Priority c, SafetyVariant variant)
{
    return find_fatal(g, c, variant).fatal;
}

Solution
fatal_attractors(const IncompleteGame& g, SafetyVariant variant)
{
    Solution s = Solution::undecided_for(g.game);
    std::set<Priority, std::greater<>> priorities;
    for (auto v : g.game.vertices()) priorities.insert(g.game.priority(v));

    VertexSet remaining = g.game.vertices();
    for (auto c : priorities) {
        auto work = subgame(g, remaining);
        if (priority_equal(work.game, c).empty()) continue;
        auto hit = find_fatal(work, c, variant);
        if (hit.fatal.empty()) continue;
        const auto alpha = parity_of(c);
        auto grown = extend(work, alpha, hit.dominion, variant);
        take(s, alpha, grown);
        remaining -= grown.set;
    }
    return s;
}

Solution
solve_partial(const IncompleteGame& g, SolverKind kind, const Solution* known, std::optional<Player> only)
{
    if (kind == SolverKind::Full) throw Error("the full solver does not run on incomplete games");
    const auto& game = g.game;
    const auto variant = variant_of(kind);

    Solution s = Solution::undecided_for(game);
    VertexSet remaining = game.vertices();

    // earlier regions and complete sinks stay decided in every extension
    for (auto alpha : kPlayers) {
        VertexSet seeds = sinks_of(game, opponent(alpha)) - g.incomplete;
        if (known != nullptr) seeds |= known->won(alpha);
        seeds &= remaining;
        if (seeds.empty()) continue;
        auto grown = extend(subgame(g, remaining), alpha, seeds, variant);
        take(s, alpha, grown);
        if (known != nullptr) {
            for (auto v : seeds) {
                if (v < known->strategy.size() && known->strategy[v] != kNoVertex) s.strategy[v] = known->strategy[v];
            }
        }
        remaining -= grown.set;
    }

    if (kind == SolverKind::Fatal || kind == SolverKind::FatalSafe) {
        auto found = fatal_attractors(subgame(g, remaining), variant);
        for (auto alpha : kPlayers) {
            if (only && *only != alpha) continue;
            s.assign(alpha, found.won(alpha));
            for (auto v : found.won(alpha)) {
                if (found.strategy[v] != kNoVertex) s.strategy[v] = found.strategy[v];
            }
        }
        return s;
    }

    for (auto alpha : kPlayers) {
        if (only && *only != alpha) continue;
        auto work = subgame(g, remaining);
        auto dominion = find_dominion(work, alpha, kind, s.strategy);
        if (dominion.empty()) continue;
        auto grown = extend(work, alpha, dominion, variant);
        take(s, alpha, grown);
        remaining -= grown.set;
    }
    return s;
}

Solution
solve(const IncompleteGame& g, SolverKind kind, std::optional<Player> only)
{
    if (kind == SolverKind::Full) return zielonka(g.game);
    Solution s = solve_partial(g, kind, nullptr, only);
    for (;;) {
        auto next = solve_partial(g, kind, &s, only);
        if (next.undecided == s.undecided) return next;
        s = std::move(next);
    }
}

} // namespace otfpg
