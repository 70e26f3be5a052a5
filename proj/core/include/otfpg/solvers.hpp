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

#ifndef OTFPG_SOLVERS_HPP
#define OTFPG_SOLVERS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "otfpg/fixpoints.hpp"
#include "otfpg/game.hpp"

namespace otfpg {

/**
 * On-the-fly solving strategies. The plain partial kinds run on the safe
 * subgame of each player and grow dominions with the ordinary attractor
 * there; the *Safe kinds use the safe operators on the whole game instead.
 * Partial runs Zielonka on each player's safe subgame. Full never solves
 * before the game is completely explored.
 */
enum class SolverKind { Full, Solitaire, SolitaireSafe, Cycles, CyclesSafe, Fatal, FatalSafe, Partial };

inline constexpr std::array<SolverKind, 8> kAllSolverKinds = {
    SolverKind::Full,   SolverKind::Solitaire, SolverKind::SolitaireSafe, SolverKind::Cycles,
    SolverKind::CyclesSafe, SolverKind::Fatal, SolverKind::FatalSafe,     SolverKind::Partial,
};

std::string_view to_string(SolverKind kind);
std::optional<SolverKind> parse_solver_kind(std::string_view name);

/// Whether a partial solver works with the safe operators instead of on safe subgames.
enum class SafetyVariant { SafeSubgame, SafeOperators };

/// P_alpha: non-sink vertices whose priority has alpha's parity.
VertexSet parity_vertices(const Game& g, Player alpha);

/**
 * Zielonka's recursive algorithm for min-parity games with sinks. Every
 * vertex is decided; the strategy is defined for each vertex owned by the
 * winner of its region (except sinks).
 */
Solution zielonka(const Game& g);

using InnerSolver = std::function<Solution(const Game&)>;

/// The alpha region of inner on the alpha-safe subgame of g.
VertexSet solve_on_safe(const IncompleteGame& g, Player alpha, const InnerSolver& inner = zielonka);

/// Greatest set of alpha-owned, alpha-parity vertices that can stay among themselves.
VertexSet solitaire_cycles(const Game& g, Player alpha);

/**
 * Vertices on winning forced cycles for alpha. The safe-subgame variant
 * intersects with the safe set up front, the safe-operator variant uses
 * spre; both yield the same set.
 */
VertexSet forced_cycles(const IncompleteGame& g, Player alpha, SafetyVariant variant);

/// Fatal set for priority c and the player of c's parity.
VertexSet fatal_attractor(const IncompleteGame& g, Priority c, SafetyVariant variant);

/**
 * One descending sweep over the priorities of g collecting fatal-attractor
 * dominions (each grown by an attractor and removed from the working game
 * before the next priority). Vertices not covered stay undecided.
 */
Solution fatal_attractors(const IncompleteGame& g, SafetyVariant variant);

/**
 * One on-the-fly solving round on an incomplete game.
 *
 * Regions in known (from an earlier, smaller snapshot) and complete sinks
 * are first grown with safe attractors, then kind's dominion search runs
 * on the rest. Every decided vertex keeps its winner in all extensions of
 * g. With only set, new regions are searched for that player alone.
 * Throws Error for SolverKind::Full.
 */
Solution solve_partial(const IncompleteGame& g, SolverKind kind, const Solution* known = nullptr,
                       std::optional<Player> only = std::nullopt);

/**
 * Offline solve. Full runs Zielonka on g ignoring incompleteness; the
 * other kinds repeat solve_partial until no region grows.
 */
Solution solve(const IncompleteGame& g, SolverKind kind, std::optional<Player> only = std::nullopt);

struct OracleLimits
{
    std::size_t max_vertices = 12;
    std::uint64_t max_strategies = std::uint64_t{1} << 22;
};

/**
 * Solves g by enumerating the positional strategies of one player and
 * checking each induced single-player graph for reachable losing sinks and
 * cycles. Exponential; throws Error beyond the limits.
 */
Solution brute_force_oracle(const Game& g, const OracleLimits& limits = {});

/**
 * Vertices from which p wins every play consistent with strategy. Where
 * strategy is undefined at a p-vertex every move is allowed.
 */
VertexSet winning_under(const Game& g, Player p, std::span<const VertexId> strategy);

} // namespace otfpg

#endif
