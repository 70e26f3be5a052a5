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

#ifndef OTFPG_EXPLORATION_HPP
#define OTFPG_EXPLORATION_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "otfpg/game.hpp"
#include "otfpg/solvers.hpp"

namespace otfpg {

/// Identifier of a state in the universe behind an Expander.
using StateKey = std::uint64_t;

struct StateInfo
{
    StateKey key = 0;
    Player owner = Player::Even;
    Priority priority = 0;
    std::string label;
};

/**
 * Hidden universe game. expand() must return the complete, deterministic
 * successor list of a state; describe() its owner and priority.
 */
class Expander
{
public:
    virtual ~Expander() = default;
    virtual StateInfo describe(StateKey key) = 0;
    virtual std::vector<StateInfo> expand(StateKey key) = 0;
};

/// Expander over a fully stored game; keys are the vertex ids of the game.
class GameExpander : public Expander
{
public:
    explicit GameExpander(Game universe) : universe_(std::move(universe)) {}

    StateInfo describe(StateKey key) override;
    std::vector<StateInfo> expand(StateKey key) override;

    const Game& universe() const { return universe_; }

private:
    Game universe_;
};

/**
 * The explored part of a universe. Vertices are numbered in discovery
 * order; every discovered vertex is incomplete until it is expanded.
 */
class IncrementalGame
{
public:
    struct Delta
    {
        std::size_t new_vertices = 0;
        std::size_t new_edges = 0;
    };

    VertexId add_initial(const StateInfo& info);
    /**
     * Records the full successor list of from and marks it complete. Throws
     * Error if from is already complete or a known state is described with
     * a different owner or priority.
     */
    Delta add_successors(VertexId from, std::span<const StateInfo> successors);

    std::optional<VertexId> find(StateKey key) const;
    StateKey key_of(VertexId v) const { return keys_.at(v); }
    std::size_t size() const { return builder_.size(); }
    Priority priority(VertexId v) const { return builder_.priority(v); }
    bool is_incomplete(VertexId v) const { return incomplete_.contains(v); }
    const VertexSet& incomplete() const { return incomplete_; }

    IncompleteGame snapshot() const;

private:
    VertexId intern(const StateInfo& info, Delta& delta);

    GameBuilder builder_;
    std::vector<StateKey> keys_;
    std::unordered_map<StateKey, VertexId> index_;
    VertexSet incomplete_;
};

enum class ExplorationStrategy { Bfs, Dfs, Random, LowestPriority };

std::string_view to_string(ExplorationStrategy s);
std::optional<ExplorationStrategy> parse_exploration_strategy(std::string_view name);

inline constexpr std::array<ExplorationStrategy, 4> kAllStrategies = {
    ExplorationStrategy::Bfs, ExplorationStrategy::Dfs, ExplorationStrategy::Random,
    ExplorationStrategy::LowestPriority,
};

struct DriverConfig
{
    SolverKind solver = SolverKind::Partial;
    ExplorationStrategy strategy = ExplorationStrategy::Bfs;
    /// Fraction of the total time the solver may use, in (0, 1].
    double solve_time_ratio = 0.10;
    StateKey designated = 0;
    /// Expansions between two solver eligibility checks.
    std::size_t batch_min = 64;
    std::uint64_t seed = 0;
    /// Measure cost in expansion steps and fixpoint work units instead of wall time.
    bool logical_cost = false;
    /// Verify every snapshot against the previous one with check_extension (on by default in debug builds).
#ifdef NDEBUG
    bool check_extensions = false;
#else
    bool check_extensions = true;
#endif
};

struct DriverReport
{
    std::optional<Player> decided_winner;
    std::size_t vertices_explored = 0;
    std::size_t solver_calls = 0;
    std::chrono::nanoseconds explore_time{0};
    std::chrono::nanoseconds solve_time{0};
    std::uint64_t explore_cost = 0;
    std::uint64_t solve_cost = 0;
    bool exhausted = false;
    /// Last snapshot and the regions decided on it.
    IncompleteGame final_game;
    Solution final_solution;
    /// Universe key per vertex of final_game.
    std::vector<StateKey> keys;

    std::uint64_t total_cost() const { return explore_cost + solve_cost; }
};

/**
 * Explores the universe from root and solves on-the-fly with cfg.solver
 * until the designated state is decided or nothing is left to explore. On
 * exhaustion the complete game is solved with zielonka. If the designated
 * state is never discovered, decided_winner stays empty.
 */
DriverReport run_driver(Expander& expander, StateKey root, const DriverConfig& cfg);

} // namespace otfpg

#endif
