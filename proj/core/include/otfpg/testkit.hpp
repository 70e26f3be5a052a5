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

#ifndef OTFPG_TESTKIT_HPP
#define OTFPG_TESTKIT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "otfpg/game.hpp"

namespace otfpg {

struct GenSpec
{
    std::size_t vertex_count = 16;
    std::size_t max_out_degree = 3;
    /// Priorities are drawn uniformly from [0, priority_range].
    Priority priority_range = 5;
    double sink_probability = 0.0;
    /// Exactly round(incomplete_fraction * vertex_count) vertices are incomplete.
    double incomplete_fraction = 0.0;
    std::uint64_t seed = 0;
};

/// Random incomplete game; deterministic in spec. Throws Error for 0 vertices.
IncompleteGame gen_random(const GenSpec& spec);

struct ExtensionSpec
{
    /// Upper bound on the successors an incomplete vertex gains per step.
    std::size_t max_new_edges = 3;
    /// Chance that a new successor is a fresh vertex.
    double fresh_probability = 0.2;
    /// Chance that an incomplete vertex becomes complete.
    double completion_probability = 0.5;
    Priority priority_range = 5;
    /// Complete every incomplete vertex and add no fresh vertices.
    bool force_complete = false;
};

/// A random g2 with g ⊑ g2. g must not be a restricted subgame.
IncompleteGame gen_extension(const IncompleteGame& g, std::uint64_t seed, const ExtensionSpec& spec = {});

struct FreshVertex
{
    Player owner = Player::Even;
    Priority priority = 0;
    std::string label;
};

/**
 * Explicit extension step. Fresh vertices get the ids following g's and
 * start out incomplete; vertices listed in completed lose that status.
 * The result is not checked against g.
 */
struct ScriptedExtension
{
    std::vector<FreshVertex> fresh;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> completed;
};

IncompleteGame apply_extension(const IncompleteGame& g, const ScriptedExtension& ext);

/**
 * Complete game g + z where z is a fresh alpha-owned sink with priority 0
 * and every incomplete vertex of g gains the edge to z. Plays ending in z
 * are won by the opponent of alpha. z has id g.game.id_bound().
 */
Game adversarial_extension(const IncompleteGame& g, Player alpha);

/**
 * Counter lattice of (depth + 1)^2 Odd-owned states (x, y) with priority
 * 0. Every state can idle, reset x, or tick the counter; (depth, depth)
 * wraps around to the root (0, 0), which has id 0. With violation the
 * state (depth - 1, 0) also leads to an Even-owned sink at distance depth
 * from the root, so Odd wins the root; without it Even wins everywhere.
 */
Game gen_safety_family(std::size_t depth, bool violation);

} // namespace otfpg

#endif
