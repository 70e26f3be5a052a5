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

#ifndef OTFPG_FIXPOINTS_HPP
#define OTFPG_FIXPOINTS_HPP

#include <cstdint>
#include <vector>

#include "otfpg/game.hpp"

namespace otfpg {

/**
 * Attractor set plus the moves that witness it. strategy[v] is set for the
 * attracted vertices owned by the attracting player (kNoVertex elsewhere)
 * and always points into set or the target.
 */
struct AttractorResult
{
    VertexSet set;
    std::vector<VertexId> strategy;
};

/// {v | some successor of v lies in u}
VertexSet pre(const Game& g, const VertexSet& u);

/**
 * Control predecessor: alpha-vertices with a successor in u, plus
 * opponent vertices that are not sinks and have all successors in u.
 */
VertexSet cpre(const Game& g, Player alpha, const VertexSet& u);

/// Least fixpoint of Z -> u ∪ cpre(Z).
AttractorResult attr(const Game& g, Player alpha, const VertexSet& u);

/// V minus the opponent's attractor to its own incomplete vertices.
VertexSet safe_set(const IncompleteGame& g, Player alpha);

/// cpre that additionally refuses opponent-owned incomplete vertices.
VertexSet spre(const IncompleteGame& g, Player alpha, const VertexSet& u);

/// Least fixpoint of Z -> u ∪ spre(Z).
AttractorResult sattr(const IncompleteGame& g, Player alpha, const VertexSet& u);

/// {v | priority(v) >= c}
VertexSet priority_at_least(const Game& g, Priority c);
/// {v | priority(v) == c}
VertexSet priority_equal(const Game& g, Priority c);

/// P>=c ∩ cpre(z ∪ u)
VertexSet mpre(const Game& g, Player alpha, const VertexSet& z, const VertexSet& u, Priority c);

/**
 * Monotone attractor: least fixpoint of Z -> mpre(Z, u, c). Members of u
 * are only part of the result when they are attracted themselves.
 */
VertexSet mattr(const Game& g, Player alpha, const VertexSet& u, Priority c);

/// P>=c ∩ spre(z ∪ u)
VertexSet smpre(const IncompleteGame& g, Player alpha, const VertexSet& z, const VertexSet& u, Priority c);
/// Least fixpoint of Z -> smpre(Z, u, c).
VertexSet smattr(const IncompleteGame& g, Player alpha, const VertexSet& u, Priority c);

/**
 * Largest Z ⊆ candidates in which every alpha-vertex has a successor in Z
 * and every opponent vertex is a non-sink with all successors in Z. This
 * is νZ.(candidates ∩ cpre(Z)), computed by elimination.
 */
VertexSet greatest_closed(const Game& g, Player alpha, const VertexSet& candidates);

/**
 * Number of vertex visits and edge scans performed by the fixpoint engines
 * on the calling thread since it started. Used as a deterministic cost
 * measure.
 */
std::uint64_t work_units();

} // namespace otfpg

#endif
