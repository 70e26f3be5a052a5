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

#include "otfpg/fixpoints.hpp"

#include <limits>

namespace otfpg {

namespace {

thread_local std::uint64_t t_work = 0;

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

struct AttractorMode
{
    // opponent vertices in this set are never attracted
    const VertexSet* blocked = nullptr;
    bool monotone = false;
    Priority min_priority = 0;
};

/**
 * Worklist attractor. Each vertex that enters the reached set is processed
 * once; its predecessors are checked through per-vertex counters of
 * successors not yet reached, so the whole computation is O(|E|).
 *
 * In monotone mode the target only seeds the reached set; the result holds
 * exactly the vertices that qualify via the predecessor operator.
 */
AttractorResult
attract(const Game& g, Player alpha, const VertexSet& target, const AttractorMode& mode)
{
    const auto n = g.id_bound();
    VertexSet reach = target & g.vertices();
    reach.resize(n);
    VertexSet result = mode.monotone ? VertexSet(n) : reach;
    std::vector<VertexId> strategy(n, kNoVertex);
    std::vector<std::uint32_t> remaining(n, kUnset);

    std::vector<VertexId> queue = reach.to_vector();
    std::uint64_t work = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto w = queue[head];
        ++work;
        for (auto v : g.predecessors(w)) {
            ++work;
            if (result.contains(v)) continue;
            if (mode.monotone && g.priority(v) < mode.min_priority) continue;
            if (g.owner(v) == alpha) {
                // lowest reached successor
                for (auto s : g.successors(v)) {
                    ++work;
                    if (reach.contains(s)) {
                        strategy[v] = s;
                        break;
                    }
                }
            } else {
                if (mode.blocked != nullptr && mode.blocked->contains(v)) continue;
                if (remaining[v] == kUnset) {
                    remaining[v] = static_cast<std::uint32_t>(g.out_degree(v));
                    work += remaining[v];
                }
                if (--remaining[v] != 0) continue;
            }
            result.insert(v);
            if (!reach.contains(v)) {
                reach.insert(v);
                queue.push_back(v);
            }
        }
    }
    t_work += work;
    return {std::move(result), std::move(strategy)};
}

VertexSet
control_predecessors(const Game& g, Player alpha, const VertexSet& u, const VertexSet* blocked)
{
    VertexSet result(g.id_bound());
    std::uint64_t work = 0;
    for (auto v : g.vertices()) {
        ++work;
        bool any = false;
        bool all = true;
        bool has_successor = false;
        for (auto w : g.successors(v)) {
            ++work;
            has_successor = true;
            if (u.contains(w)) {
                any = true;
            } else {
                all = false;
            }
        }
        if (g.owner(v) == alpha) {
            if (any) result.insert(v);
        } else if (has_successor && all && (blocked == nullptr || !blocked->contains(v))) {
            result.insert(v);
        }
    }
    t_work += work;
    return result;
}

} // namespace

std::uint64_t
work_units()
{
    return t_work;
}

VertexSet
pre(const Game& g, const VertexSet& u)
{
    VertexSet result(g.id_bound());
    std::uint64_t work = 0;
    for (auto w : u) {
        if (!g.contains(w)) continue;
        ++work;
        for (auto v : g.predecessors(w)) {
            ++work;
            result.insert(v);
        }
    }
    t_work += work;
    return result;
}

VertexSet
cpre(const Game& g, Player alpha, const VertexSet& u)
{
    return control_predecessors(g, alpha, u, nullptr);
}

AttractorResult
attr(const Game& g, Player alpha, const VertexSet& u)
{
    return attract(g, alpha, u, {});
}

VertexSet
safe_set(const IncompleteGame& g, Player alpha)
{
    const auto opp = opponent(alpha);
    auto unsafe = attr(g.game, opp, g.game.owned_by(opp) & g.incomplete).set;
    return g.game.vertices() - unsafe;
}

VertexSet
spre(const IncompleteGame& g, Player alpha, const VertexSet& u)
{
    return control_predecessors(g.game, alpha, u, &g.incomplete);
}

AttractorResult
sattr(const IncompleteGame& g, Player alpha, const VertexSet& u)
{
    AttractorMode mode;
    mode.blocked = &g.incomplete;
    return attract(g.game, alpha, u, mode);
}

VertexSet
priority_at_least(const Game& g, Priority c)
{
    VertexSet result(g.id_bound());
    for (auto v : g.vertices()) {
        if (g.priority(v) >= c) result.insert(v);
    }
    return result;
}

VertexSet
priority_equal(const Game& g, Priority c)
{
    VertexSet result(g.id_bound());
    for (auto v : g.vertices()) {
        if (g.priority(v) == c) result.insert(v);
    }
    return result;
}

VertexSet
mpre(const Game& g, Player alpha, const VertexSet& z, const VertexSet& u, Priority c)
{
    return priority_at_least(g, c) & cpre(g, alpha, z | u);
}

VertexSet
mattr(const Game& g, Player alpha, const VertexSet& u, Priority c)
{
    AttractorMode mode;
    mode.monotone = true;
    mode.min_priority = c;
    return attract(g, alpha, u, mode).set;
}

VertexSet
smpre(const IncompleteGame& g, Player alpha, const VertexSet& z, const VertexSet& u, Priority c)
{
    return priority_at_least(g.game, c) & spre(g, alpha, z | u);
}

VertexSet
smattr(const IncompleteGame& g, Player alpha, const VertexSet& u, Priority c)
{
    AttractorMode mode;
    mode.blocked = &g.incomplete;
    mode.monotone = true;
    mode.min_priority = c;
    return attract(g.game, alpha, u, mode).set;
}

VertexSet
greatest_closed(const Game& g, Player alpha, const VertexSet& candidates)
{
    const auto n = g.id_bound();
    VertexSet z = candidates & g.vertices();
    z.resize(n);
    std::vector<std::uint32_t> inside(n, 0);
    std::vector<VertexId> queue;
    std::uint64_t work = 0;

    for (auto v : z) {
        ++work;
        std::uint32_t count = 0;
        std::uint32_t degree = 0;
        for (auto w : g.successors(v)) {
            ++work;
            ++degree;
            if (z.contains(w)) ++count;
        }
        inside[v] = count;
        const bool keep = g.owner(v) == alpha ? count > 0 : (degree > 0 && count == degree);
        if (!keep) queue.push_back(v);
    }
    for (auto v : queue) z.erase(v);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto w = queue[head];
        ++work;
        for (auto v : g.predecessors(w)) {
            ++work;
            if (!z.contains(v)) continue;
            if (g.owner(v) == alpha && --inside[v] > 0) continue;
            z.erase(v);
            queue.push_back(v);
        }
    }
    t_work += work;
    return z;
}

} // namespace otfpg
