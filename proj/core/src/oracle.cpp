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

#include <string>
#include <vector>

#include "otfpg/solvers.hpp"

namespace otfpg {

namespace {

/// Vertices that can reach `targets` in the graph where p-vertices with a prescribed move keep only that move.
VertexSet
reaching(const Game& g, Player p, std::span<const VertexId> strategy, const VertexSet& targets)
{
    VertexSet seen = targets;
    std::vector<VertexId> stack = targets.to_vector();
    while (!stack.empty()) {
        const auto w = stack.back();
        stack.pop_back();
        for (auto v : g.predecessors(w)) {
            if (seen.contains(v)) continue;
            if (g.owner(v) == p && v < strategy.size() && strategy[v] != kNoVertex && strategy[v] != w) continue;
            seen.insert(v);
            stack.push_back(v);
        }
    }
    return seen;
}

/// Whether v lies on a cycle of the induced graph that only visits priorities >= priority(v).
bool
on_dominated_cycle(const Game& g, Player p, std::span<const VertexId> strategy, VertexId v)
{
    const auto floor = g.priority(v);
    VertexSet seen(g.id_bound());
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (auto w : g.successors(u)) {
            if (g.owner(u) == p && u < strategy.size() && strategy[u] != kNoVertex && strategy[u] != w) continue;
            if (w == v) return true;
            if (g.priority(w) < floor || seen.contains(w)) continue;
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return false;
}

} // namespace

VertexSet
winning_under(const Game& g, Player p, std::span<const VertexId> strategy)
{
    // the opponent wins from v iff it can reach a sink owned by p, or a
    // vertex of its parity that lies on a cycle dominated by that priority
    VertexSet bad(g.id_bound());
    for (auto v : g.vertices()) {
        if (g.is_sink(v)) {
            if (g.owner(v) == p) bad.insert(v);
        } else if (parity_of(g.priority(v)) != p && on_dominated_cycle(g, p, strategy, v)) {
            bad.insert(v);
        }
    }
    return g.vertices() - reaching(g, p, strategy, bad);
}

Solution
brute_force_oracle(const Game& g, const OracleLimits& limits)
{
    if (g.vertex_count() > limits.max_vertices) {
        throw Error("oracle limited to " + std::to_string(limits.max_vertices) + " vertices, game has " +
                    std::to_string(g.vertex_count()));
    }

    auto combinations = [&](Player p) {
        std::uint64_t total = 1;
        for (auto v : g.vertices()) {
            if (g.owner(v) != p) continue;
            const auto d = g.out_degree(v);
            if (d == 0) continue;
            if (total > limits.max_strategies / d) return limits.max_strategies + 1;
            total *= d;
        }
        return total;
    };

    // enumerate whichever player has fewer positional strategies
    const auto even_count = combinations(Player::Even);
    const auto odd_count = combinations(Player::Odd);
    const auto chooser = even_count <= odd_count ? Player::Even : Player::Odd;
    if (std::min(even_count, odd_count) > limits.max_strategies) {
        throw Error("oracle strategy space exceeds " + std::to_string(limits.max_strategies));
    }

    std::vector<VertexId> choice_vertices;
    std::vector<std::vector<VertexId>> options;
    for (auto v : g.vertices()) {
        if (g.owner(v) != chooser || g.is_sink(v)) continue;
        choice_vertices.push_back(v);
        options.emplace_back(g.successors(v).begin(), g.successors(v).end());
    }

    std::vector<VertexId> strategy(g.id_bound(), kNoVertex);
    std::vector<std::size_t> digit(choice_vertices.size(), 0);
    VertexSet won(g.id_bound());
    for (;;) {
        for (std::size_t i = 0; i < choice_vertices.size(); ++i) strategy[choice_vertices[i]] = options[i][digit[i]];
        won |= winning_under(g, chooser, strategy);

        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == options[i].size()) digit[i++] = 0;
        if (i == digit.size()) break;
    }

    Solution s = Solution::undecided_for(g);
    s.assign(chooser, won);
    s.assign(opponent(chooser), g.vertices() - won);
    return s;
}

} // namespace otfpg
