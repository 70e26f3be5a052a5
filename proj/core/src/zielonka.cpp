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
#include <array>
#include <limits>

#include "otfpg/solvers.hpp"

namespace otfpg {

namespace {

class ZielonkaSolver
{
public:
    explicit ZielonkaSolver(const Game& g) : strategy_(g.id_bound(), kNoVertex), bound_(g.id_bound()) {}

    /**
     * Solves the subgame `region` and returns {W_even, W_odd}. Strategies of
     * the winners are written to strategy_ for every vertex of region;
     * entries of losers may be stale and are cleaned up by the caller.
     */
    std::array<VertexSet, 2> solve(Game region)
    {
        std::array<VertexSet, 2> won{VertexSet(bound_), VertexSet(bound_)};
        while (region.vertex_count() > 0) {
            // sinks are lost by their owner; attract towards them first
            for (auto p : {Player::Even, Player::Odd}) {
                auto lost = sinks_of(region, opponent(p));
                if (lost.empty()) continue;
                auto a = attr(region, p, lost);
                keep(a);
                won[index_of(p)] |= a.set;
                region = subgame(region, region.vertices() - a.set);
            }
            if (region.vertex_count() == 0) break;

            Priority lowest = std::numeric_limits<Priority>::max();
            for (auto v : region.vertices()) lowest = std::min(lowest, region.priority(v));
            const auto alpha = parity_of(lowest);
            const auto opp = opponent(alpha);

            auto top = priority_equal(region, lowest);
            auto a = attr(region, alpha, top);
            auto sub = solve(subgame(region, region.vertices() - a.set));

            if (sub[index_of(opp)].empty()) {
                keep(a);
                for (auto v : top) {
                    if (region.owner(v) == alpha) strategy_[v] = *region.successors(v).begin();
                }
                won[index_of(alpha)] |= region.vertices();
                break;
            }

            auto b = attr(region, opp, sub[index_of(opp)]);
            keep(b);
            won[index_of(opp)] |= b.set;
            region = subgame(region, region.vertices() - b.set);
        }
        return won;
    }

    std::vector<VertexId>& strategy() { return strategy_; }

private:
    void keep(const AttractorResult& a)
    {
        for (auto v : a.set) {
            if (a.strategy[v] != kNoVertex) strategy_[v] = a.strategy[v];
        }
    }

    std::vector<VertexId> strategy_;
    std::size_t bound_;
};

} // namespace

Solution
zielonka(const Game& g)
{
    ZielonkaSolver solver(g);
    auto won = solver.solve(g);

    Solution s = Solution::undecided_for(g);
    s.assign(Player::Even, won[0]);
    s.assign(Player::Odd, won[1]);
    s.strategy = std::move(solver.strategy());
    for (VertexId v = 0; v < s.strategy.size(); ++v) {
        if (s.strategy[v] == kNoVertex) continue;
        if (!g.contains(v) || s.winner(v) != g.owner(v)) s.strategy[v] = kNoVertex;
    }
    return s;
}

} // namespace otfpg
