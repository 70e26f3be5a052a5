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

#include "otfpg/exploration.hpp"

#include <deque>
#include <queue>
#include <random>

#include "otfpg/fixpoints.hpp"

namespace otfpg {

StateInfo
GameExpander::describe(StateKey key)
{
    if (key >= universe_.id_bound() || !universe_.contains(static_cast<VertexId>(key))) {
        throw Error("unknown state " + std::to_string(key));
    }
    const auto v = static_cast<VertexId>(key);
    return {key, universe_.owner(v), universe_.priority(v), std::string(universe_.label(v))};
}

std::vector<StateInfo>
GameExpander::expand(StateKey key)
{
    const auto v = static_cast<VertexId>(describe(key).key);
    std::vector<StateInfo> result;
    for (auto w : universe_.successors(v)) result.push_back(describe(w));
    return result;
}

VertexId
IncrementalGame::intern(const StateInfo& info, Delta& delta)
{
    if (auto it = index_.find(info.key); it != index_.end()) {
        const auto v = it->second;
        if (builder_.owner(v) != info.owner || builder_.priority(v) != info.priority) {
            throw Error("state " + std::to_string(info.key) + " changed its owner or priority");
        }
        return v;
    }
    const auto v = builder_.add_vertex(info.owner, info.priority, info.label);
    keys_.push_back(info.key);
    index_.emplace(info.key, v);
    incomplete_.insert(v);
    ++delta.new_vertices;
    return v;
}

VertexId
IncrementalGame::add_initial(const StateInfo& info)
{
    Delta delta;
    return intern(info, delta);
}

IncrementalGame::Delta
IncrementalGame::add_successors(VertexId from, std::span<const StateInfo> successors)
{
    if (from >= size()) throw Error("vertex " + std::to_string(from) + " is not known");
    if (!incomplete_.contains(from)) throw Error("vertex " + std::to_string(from) + " is already complete");
    Delta delta;
    for (const auto& s : successors) {
        builder_.add_edge(from, intern(s, delta));
        ++delta.new_edges;
    }
    incomplete_.erase(from);
    return delta;
}

std::optional<VertexId>
IncrementalGame::find(StateKey key) const
{
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IncompleteGame
IncrementalGame::snapshot() const
{
    auto g = builder_.build();
    auto i = incomplete_;
    i.resize(g.id_bound());
    return IncompleteGame(std::move(g), std::move(i));
}

std::string_view
to_string(ExplorationStrategy s)
{
    switch (s) {
    case ExplorationStrategy::Bfs: return "bfs";
    case ExplorationStrategy::Dfs: return "dfs";
    case ExplorationStrategy::Random: return "random";
    case ExplorationStrategy::LowestPriority: return "lowprio";
    }
    return "?";
}

std::optional<ExplorationStrategy>
parse_exploration_strategy(std::string_view name)
{
    for (auto s : kAllStrategies) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

namespace {

/// The incomplete vertices in the order the strategy expands them.
class Frontier
{
public:
    Frontier(ExplorationStrategy strategy, std::uint64_t seed) : strategy_(strategy), rng_(seed) {}

    void push(VertexId v, Priority p)
    {
        if (strategy_ == ExplorationStrategy::LowestPriority) {
            heap_.emplace(p, v);
        } else {
            list_.push_back(v);
        }
    }

    bool empty() const { return list_.empty() && heap_.empty(); }

    VertexId pop()
    {
        VertexId v = kNoVertex;
        switch (strategy_) {
        case ExplorationStrategy::Bfs:
            v = list_.front();
            list_.pop_front();
            break;
        case ExplorationStrategy::Dfs:
            v = list_.back();
            list_.pop_back();
            break;
        case ExplorationStrategy::Random: {
            std::uniform_int_distribution<std::size_t> pick(0, list_.size() - 1);
            auto i = pick(rng_);
            v = list_[i];
            list_[i] = list_.back();
            list_.pop_back();
            break;
        }
        case ExplorationStrategy::LowestPriority:
            v = heap_.top().second;
            heap_.pop();
            break;
        }
        return v;
    }

private:
    using Entry = std::pair<Priority, VertexId>;

    ExplorationStrategy strategy_;
    std::mt19937_64 rng_;
    std::deque<VertexId> list_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

using Clock = std::chrono::steady_clock;

} // namespace

DriverReport
run_driver(Expander& expander, StateKey root, const DriverConfig& cfg)
{
    if (!(cfg.solve_time_ratio > 0.0 && cfg.solve_time_ratio <= 1.0)) {
        throw Error("solve time ratio must lie in (0, 1]");
    }
    if (cfg.batch_min == 0) throw Error("batch size must be at least 1");

    DriverReport report;
    IncrementalGame explored;
    Frontier frontier(cfg.strategy, cfg.seed);

    auto started = Clock::now();
    const auto root_info = expander.describe(root);
    frontier.push(explored.add_initial(root_info), root_info.priority);
    report.explore_time += Clock::now() - started;

    Solution known;
    IncompleteGame previous;
    std::optional<VertexId> designated = explored.find(cfg.designated);

    auto solver_allowed = [&] {
        if (cfg.logical_cost) {
            return static_cast<double>(report.solve_cost) < cfg.solve_time_ratio * static_cast<double>(report.total_cost());
        }
        const auto total = report.explore_time + report.solve_time;
        return static_cast<double>(report.solve_time.count()) < cfg.solve_time_ratio * static_cast<double>(total.count());
    };

    auto take_snapshot = [&] {
        auto snap = explored.snapshot();
        if (cfg.check_extensions && previous.game.vertex_count() > 0 && !check_extension(previous, snap)) {
            throw Error("exploration produced a snapshot that does not extend its predecessor");
        }
        if (cfg.check_extensions) previous = snap;
        return snap;
    };

    auto finish = [&](IncompleteGame snap) {
        report.final_game = std::move(snap);
        report.vertices_explored = explored.size();
        report.keys.reserve(explored.size());
        for (VertexId v = 0; v < explored.size(); ++v) report.keys.push_back(explored.key_of(v));
    };

    while (!frontier.empty()) {
        started = Clock::now();
        for (std::size_t i = 0; i < cfg.batch_min && !frontier.empty(); ++i) {
            const auto v = frontier.pop();
            const auto successors = expander.expand(explored.key_of(v));
            const auto before = explored.size();
            explored.add_successors(v, successors);
            for (auto w = static_cast<VertexId>(before); w < explored.size(); ++w) {
                frontier.push(w, explored.priority(w));
            }
            report.explore_cost += 1 + successors.size();
        }
        report.explore_time += Clock::now() - started;

        if (cfg.solver == SolverKind::Full) continue;
        if (!designated) designated = explored.find(cfg.designated);
        if (!designated || frontier.empty() || !solver_allowed()) continue;

        started = Clock::now();
        auto snap = take_snapshot();
        const auto work_before = work_units();
        known = solve_partial(snap, cfg.solver, &known);
        report.solve_cost += work_units() - work_before;
        report.solve_time += Clock::now() - started;
        ++report.solver_calls;

        if (auto w = known.winner(*designated)) {
            report.decided_winner = w;
            report.final_solution = std::move(known);
            finish(std::move(snap));
            return report;
        }
    }

    started = Clock::now();
    auto snap = take_snapshot();
    const auto work_before = work_units();
    report.final_solution = zielonka(snap.game);
    report.solve_cost += work_units() - work_before;
    report.solve_time += Clock::now() - started;
    ++report.solver_calls;
    report.exhausted = true;

    if (!designated) designated = explored.find(cfg.designated);
    if (designated) report.decided_winner = report.final_solution.winner(*designated);
    finish(std::move(snap));
    return report;
}

} // namespace otfpg
