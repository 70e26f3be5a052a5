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

#include "otfpg/game.hpp"

#include <algorithm>
#include <string>

namespace otfpg {

std::string_view
to_string(Player p)
{
    return p == Player::Even ? "even" : "odd";
}

std::size_t
Neighbours::size() const
{
    if (mask_ == nullptr) return raw_.size();
    return static_cast<std::size_t>(std::distance(begin(), end()));
}

Game::Game()
{
    auto s = std::make_shared<Storage>();
    s->succ_offset.push_back(0);
    s->pred_offset.push_back(0);
    data_ = std::move(s);
}

std::size_t
Game::id_bound() const
{
    return data_->owner.size();
}

Player
Game::owner(VertexId v) const
{
    return data_->owner[v];
}

Priority
Game::priority(VertexId v) const
{
    return data_->priority[v];
}

std::string_view
Game::label(VertexId v) const
{
    return data_->label[v];
}

Neighbours
Game::successors(VertexId v) const
{
    const auto& s = *data_;
    const auto* base = s.succ.data();
    return {std::span<const VertexId>(base + s.succ_offset[v], base + s.succ_offset[v + 1]), mask()};
}

Neighbours
Game::predecessors(VertexId v) const
{
    const auto& s = *data_;
    const auto* base = s.pred.data();
    return {std::span<const VertexId>(base + s.pred_offset[v], base + s.pred_offset[v + 1]), mask()};
}

std::size_t
Game::out_degree(VertexId v) const
{
    return successors(v).size();
}

bool
Game::has_edge(VertexId from, VertexId to) const
{
    if (!contains(from) || !contains(to)) return false;
    const auto& s = *data_;
    const auto* first = s.succ.data() + s.succ_offset[from];
    const auto* last = s.succ.data() + s.succ_offset[from + 1];
    return std::binary_search(first, last, to);
}

VertexSet
Game::owned_by(Player p) const
{
    VertexSet result(id_bound());
    for (auto v : vertices_) {
        if (data_->owner[v] == p) result.insert(v);
    }
    return result;
}

Priority
Game::max_priority() const
{
    Priority m = 0;
    for (auto v : vertices_) m = std::max(m, data_->priority[v]);
    return m;
}

std::size_t
Game::edge_count() const
{
    if (!restricted_) return data_->succ.size();
    std::size_t total = 0;
    for (auto v : vertices_) total += out_degree(v);
    return total;
}

bool
operator==(const Game& a, const Game& b)
{
    if (!(a.vertices_ == b.vertices_)) return false;
    for (auto v : a.vertices_) {
        if (a.owner(v) != b.owner(v) || a.priority(v) != b.priority(v) || a.label(v) != b.label(v)) return false;
        auto sa = a.successors(v);
        auto sb = b.successors(v);
        if (!std::equal(sa.begin(), sa.end(), sb.begin(), sb.end())) return false;
    }
    return true;
}

VertexId
GameBuilder::add_vertex(Player owner, Priority priority, std::string label)
{
    owner_.push_back(owner);
    priority_.push_back(priority);
    label_.push_back(std::move(label));
    succ_.emplace_back();
    return static_cast<VertexId>(owner_.size() - 1);
}

void
GameBuilder::add_edge(VertexId from, VertexId to)
{
    if (from >= size() || to >= size()) {
        throw Error("edge " + std::to_string(from) + " -> " + std::to_string(to) + " refers to an unknown vertex");
    }
    succ_[from].push_back(to);
}

Game
GameBuilder::build() const
{
    const auto n = size();
    auto storage = std::make_shared<Game::Storage>();
    storage->owner = owner_;
    storage->priority = priority_;
    storage->label = label_;

    std::vector<std::vector<VertexId>> succ = succ_;
    std::vector<std::size_t> indegree(n, 0);
    storage->succ_offset.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = succ[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        storage->succ_offset[v + 1] = storage->succ_offset[v] + list.size();
        for (auto w : list) ++indegree[w];
    }
    storage->succ.reserve(storage->succ_offset[n]);
    for (const auto& list : succ) storage->succ.insert(storage->succ.end(), list.begin(), list.end());

    storage->pred_offset.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) storage->pred_offset[v + 1] = storage->pred_offset[v] + indegree[v];
    storage->pred.resize(storage->pred_offset[n]);
    std::vector<std::size_t> fill(storage->pred_offset.begin(), storage->pred_offset.end() - 1);
    // ascending sources keep every predecessor list sorted
    for (std::size_t v = 0; v < n; ++v) {
        for (auto w : succ[v]) storage->pred[fill[w]++] = static_cast<VertexId>(v);
    }

    Game g;
    g.data_ = std::move(storage);
    g.vertices_ = VertexSet::full(n);
    g.count_ = n;
    g.restricted_ = false;
    return g;
}

IncompleteGame::IncompleteGame(Game g) : game(std::move(g)), incomplete(game.id_bound()) {}

IncompleteGame::IncompleteGame(Game g, VertexSet i) : game(std::move(g)), incomplete(std::move(i))
{
    if (!incomplete.is_subset_of(game.vertices())) throw Error("incomplete set is not contained in the vertex set");
    incomplete.resize(game.id_bound());
}

bool
operator==(const IncompleteGame& a, const IncompleteGame& b)
{
    return a.game == b.game && a.incomplete == b.incomplete;
}

Solution
Solution::undecided_for(const Game& g)
{
    Solution s;
    s.won_even = VertexSet(g.id_bound());
    s.won_odd = VertexSet(g.id_bound());
    s.undecided = g.vertices();
    s.strategy.assign(g.id_bound(), kNoVertex);
    return s;
}

std::optional<Player>
Solution::winner(VertexId v) const
{
    if (won_even.contains(v)) return Player::Even;
    if (won_odd.contains(v)) return Player::Odd;
    return std::nullopt;
}

void
Solution::assign(Player p, const VertexSet& region)
{
    (p == Player::Even ? won_even : won_odd) |= region;
    undecided -= region;
}

void
Solution::resize(std::size_t id_bound)
{
    won_even.resize(id_bound);
    won_odd.resize(id_bound);
    undecided.resize(id_bound);
    strategy.resize(id_bound, kNoVertex);
}

std::optional<std::string>
validate(const Game& g, const Solution& s)
{
    if (s.won_even.intersects(s.won_odd) || s.won_even.intersects(s.undecided) || s.won_odd.intersects(s.undecided)) {
        return "regions overlap";
    }
    if (!((s.won_even | s.won_odd | s.undecided) == g.vertices())) return "regions do not cover the vertex set";
    for (VertexId v = 0; v < s.strategy.size(); ++v) {
        const auto to = s.strategy[v];
        if (to == kNoVertex) continue;
        if (!g.contains(v)) return "strategy defined outside the game at " + std::to_string(v);
        if (!g.has_edge(v, to)) return "strategy move " + std::to_string(v) + " -> " + std::to_string(to) + " is not an edge";
        if (!s.won(g.owner(v)).contains(v)) return "strategy defined at " + std::to_string(v) + " outside its owner's region";
    }
    return std::nullopt;
}

VertexSet
sinks(const Game& g)
{
    VertexSet result(g.id_bound());
    for (auto v : g.vertices()) {
        if (g.is_sink(v)) result.insert(v);
    }
    return result;
}

VertexSet
sinks_of(const Game& g, Player p)
{
    VertexSet result(g.id_bound());
    for (auto v : g.vertices()) {
        if (g.owner(v) == p && g.is_sink(v)) result.insert(v);
    }
    return result;
}

Game
subgame(const Game& g, const VertexSet& u)
{
    Game result = g;
    result.vertices_ = g.vertices_ & u;
    result.vertices_.resize(g.id_bound());
    result.count_ = result.vertices_.count();
    result.restricted_ = result.count_ != g.id_bound();
    return result;
}

IncompleteGame
subgame(const IncompleteGame& g, const VertexSet& u)
{
    auto restricted = subgame(g.game, u);
    auto incomplete = g.incomplete & restricted.vertices();
    return IncompleteGame(std::move(restricted), std::move(incomplete));
}

bool
check_extension(const IncompleteGame& g1, const IncompleteGame& g2)
{
    const auto& a = g1.game;
    const auto& b = g2.game;
    // (1) vertices and owners are kept
    if (!a.vertices().is_subset_of(b.vertices())) return false;
    for (auto v : a.vertices()) {
        if (a.owner(v) != b.owner(v)) return false;
        // (3) priorities agree
        if (a.priority(v) != b.priority(v)) return false;
    }
    // (2) no edge is lost and complete vertices gain no successors
    for (auto v : a.vertices()) {
        for (auto w : a.successors(v)) {
            if (!b.has_edge(v, w)) return false;
        }
        if (!g1.incomplete.contains(v) && b.out_degree(v) != a.out_degree(v)) return false;
    }
    // (4) no complete vertex becomes incomplete
    for (auto v : g2.incomplete) {
        if (a.contains(v) && !g1.incomplete.contains(v)) return false;
    }
    return true;
}

Player
play_winner(const Game& g, VertexId v)
{
    if (!g.contains(v)) throw Error("vertex " + std::to_string(v) + " is not in the game");
    if (!g.is_sink(v)) throw Error("vertex " + std::to_string(v) + " has successors; the play is not maximal");
    return opponent(g.owner(v));
}

} // namespace otfpg
