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

#ifndef OTFPG_GAME_HPP
#define OTFPG_GAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otfpg/vertex_set.hpp"

namespace otfpg {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }

using Priority = std::uint32_t;

/// The player favoured by priority p under min-parity semantics.
constexpr Player parity_of(Priority p) { return p % 2 == 0 ? Player::Even : Player::Odd; }

constexpr int index_of(Player p) { return static_cast<int>(p); }

std::string_view to_string(Player p);

/**
 * Successor or predecessor list of a vertex, restricted to the vertices of
 * the game it came from. Lists are sorted by id.
 */
class Neighbours
{
public:
    class iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        iterator() = default;
        iterator(const VertexId* pos, const VertexId* end, const VertexSet* mask) : pos_(pos), end_(end), mask_(mask)
        {
            skip();
        }
        VertexId operator*() const { return *pos_; }
        iterator& operator++()
        {
            ++pos_;
            skip();
            return *this;
        }
        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& other) const { return pos_ == other.pos_; }

    private:
        void skip()
        {
            if (mask_ == nullptr) return;
            while (pos_ != end_ && !mask_->contains(*pos_)) ++pos_;
        }

        const VertexId* pos_ = nullptr;
        const VertexId* end_ = nullptr;
        const VertexSet* mask_ = nullptr;
    };

    Neighbours(std::span<const VertexId> raw, const VertexSet* mask) : raw_(raw), mask_(mask) {}

    iterator begin() const { return {raw_.data(), raw_.data() + raw_.size(), mask_}; }
    iterator end() const { return {raw_.data() + raw_.size(), raw_.data() + raw_.size(), nullptr}; }
    bool empty() const { return begin() == end(); }
    std::size_t size() const;

private:
    std::span<const VertexId> raw_;
    const VertexSet* mask_;
};

class GameBuilder;

/**
 * Explicit parity game: owner, priority and adjacency per vertex.
 *
 * A Game is an immutable snapshot. Adjacency is shared between a game and
 * its subgames; a subgame only narrows the vertex set, so ids stay valid
 * across restriction. id_bound() is the size of the id space, which may
 * exceed vertex_count() for restricted games.
 */
class Game
{
public:
    Game();

    std::size_t id_bound() const;
    const VertexSet& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return count_; }
    bool contains(VertexId v) const { return vertices_.contains(v); }

    Player owner(VertexId v) const;
    Priority priority(VertexId v) const;
    std::string_view label(VertexId v) const;

    Neighbours successors(VertexId v) const;
    Neighbours predecessors(VertexId v) const;
    std::size_t out_degree(VertexId v) const;
    bool is_sink(VertexId v) const { return successors(v).empty(); }
    bool has_edge(VertexId from, VertexId to) const;

    VertexSet owned_by(Player p) const;
    /// Largest priority among the vertices, 0 for the empty game.
    Priority max_priority() const;
    std::size_t edge_count() const;

    /// Structural equality over the vertex sets (ids, owners, priorities, edges, labels).
    friend bool operator==(const Game& a, const Game& b);

private:
    friend class GameBuilder;
    friend Game subgame(const Game& g, const VertexSet& u);

    struct Storage
    {
        std::vector<Player> owner;
        std::vector<Priority> priority;
        std::vector<std::string> label;
        std::vector<std::size_t> succ_offset;
        std::vector<VertexId> succ;
        std::vector<std::size_t> pred_offset;
        std::vector<VertexId> pred;
    };

    const VertexSet* mask() const { return restricted_ ? &vertices_ : nullptr; }

    std::shared_ptr<const Storage> data_;
    VertexSet vertices_;
    std::size_t count_ = 0;
    bool restricted_ = false;
};

/**
 * Incremental construction of a Game. Duplicate edges are dropped.
 */
class GameBuilder
{
public:
    VertexId add_vertex(Player owner, Priority priority, std::string label = {});
    void add_edge(VertexId from, VertexId to);

    std::size_t size() const { return owner_.size(); }
    Player owner(VertexId v) const { return owner_.at(v); }
    Priority priority(VertexId v) const { return priority_.at(v); }

    Game build() const;

private:
    std::vector<Player> owner_;
    std::vector<Priority> priority_;
    std::vector<std::string> label_;
    std::vector<std::vector<VertexId>> succ_;
};

/// A game together with the set of vertices whose successors may still grow.
struct IncompleteGame
{
    Game game;
    VertexSet incomplete;

    IncompleteGame() = default;
    explicit IncompleteGame(Game g);
    /// Throws Error unless incomplete is a subset of the vertices of g.
    IncompleteGame(Game g, VertexSet incomplete);

    friend bool operator==(const IncompleteGame& a, const IncompleteGame& b);
};

/**
 * Winning regions plus a positional strategy. strategy[v] == kNoVertex
 * means no move is prescribed for v.
 */
struct Solution
{
    VertexSet won_even;
    VertexSet won_odd;
    VertexSet undecided;
    std::vector<VertexId> strategy;

    /// Everything undecided, no strategy.
    static Solution undecided_for(const Game& g);

    const VertexSet& won(Player p) const { return p == Player::Even ? won_even : won_odd; }
    std::optional<Player> winner(VertexId v) const;

    /// Moves region into the won region of p.
    void assign(Player p, const VertexSet& region);
    /// Grows all members to a larger id space.
    void resize(std::size_t id_bound);
};

/// Checks region disjointness/coverage and strategy consistency; returns a description of the first violation.
std::optional<std::string> validate(const Game& g, const Solution& s);

VertexSet sinks(const Game& g);
VertexSet sinks_of(const Game& g, Player p);

/// G ∩ U: same ids, vertex set narrowed to U, edges restricted to U x U.
Game subgame(const Game& g, const VertexSet& u);
IncompleteGame subgame(const IncompleteGame& g, const VertexSet& u);

/**
 * True iff g2 extends g1: vertices and owners are kept, no edge is lost,
 * complete vertices of g1 gain no successors, priorities agree and no
 * complete vertex becomes incomplete again.
 */
bool check_extension(const IncompleteGame& g1, const IncompleteGame& g2);

/// Winner of the finite play ending in sink v; throws Error if v has successors.
Player play_winner(const Game& g, VertexId v);

} // namespace otfpg

#endif
