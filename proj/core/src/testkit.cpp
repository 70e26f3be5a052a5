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

#include "otfpg/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace otfpg {

namespace {

Player
random_owner(std::mt19937_64& rng)
{
    return std::bernoulli_distribution(0.5)(rng) ? Player::Odd : Player::Even;
}

/// Builder holding a copy of g's vertices and edges.
GameBuilder
copy_of(const Game& g)
{
    if (g.vertex_count() != g.id_bound()) throw Error("cannot extend a restricted subgame");
    GameBuilder b;
    for (VertexId v = 0; v < g.id_bound(); ++v) b.add_vertex(g.owner(v), g.priority(v), std::string(g.label(v)));
    for (VertexId v = 0; v < g.id_bound(); ++v) {
        for (auto w : g.successors(v)) b.add_edge(v, w);
    }
    return b;
}

} // namespace

IncompleteGame
gen_random(const GenSpec& spec)
{
    if (spec.vertex_count == 0) throw Error("a game needs at least one vertex");
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<Priority> priority(0, spec.priority_range);
    std::uniform_int_distribution<VertexId> target(0, static_cast<VertexId>(spec.vertex_count - 1));
    std::bernoulli_distribution sink(std::clamp(spec.sink_probability, 0.0, 1.0));

    GameBuilder b;
    for (std::size_t i = 0; i < spec.vertex_count; ++i) b.add_vertex(random_owner(rng), priority(rng));
    for (VertexId v = 0; v < spec.vertex_count; ++v) {
        if (spec.max_out_degree == 0 || sink(rng)) continue;
        auto degree = std::uniform_int_distribution<std::size_t>(1, spec.max_out_degree)(rng);
        for (std::size_t k = 0; k < degree; ++k) b.add_edge(v, target(rng));
    }

    std::vector<VertexId> order(spec.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto fraction = std::clamp(spec.incomplete_fraction, 0.0, 1.0);
    const auto k = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(spec.vertex_count)));
    VertexSet incomplete(spec.vertex_count);
    for (std::size_t i = 0; i < k; ++i) incomplete.insert(order[i]);
    return IncompleteGame(b.build(), std::move(incomplete));
}

IncompleteGame
gen_extension(const IncompleteGame& g, std::uint64_t seed, const ExtensionSpec& spec)
{
    std::mt19937_64 rng(seed);
    auto b = copy_of(g.game);
    std::uniform_int_distribution<Priority> priority(0, spec.priority_range);
    std::uniform_int_distribution<std::size_t> edges(0, spec.max_new_edges);
    std::bernoulli_distribution fresh(spec.force_complete ? 0.0 : std::clamp(spec.fresh_probability, 0.0, 1.0));
    std::bernoulli_distribution complete(std::clamp(spec.completion_probability, 0.0, 1.0));

    VertexSet incomplete = g.incomplete;
    for (auto v : g.incomplete) {
        const auto k = edges(rng);
        for (std::size_t i = 0; i < k; ++i) {
            VertexId to;
            if (fresh(rng)) {
                to = b.add_vertex(random_owner(rng), priority(rng));
                incomplete.insert(to);
            } else {
                to = std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(b.size() - 1))(rng);
            }
            b.add_edge(v, to);
        }
        if (spec.force_complete || complete(rng)) incomplete.erase(v);
    }
    auto game = b.build();
    incomplete.resize(game.id_bound());
    return IncompleteGame(std::move(game), std::move(incomplete));
}

IncompleteGame
apply_extension(const IncompleteGame& g, const ScriptedExtension& ext)
{
    auto b = copy_of(g.game);
    VertexSet incomplete = g.incomplete;
    for (const auto& f : ext.fresh) incomplete.insert(b.add_vertex(f.owner, f.priority, f.label));
    for (auto [from, to] : ext.edges) b.add_edge(from, to);
    for (auto v : ext.completed) incomplete.erase(v);
    auto game = b.build();
    incomplete.resize(game.id_bound());
    return IncompleteGame(std::move(game), std::move(incomplete));
}

Game
adversarial_extension(const IncompleteGame& g, Player alpha)
{
    auto b = copy_of(g.game);
    const auto z = b.add_vertex(alpha, 0, "z");
    for (auto v : g.incomplete) b.add_edge(v, z);
    return b.build();
}

Game
gen_safety_family(std::size_t depth, bool violation)
{
    if (depth == 0) throw Error("depth must be at least 1");
    const auto side = depth + 1;
    auto id = [side](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * side + x); };

    GameBuilder b;
    for (std::size_t y = 0; y < side; ++y) {
        for (std::size_t x = 0; x < side; ++x) {
            b.add_vertex(Player::Odd, 0, std::to_string(x) + "," + std::to_string(y));
        }
    }
    for (std::size_t y = 0; y < side; ++y) {
        for (std::size_t x = 0; x < side; ++x) {
            const auto v = id(x, y);
            b.add_edge(v, v);
            if (x > 0) b.add_edge(v, id(0, y));
            if (x < depth) {
                b.add_edge(v, id(x + 1, y));
            } else if (y < depth) {
                b.add_edge(v, id(0, y + 1));
            } else {
                b.add_edge(v, id(0, 0));
            }
        }
    }
    if (violation) {
        const auto bad = b.add_vertex(Player::Even, 0, "false");
        b.add_edge(id(depth - 1, 0), bad);
    }
    return b.build();
}

} // namespace otfpg
