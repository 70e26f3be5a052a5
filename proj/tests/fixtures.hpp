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

#ifndef OTFPG_TESTS_FIXTURES_HPP
#define OTFPG_TESTS_FIXTURES_HPP

#include <vector>

#include "otfpg/game.hpp"
#include "otfpg/testkit.hpp"

namespace otfpg::test {

inline constexpr Player E = Player::Even;
inline constexpr Player O = Player::Odd;

struct VertexSpec
{
    Player owner;
    Priority priority;
    std::vector<VertexId> successors;
};

inline Game
make_game(const std::vector<VertexSpec>& spec)
{
    GameBuilder b;
    for (std::size_t v = 0; v < spec.size(); ++v) b.add_vertex(spec[v].owner, spec[v].priority, "u" + std::to_string(v));
    for (std::size_t v = 0; v < spec.size(); ++v) {
        for (auto w : spec[v].successors) b.add_edge(static_cast<VertexId>(v), w);
    }
    return b.build();
}

inline VertexSet
set_of(std::size_t n, std::initializer_list<VertexId> ids)
{
    return VertexSet(n, ids);
}

// u1 is a sink; {u3, u4} is an Odd dominion.
inline Game
example1()
{
    return make_game({
        {E, 2, {1, 2}},
        {O, 3, {}},
        {E, 0, {0, 4}},
        {O, 1, {2, 4}},
        {E, 2, {3}},
    });
}

// solid edges only, u3 and u5 incomplete
inline IncompleteGame
example2_partial()
{
    auto g = make_game({
        {E, 2, {1, 2}},
        {O, 3, {}},
        {E, 0, {0}},
        {E, 2, {2}},
        {O, 1, {2, 3, 5}},
        {O, 2, {}},
    });
    return IncompleteGame(g, set_of(6, {3, 5}));
}

// solid and dotted edges
inline IncompleteGame
example2_full()
{
    auto g = make_game({
        {E, 2, {1, 2}},
        {O, 3, {}},
        {E, 0, {0}},
        {E, 2, {2, 5}},
        {O, 1, {2, 3, 5}},
        {O, 2, {4}},
    });
    return IncompleteGame(g);
}

inline GenSpec
random_spec(std::uint64_t seed, std::size_t n, double incomplete = 0.3, double sinks = 0.1)
{
    GenSpec s;
    s.vertex_count = n;
    s.max_out_degree = 3;
    s.priority_range = 5;
    s.sink_probability = sinks;
    s.incomplete_fraction = incomplete;
    s.seed = seed;
    return s;
}

} // namespace otfpg::test

#endif
