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

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "otfpg/fixpoints.hpp"
#include "otfpg/io.hpp"
#include "otfpg/solvers.hpp"
#include "otfpg/testkit.hpp"

using namespace otfpg;
using namespace otfpg::test;

TEST(GenRandom, DeterministicUnderSeed)
{
    auto spec = random_spec(42, 80);
    EXPECT_EQ(serialize_game(gen_random(spec)), serialize_game(gen_random(spec)));
    spec.seed = 43;
    EXPECT_NE(serialize_game(gen_random(random_spec(42, 80))), serialize_game(gen_random(spec)));
}

TEST(GenRandom, HonoursBounds)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenSpec spec = random_spec(seed, 1 + seed % 90, 0.25, 0.0);
        spec.max_out_degree = 1 + seed % 4;
        spec.priority_range = seed % 7;
        auto g = gen_random(spec);
        EXPECT_EQ(g.game.vertex_count(), spec.vertex_count);
        EXPECT_TRUE(sinks(g.game).empty());
        EXPECT_EQ(g.incomplete.count(), static_cast<std::size_t>(std::lround(0.25 * spec.vertex_count)));
        for (auto v : g.game.vertices()) {
            EXPECT_LE(g.game.out_degree(v), spec.max_out_degree);
            EXPECT_GE(g.game.out_degree(v), 1u);
            EXPECT_LE(g.game.priority(v), spec.priority_range);
        }
    }
    auto complete = gen_random(random_spec(1, 30, 0.0));
    EXPECT_TRUE(complete.incomplete.empty());
}

TEST(GenRandom, RejectsEmptyGames)
{
    EXPECT_THROW(gen_random(random_spec(0, 0)), Error);
}

TEST(GenExtension, ProducesExtensions)
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto g = gen_random(random_spec(seed, 5 + seed % 40, 0.4));
        auto h = gen_extension(g, seed);
        ASSERT_TRUE(check_extension(g, h)) << seed;
    }
}

TEST(GenExtension, ForcedCompletionReachesCompleteGame)
{
    auto g = gen_random(random_spec(3, 40, 0.5));
    ExtensionSpec spec;
    spec.force_complete = true;
    auto h = gen_extension(g, 9, spec);
    EXPECT_TRUE(h.incomplete.empty());
    EXPECT_TRUE(check_extension(g, h));

    // repeated unforced steps also terminate once nothing is incomplete
    auto k = g;
    ExtensionSpec never_fresh;
    never_fresh.fresh_probability = 0;
    for (std::uint64_t i = 0; i < 200 && !k.incomplete.empty(); ++i) k = gen_extension(k, i, never_fresh);
    EXPECT_TRUE(k.incomplete.empty());
}

TEST(ApplyExtension, ScriptedExample2)
{
    ScriptedExtension ext;
    ext.edges = {{3, 5}, {5, 4}};
    ext.completed = {3, 5};
    auto h = apply_extension(example2_partial(), ext);
    EXPECT_EQ(h, example2_full());
    EXPECT_TRUE(check_extension(example2_partial(), h));
}

TEST(AdversarialExtension, Example2)
{
    auto g = example2_partial();
    auto h = adversarial_extension(g, Player::Even);
    EXPECT_EQ(h.vertex_count(), 7u);
    EXPECT_EQ(h.owner(6), Player::Even);
    EXPECT_EQ(h.priority(6), 0u);
    EXPECT_TRUE(h.is_sink(6));
    EXPECT_TRUE(h.has_edge(3, 6));
    EXPECT_TRUE(h.has_edge(5, 6));
    EXPECT_TRUE(check_extension(g, IncompleteGame(h)));

    auto s = zielonka(h);
    EXPECT_EQ(s.winner(6), Player::Odd);
    // u5 escapes to z, u4 follows
    EXPECT_EQ(s.winner(5), Player::Odd);
    EXPECT_EQ(s.winner(4), Player::Odd);
    for (auto v : safe_set(g, Player::Even)) EXPECT_EQ(s.winner(v), Player::Even);
}

TEST(AdversarialExtension, CompleteGameGetsIsolatedVertex)
{
    auto h = adversarial_extension(IncompleteGame(example1()), Player::Odd);
    EXPECT_EQ(h.vertex_count(), 6u);
    EXPECT_TRUE(h.predecessors(5).empty());
    EXPECT_EQ(subgame(h, example1().vertices()), example1());
}

TEST(AdversarialExtension, FlipsVerticesOutsideSafeSets)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = gen_random(random_spec(seed, 5 + seed % 50, 0.3, 0.1));
        for (auto alpha : {Player::Even, Player::Odd}) {
            auto h = adversarial_extension(g, alpha);
            auto s = zielonka(h);
            auto w = zielonka(g.game).won(alpha);
            for (auto v : w - safe_set(g, alpha)) ASSERT_EQ(s.winner(v), opponent(alpha)) << seed;
        }
    }
}

TEST(SafetyFamily, Shape)
{
    for (std::size_t d : {1u, 2u, 5u, 20u}) {
        auto ok = gen_safety_family(d, false);
        EXPECT_EQ(ok.vertex_count(), (d + 1) * (d + 1));
        EXPECT_TRUE(sinks(ok).empty());
        EXPECT_EQ(zielonka(ok).won_even, ok.vertices());

        auto bad = gen_safety_family(d, true);
        EXPECT_EQ(bad.vertex_count(), (d + 1) * (d + 1) + 1);
        EXPECT_EQ(zielonka(bad).winner(0), Player::Odd);
        // the error sink is d steps away from the root
        std::vector<std::size_t> dist(bad.id_bound(), SIZE_MAX);
        std::vector<VertexId> queue{0};
        dist[0] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (auto w : bad.successors(queue[i])) {
                if (dist[w] != SIZE_MAX) continue;
                dist[w] = dist[queue[i]] + 1;
                queue.push_back(w);
            }
        }
        EXPECT_EQ(dist[bad.id_bound() - 1], d);
    }
    EXPECT_THROW(gen_safety_family(0, true), Error);
}

TEST(SafetyFamily, ViolationDecidedBySinkAttractor)
{
    auto g = gen_safety_family(6, true);
    IncompleteGame complete(g);
    auto won = sattr(complete, Player::Odd, sinks_of(g, Player::Even)).set;
    EXPECT_TRUE(won.contains(0));
    EXPECT_EQ(won, g.vertices());
}
