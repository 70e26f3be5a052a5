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

#include <benchmark/benchmark.h>

#include "otfpg/exploration.hpp"
#include "otfpg/fixpoints.hpp"
#include "otfpg/solvers.hpp"
#include "otfpg/testkit.hpp"

using namespace otfpg;

static IncompleteGame
random_game(std::size_t n, double incomplete)
{
    GenSpec spec;
    spec.vertex_count = n;
    spec.max_out_degree = 4;
    spec.priority_range = 5;
    spec.sink_probability = 0.05;
    spec.incomplete_fraction = incomplete;
    spec.seed = n;
    return gen_random(spec);
}

static void
BM_Attractor(benchmark::State& state)
{
    auto g = random_game(state.range(0), 0.0);
    auto target = priority_equal(g.game, 0);
    for (auto _ : state) benchmark::DoNotOptimize(attr(g.game, Player::Even, target));
    state.SetItemsProcessed(state.iterations() * g.game.edge_count());
}
BENCHMARK(BM_Attractor)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

static void
BM_SafeSet(benchmark::State& state)
{
    auto g = random_game(state.range(0), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(safe_set(g, Player::Even));
}
BENCHMARK(BM_SafeSet)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

static void
BM_Zielonka(benchmark::State& state)
{
    auto g = random_game(state.range(0), 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(zielonka(g.game));
}
BENCHMARK(BM_Zielonka)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

static void
BM_PartialSolver(benchmark::State& state)
{
    const auto kind = kAllSolverKinds[state.range(0)];
    auto g = random_game(state.range(1), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_partial(g, kind));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_PartialSolver)->ArgsProduct({{1, 2, 3, 4, 5, 6, 7}, {1 << 10, 1 << 13}});

static void
BM_DriverSafetyFamily(benchmark::State& state)
{
    const auto kind = kAllSolverKinds[state.range(0)];
    auto universe = gen_safety_family(state.range(1), true);
    std::size_t explored = 0;
    for (auto _ : state) {
        GameExpander e(universe);
        DriverConfig cfg;
        cfg.solver = kind;
        cfg.designated = 0;
        explored = run_driver(e, 0, cfg).vertices_explored;
    }
    state.counters["explored"] = static_cast<double>(explored);
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_DriverSafetyFamily)->ArgsProduct({{0, 2, 4, 7}, {50, 200}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
