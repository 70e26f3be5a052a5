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

// Acceptance suite: one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "otfpg/exploration.hpp"
#include "otfpg/fixpoints.hpp"
#include "otfpg/io.hpp"
#include "otfpg/solvers.hpp"
#include "otfpg/testkit.hpp"

using namespace otfpg;
using namespace otfpg::test;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<Player, 2> kPlayers = {Player::Even, Player::Odd};

struct Outcome
{
    bool pass;
    std::string detail;
};

double
seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexSet
random_subset(std::mt19937_64& rng, const VertexSet& of, double p)
{
    VertexSet s(of.universe_size());
    std::bernoulli_distribution coin(p);
    for (auto v : of) {
        if (coin(rng)) s.insert(v);
    }
    return s;
}

Outcome
golden_first()
{
    auto g = example1();
    const auto start = Clock::now();
    auto s = zielonka(g);
    auto c = cpre(g, Player::Even, set_of(5, {2}));
    auto a = attr(g, Player::Even, set_of(5, {2}));
    const auto elapsed = seconds_since(start) * 1e3;
    bool ok = s.won_even == set_of(5, {0, 1, 2}) && s.won_odd == set_of(5, {3, 4}) && s.undecided.empty() &&
              c == set_of(5, {0}) && a.set == set_of(5, {0, 2});
    char buf[128];
    std::snprintf(buf, sizeof buf, "regions, cpre and attr exact, %.3f ms", elapsed);
    return {ok && elapsed < 1.0, buf};
}

Outcome
golden_second()
{
    auto g = example2_partial();
    auto safe_even = safe_set(g, Player::Even);
    auto safe_odd = safe_set(g, Player::Odd);
    auto won = zielonka(subgame(g.game, safe_even)).won_even;
    auto full = zielonka(example2_full().game);
    const auto four = set_of(6, {0, 1, 2, 3});
    bool ok = safe_even == four && safe_odd == set_of(6, {0, 1, 2, 4, 5}) && won == four &&
              solve_on_safe(g, Player::Even) == four && four.is_subset_of(full.won_even) &&
              check_extension(g, example2_full());
    return {ok, "safe sets exact, four vertices won by Even before and after completion"};
}

Outcome
safe_variants()
{
    const auto start = Clock::now();
    std::size_t mismatches = 0;
    std::size_t games = 0;
    std::size_t checks = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed + 100000);
        auto g = gen_random(random_spec(seed + 100000, 10 + rng() % 191, 0.3, 0.1));
        ++games;
        for (auto alpha : kPlayers) {
            ++checks;
            mismatches += forced_cycles(g, alpha, SafetyVariant::SafeSubgame) !=
                          forced_cycles(g, alpha, SafetyVariant::SafeOperators);
            auto safe = safe_set(g, alpha);
            auto arena = subgame(g.game, safe);
            auto x = random_subset(rng, safe, 0.2);
            ++checks;
            mismatches += attr(arena, alpha, x).set != sattr(g, alpha, x).set;
            for (Priority c = 0; c <= 5; ++c) {
                ++checks;
                mismatches += mattr(arena, alpha, x, c) != smattr(g, alpha, x, c);
            }
        }
        for (Priority c = 0; c <= 5; ++c) {
            ++checks;
            mismatches +=
                fatal_attractor(g, c, SafetyVariant::SafeSubgame) != fatal_attractor(g, c, SafetyVariant::SafeOperators);
        }
        auto a = fatal_attractors(g, SafetyVariant::SafeSubgame);
        auto b = fatal_attractors(g, SafetyVariant::SafeOperators);
        ++checks;
        mismatches += a.won_even != b.won_even || a.won_odd != b.won_odd;
    }
    const auto elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu games, %zu comparisons, %zu mismatches, %.2f s", games, checks, mismatches,
                  elapsed);
    return {mismatches == 0 && elapsed < 60.0, buf};
}

Outcome
oracle_agreement()
{
    const auto start = Clock::now();
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed + 200000);
        auto spec = random_spec(seed + 200000, 1 + rng() % 12, 0.0, 0.1);
        auto g = gen_random(spec).game;
        auto z = zielonka(g);
        auto o = brute_force_oracle(g);
        mismatches += z.won_even != o.won_even || z.won_odd != o.won_odd;
    }
    const auto elapsed = seconds_since(start);
    char buf[128];
    std::snprintf(buf, sizeof buf, "1000 games, %zu mismatches, %.2f s", mismatches, elapsed);
    return {mismatches == 0 && elapsed < 60.0, buf};
}

Outcome
stability()
{
    std::size_t violations = 0;
    std::size_t decided = 0;
    std::size_t unsafe_dominions = 0;
    std::size_t unflipped = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::mt19937_64 rng(seed + 300000);
        auto g = gen_random(random_spec(seed + 300000, 5 + rng() % 76, 0.3, 0.1));

        std::vector<Solution> completions;
        for (std::uint64_t k = 0; k < 3; ++k) {
            auto h = g;
            for (std::uint64_t step = 0; step < 3; ++step) h = gen_extension(h, rng());
            ExtensionSpec close;
            close.force_complete = true;
            h = gen_extension(h, rng(), close);
            if (!check_extension(g, h) || !h.incomplete.empty()) ++violations;
            completions.push_back(zielonka(h.game));
        }
        for (auto kind : kAllSolverKinds) {
            if (kind == SolverKind::Full) continue;
            auto s = solve(g, kind);
            for (auto p : kPlayers) {
                decided += s.won(p).count();
                for (const auto& full : completions) violations += (s.won(p) - full.won(p)).count();
            }
        }

        for (auto alpha : kPlayers) {
            auto dominion = zielonka(g.game).won(alpha);
            if (dominion.is_subset_of(safe_set(g, alpha))) continue;
            ++unsafe_dominions;
            auto flipped = zielonka(adversarial_extension(g, alpha)).won(opponent(alpha));
            if (!dominion.intersects(flipped)) ++unflipped;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "500 games, %zu decided vertices x 3 completions, %zu violations; %zu unsafe dominions, %zu not "
                  "flipped",
                  decided, violations, unsafe_dominions, unflipped);
    return {violations == 0 && unflipped == 0 && unsafe_dominions > 0, buf};
}

std::vector<VertexId>
reachable(const Game& g, VertexId root)
{
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<VertexId> order{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto w : g.successors(order[i])) {
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
        }
    }
    return order;
}

Outcome
driver_soundness()
{
    const auto start = Clock::now();
    const std::array<double, 3> ratios = {0.10, 0.5, 1.0};
    std::size_t runs = 0;
    std::size_t violations = 0;
    std::size_t early = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::mt19937_64 rng(seed + 400000);
        auto universe = gen_random(random_spec(seed + 400000, 2 + rng() % 199, 0.0, 0.05)).game;
        auto offline = zielonka(universe);
        auto candidates = reachable(universe, 0);
        const auto designated = candidates[rng() % candidates.size()];
        for (auto strategy : kAllStrategies) {
            for (auto kind : kAllSolverKinds) {
                GameExpander e(universe);
                DriverConfig cfg;
                cfg.solver = kind;
                cfg.strategy = strategy;
                cfg.designated = designated;
                cfg.batch_min = 1 + rng() % 16;
                cfg.solve_time_ratio = ratios[rng() % ratios.size()];
                cfg.seed = rng();
                cfg.logical_cost = true;
                auto r = run_driver(e, 0, cfg);
                ++runs;
                if (r.decided_winner != offline.winner(designated)) ++violations;
                if (!r.exhausted) ++early;
                for (VertexId v = 0; v < r.keys.size(); ++v) {
                    auto w = r.final_solution.winner(v);
                    if (w && w != offline.winner(static_cast<VertexId>(r.keys[v]))) ++violations;
                }
            }
        }
    }
    const auto elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu runs, %zu decided early, %zu violations, %.1f s", runs, early, violations,
                  elapsed);
    return {violations == 0 && elapsed < 300.0, buf};
}

DriverReport
drive(const Game& universe, SolverKind kind)
{
    GameExpander e(universe);
    DriverConfig cfg;
    cfg.solver = kind;
    cfg.designated = 0;
    cfg.logical_cost = true;
    return run_driver(e, 0, cfg);
}

Outcome
early_termination()
{
    auto violated = gen_safety_family(200, true);
    auto fast = drive(violated, SolverKind::SolitaireSafe);
    auto full = drive(violated, SolverKind::Full);
    const double share = static_cast<double>(fast.vertices_explored) / static_cast<double>(full.vertices_explored);

    auto safe = gen_safety_family(200, false);
    auto fast_ok = drive(safe, SolverKind::SolitaireSafe);
    auto full_ok = drive(safe, SolverKind::Full);
    const double overhead = static_cast<double>(fast_ok.total_cost()) / static_cast<double>(full_ok.total_cost());

    bool ok = fast.decided_winner == Player::Odd && full.decided_winner == Player::Odd &&
              fast_ok.decided_winner == Player::Even && full_ok.decided_winner == Player::Even && share <= 0.05 &&
              overhead <= 1.5;
    char buf[200];
    std::snprintf(buf, sizeof buf, "violation: %zu of %zu vertices (%.2f%%); no violation: cost ratio %.3f", 
                  fast.vertices_explored, full.vertices_explored, share * 100, overhead);
    return {ok, buf};
}

Outcome
round_trip()
{
    std::size_t diffs = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed + 500000);
        auto g = gen_random(random_spec(seed + 500000, 1 + rng() % 150, 0.3, 0.15));
        auto text = serialize_game(g);
        auto back = parse_game(text);
        diffs += !(back == g) || serialize_game(back) != text;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "1000 games, %zu diffs", diffs);
    return {diffs == 0, buf};
}

} // namespace

int
main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 golden example 1", golden_first},
        {"AC2 golden example 2", golden_second},
        {"AC3 safe-operator equivalences", safe_variants},
        {"AC4 zielonka vs oracle", oracle_agreement},
        {"AC5 stability under extensions", stability},
        {"AC6 driver soundness", driver_soundness},
        {"AC7 early termination", early_termination},
        {"AC8 format round-trip", round_trip},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o{false, {}};
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
