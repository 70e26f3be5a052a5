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

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "otfpg/exploration.hpp"
#include "otfpg/io.hpp"
#include "otfpg/solvers.hpp"
#include "otfpg/testkit.hpp"

using namespace otfpg;

namespace {

constexpr int kUsage = 2;

std::vector<std::string>
solver_names()
{
    std::vector<std::string> names;
    for (auto k : kAllSolverKinds) names.emplace_back(to_string(k));
    return names;
}

std::vector<std::string>
strategy_names()
{
    std::vector<std::string> names;
    for (auto s : kAllStrategies) names.emplace_back(to_string(s));
    return names;
}

double
millis(std::chrono::nanoseconds d)
{
    return std::chrono::duration<double, std::milli>(d).count();
}

/// Runs body with stdout or the file named by path as output.
template <typename F>
void
with_output(const std::string& path, F&& body)
{
    if (path.empty() || path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    body(out);
}

struct SolveArgs
{
    std::string file;
    std::string solver = "full";
    std::string player;
    std::string output;
};

int
run_solve(const SolveArgs& a)
{
    auto g = load_game(a.file);
    std::optional<Player> only;
    if (a.player == "even") only = Player::Even;
    if (a.player == "odd") only = Player::Odd;

    auto started = std::chrono::steady_clock::now();
    auto s = solve(g, *parse_solver_kind(a.solver), only);
    auto elapsed = std::chrono::steady_clock::now() - started;

    ResultSummary summary;
    summary.explored = g.game.vertex_count();
    summary.solver_calls = 1;
    summary.solve_ms = millis(elapsed);
    with_output(a.output, [&](std::ostream& out) { write_result(out, g.game, s, summary); });
    return 0;
}

struct ExploreArgs
{
    std::string file;
    std::uint64_t root = 0;
    std::uint64_t designated = 0;
    std::string solver = "partial";
    std::string strategy = "bfs";
    double ratio = 0.10;
    std::size_t batch = 64;
    std::uint64_t seed = 0;
    bool logical = false;
    bool check = false;
    std::string output;
};

int
run_explore(const ExploreArgs& a)
{
    GameExpander universe(load_game(a.file).game);
    DriverConfig cfg;
    cfg.solver = *parse_solver_kind(a.solver);
    cfg.strategy = *parse_exploration_strategy(a.strategy);
    cfg.solve_time_ratio = a.ratio;
    cfg.designated = a.designated;
    cfg.batch_min = a.batch;
    cfg.seed = a.seed;
    cfg.logical_cost = a.logical;
    cfg.check_extensions = a.check;
    auto report = run_driver(universe, a.root, cfg);

    ResultSummary summary;
    summary.explored = report.vertices_explored;
    summary.solver_calls = report.solver_calls;
    summary.explore_ms = millis(report.explore_time);
    summary.solve_ms = millis(report.solve_time);
    summary.decided = report.decided_winner;
    with_output(a.output, [&](std::ostream& out) {
        write_result(out, report.final_game.game, report.final_solution, summary, report.keys);
    });
    return 0;
}

struct GenArgs
{
    GenSpec random;
    std::size_t depth = 10;
    bool violation = false;
    std::string base;
    std::size_t steps = 3;
    std::string output;
};

int
run_gen_chain(const GenArgs& a)
{
    if (a.output.empty()) throw Error("extension-chain needs an output prefix (-o)");
    auto g = load_game(a.base);
    for (std::size_t i = 1; i <= a.steps; ++i) {
        ExtensionSpec spec;
        spec.force_complete = i == a.steps;
        g = gen_extension(g, a.random.seed + i, spec);
        save_game(a.output + "-" + std::to_string(i) + ".pg", g);
    }
    return 0;
}

int
run_oracle(const std::string& file, const std::string& output)
{
    auto g = load_game(file);
    auto started = std::chrono::steady_clock::now();
    auto s = brute_force_oracle(g.game);
    ResultSummary summary;
    summary.explored = g.game.vertex_count();
    summary.solver_calls = 1;
    summary.solve_ms = millis(std::chrono::steady_clock::now() - started);
    with_output(output, [&](std::ostream& out) { write_result(out, g.game, s, summary); });
    return 0;
}

int
run_check(const std::string& first, const std::string& second)
{
    bool ok = check_extension(load_game(first), load_game(second));
    std::cout << (ok ? "true" : "false") << '\n';
    return ok ? 0 : 1;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"On-the-fly parity game solving"};
    app.require_subcommand(1);
    std::function<int()> action;

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a (possibly incomplete) game file");
    solve_cmd->add_option("file", solve_args.file, "Game file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--solver", solve_args.solver, "Solver kind")->check(CLI::IsMember(solver_names()));
    solve_cmd->add_option("--player", solve_args.player, "Only search regions of this player")
        ->check(CLI::IsMember({"even", "odd"}));
    solve_cmd->add_option("-o,--output", solve_args.output, "Result file (default stdout)");
    solve_cmd->callback([&] { action = [&] { return run_solve(solve_args); }; });

    ExploreArgs explore_args;
    auto* explore_cmd = app.add_subcommand("explore", "Explore a stored universe on-the-fly");
    explore_cmd->add_option("file", explore_args.file, "Universe game file")->required()->check(CLI::ExistingFile);
    explore_cmd->add_option("--root", explore_args.root, "Initial vertex")->required();
    explore_cmd->add_option("--designated", explore_args.designated, "Vertex whose winner is asked for")->required();
    explore_cmd->add_option("--solver", explore_args.solver, "Solver kind")->check(CLI::IsMember(solver_names()));
    explore_cmd->add_option("--strategy", explore_args.strategy, "Exploration order")
        ->check(CLI::IsMember(strategy_names()));
    explore_cmd->add_option("--ratio", explore_args.ratio, "Share of time for solving")
        ->check(CLI::Range(0.0, 1.0));
    explore_cmd->add_option("--batch", explore_args.batch, "Expansions between solver checks")
        ->check(CLI::PositiveNumber);
    explore_cmd->add_option("--seed", explore_args.seed, "Seed of the random strategy");
    explore_cmd->add_flag("--logical-cost", explore_args.logical, "Budget by work units instead of wall time");
    explore_cmd->add_flag("--check", explore_args.check, "Verify each snapshot extends the previous one");
    explore_cmd->add_option("-o,--output", explore_args.output, "Result file (default stdout)");
    explore_cmd->callback([&] { action = [&] { return run_explore(explore_args); }; });

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate games");
    gen_cmd->require_subcommand(1);
    auto* gen_random_cmd = gen_cmd->add_subcommand("random", "Random incomplete game");
    gen_random_cmd->add_option("-n,--vertices", gen_args.random.vertex_count, "Number of vertices")
        ->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("-d,--degree", gen_args.random.max_out_degree, "Maximal out-degree");
    gen_random_cmd->add_option("-p,--priorities", gen_args.random.priority_range, "Largest priority");
    gen_random_cmd->add_option("--sinks", gen_args.random.sink_probability, "Sink probability")
        ->check(CLI::Range(0.0, 1.0));
    gen_random_cmd->add_option("--incomplete", gen_args.random.incomplete_fraction, "Fraction of incomplete vertices")
        ->check(CLI::Range(0.0, 1.0));
    gen_random_cmd->add_option("--seed", gen_args.random.seed, "Random seed");
    gen_random_cmd->add_option("-o,--output", gen_args.output, "Game file (default stdout)");
    gen_random_cmd->callback([&] {
        action = [&] {
            auto g = gen_random(gen_args.random);
            with_output(gen_args.output, [&](std::ostream& out) { write_game(out, g); });
            return 0;
        };
    });
    auto* gen_safety_cmd = gen_cmd->add_subcommand("safety", "Counter lattice safety game");
    gen_safety_cmd->add_option("--depth", gen_args.depth, "Counter bound")->check(CLI::PositiveNumber);
    gen_safety_cmd->add_flag("--violation", gen_args.violation, "Add the reachable error sink");
    gen_safety_cmd->add_option("-o,--output", gen_args.output, "Game file (default stdout)");
    gen_safety_cmd->callback([&] {
        action = [&] {
            IncompleteGame g(gen_safety_family(gen_args.depth, gen_args.violation));
            with_output(gen_args.output, [&](std::ostream& out) { write_game(out, g); });
            return 0;
        };
    });
    auto* gen_chain_cmd = gen_cmd->add_subcommand("extension-chain", "Random extensions of a game, the last one complete");
    gen_chain_cmd->add_option("file", gen_args.base, "Incomplete start game")->required()->check(CLI::ExistingFile);
    gen_chain_cmd->add_option("--steps", gen_args.steps, "Number of extensions")->check(CLI::PositiveNumber);
    gen_chain_cmd->add_option("--seed", gen_args.random.seed, "Random seed");
    gen_chain_cmd->add_option("-o,--output", gen_args.output, "Prefix; writes <prefix>-<i>.pg")->required();
    gen_chain_cmd->callback([&] { action = [&] { return run_gen_chain(gen_args); }; });

    std::string oracle_file;
    std::string oracle_output;
    auto* oracle_cmd = app.add_subcommand("oracle", "Solve a small game by strategy enumeration");
    oracle_cmd->add_option("file", oracle_file, "Game file")->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("-o,--output", oracle_output, "Result file (default stdout)");
    oracle_cmd->callback([&] { action = [&] { return run_oracle(oracle_file, oracle_output); }; });

    std::string first;
    std::string second;
    auto* check_cmd = app.add_subcommand("check-extension", "Exit 0 iff the second game extends the first");
    check_cmd->add_option("first", first, "Smaller game")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("second", second, "Larger game")->required()->check(CLI::ExistingFile);
    check_cmd->callback([&] { action = [&] { return run_check(first, second); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "otfpg: " << e.what() << '\n';
        return 1;
    }
}
