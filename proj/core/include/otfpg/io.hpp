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

#ifndef OTFPG_IO_HPP
#define OTFPG_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otfpg/game.hpp"

namespace otfpg {

/// Malformed game or result text; line() is 1-based.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Game file grammar:
 *
 *   parity <max-id>;
 *   semantics min|max;                  (optional, default min)
 *   incomplete <id>[,<id>]*;            (optional)
 *   <id> <priority> <0|1> <succ>[,<succ>]*|- ["label"];
 *
 * Sparse ids are compacted in increasing order. Max-semantics priorities
 * are mirrored into min-semantics keeping their parity.
 */
IncompleteGame parse_game(std::istream& in);
IncompleteGame parse_game(std::string_view text);
IncompleteGame load_game(const std::filesystem::path& path);

/// Writes g in min semantics, one record per vertex in id order.
void write_game(std::ostream& out, const IncompleteGame& g);
std::string serialize_game(const IncompleteGame& g);
void save_game(const std::filesystem::path& path, const IncompleteGame& g);

struct ResultSummary
{
    std::size_t explored = 0;
    std::size_t solver_calls = 0;
    double explore_ms = 0;
    double solve_ms = 0;
    /// Written as decided=<0|1|?> when present.
    std::optional<std::optional<Player>> decided;
};

/**
 * Result file: one line `<id> <0|1|?> [<move>]` per vertex of g, then the
 * summary line. With keys, vertex v is printed as keys[v] and lines are
 * sorted by that id.
 */
void write_result(std::ostream& out, const Game& g, const Solution& s, const ResultSummary& summary,
                  std::span<const std::uint64_t> keys = {});

struct ResultLine
{
    std::uint64_t id = 0;
    std::optional<Player> winner;
    std::optional<std::uint64_t> move;
};

struct ResultFile
{
    std::vector<ResultLine> lines;
    std::map<std::string, std::string> summary;
};

ResultFile parse_result(std::string_view text);

} // namespace otfpg

#endif
