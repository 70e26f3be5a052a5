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

#include "otfpg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace otfpg {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

/// Tokenizer over one line.
class Cursor
{
public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view word()
    {
        skip_space();
        auto start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::uint64_t number()
    {
        skip_space();
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc()) fail("expected a number");
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    std::vector<std::uint64_t> number_list()
    {
        std::vector<std::uint64_t> result{number()};
        while (peek(',')) {
            ++pos_;
            result.push_back(number());
        }
        return result;
    }

    std::string quoted()
    {
        expect('"');
        std::string result;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
            result.push_back(text_[pos_++]);
        }
        if (pos_ == text_.size()) fail("unterminated label");
        ++pos_;
        return result;
    }

    void finish()
    {
        expect(';');
        if (!at_end()) fail("trailing characters after ';'");
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Record
{
    std::uint64_t id;
    Priority priority;
    Player owner;
    std::vector<std::uint64_t> successors;
    std::string label;
    std::size_t line;
};

std::string
escape(std::string_view label)
{
    std::string result;
    for (char c : label) {
        if (c == '"' || c == '\\') result.push_back('\\');
        result.push_back(c);
    }
    return result;
}

} // namespace

IncompleteGame
parse_game(std::istream& in)
{
    std::optional<std::uint64_t> max_id;
    bool max_semantics = false;
    std::vector<std::pair<std::uint64_t, std::size_t>> incomplete;
    std::vector<Record> records;
    std::unordered_map<std::uint64_t, std::size_t> line_of;

    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        Cursor cur(text, line);
        if (cur.at_end()) continue;
        if (!max_id) {
            if (cur.word() != "parity") cur.fail("expected 'parity <max-id>;' header");
            max_id = cur.number();
            cur.finish();
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(text[text.find_first_not_of(" \t\r")]))) {
            auto keyword = cur.word();
            if (keyword == "semantics") {
                auto mode = cur.word();
                if (mode == "max") {
                    max_semantics = true;
                } else if (mode != "min") {
                    cur.fail("semantics must be 'min' or 'max'");
                }
            } else if (keyword == "incomplete") {
                if (!cur.peek(';')) {
                    for (auto id : cur.number_list()) incomplete.emplace_back(id, line);
                }
            } else {
                cur.fail("unknown directive '" + std::string(keyword) + "'");
            }
            cur.finish();
            continue;
        }

        Record r;
        r.line = line;
        r.id = cur.number();
        const auto priority = cur.number();
        if (priority > std::numeric_limits<Priority>::max()) cur.fail("priority too large");
        r.priority = static_cast<Priority>(priority);
        const auto owner = cur.number();
        if (owner > 1) cur.fail("owner must be 0 or 1");
        r.owner = owner == 0 ? Player::Even : Player::Odd;
        if (cur.peek('-')) {
            cur.expect('-');
        } else {
            r.successors = cur.number_list();
        }
        if (cur.peek('"')) r.label = cur.quoted();
        cur.finish();

        if (r.id > *max_id) cur.fail("vertex " + std::to_string(r.id) + " exceeds the declared maximum id");
        if (auto it = line_of.find(r.id); it != line_of.end()) {
            cur.fail("duplicate record for vertex " + std::to_string(r.id) + " (first on line " +
                     std::to_string(it->second) + ")");
        }
        line_of.emplace(r.id, line);
        records.push_back(std::move(r));
    }
    if (!max_id) throw ParseError(line + 1, "missing 'parity <max-id>;' header");

    std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) { return a.id < b.id; });
    std::unordered_map<std::uint64_t, VertexId> dense;
    for (std::size_t i = 0; i < records.size(); ++i) dense.emplace(records[i].id, static_cast<VertexId>(i));

    Priority top = 0;
    for (const auto& r : records) top = std::max(top, r.priority);
    const Priority mirror = top % 2 == 0 ? top : top + 1;

    GameBuilder b;
    for (const auto& r : records) b.add_vertex(r.owner, max_semantics ? mirror - r.priority : r.priority, r.label);
    for (const auto& r : records) {
        for (auto s : r.successors) {
            auto it = dense.find(s);
            if (it == dense.end()) throw ParseError(r.line, "successor " + std::to_string(s) + " is not a vertex");
            b.add_edge(dense.at(r.id), it->second);
        }
    }
    auto game = b.build();
    VertexSet inc(game.id_bound());
    for (auto [id, at] : incomplete) {
        auto it = dense.find(id);
        if (it == dense.end()) throw ParseError(at, "incomplete vertex " + std::to_string(id) + " is not a vertex");
        inc.insert(it->second);
    }
    return IncompleteGame(std::move(game), std::move(inc));
}

IncompleteGame
parse_game(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_game(in);
}

IncompleteGame
load_game(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return parse_game(in);
}

void
write_game(std::ostream& out, const IncompleteGame& g)
{
    const auto& game = g.game;
    VertexId last = 0;
    for (auto v : game.vertices()) last = v;
    out << "parity " << last << ";\n";
    out << "semantics min;\n";
    if (!g.incomplete.empty()) {
        out << "incomplete ";
        bool first = true;
        for (auto v : g.incomplete) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << ";\n";
    }
    for (auto v : game.vertices()) {
        out << v << ' ' << game.priority(v) << ' ' << index_of(game.owner(v)) << ' ';
        if (game.is_sink(v)) {
            out << '-';
        } else {
            bool first = true;
            for (auto w : game.successors(v)) {
                out << (first ? "" : ",") << w;
                first = false;
            }
        }
        if (!game.label(v).empty()) out << " \"" << escape(game.label(v)) << '"';
        out << ";\n";
    }
}

std::string
serialize_game(const IncompleteGame& g)
{
    std::ostringstream out;
    write_game(out, g);
    return out.str();
}

void
save_game(const std::filesystem::path& path, const IncompleteGame& g)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_game(out, g);
}

void
write_result(std::ostream& out, const Game& g, const Solution& s, const ResultSummary& summary,
             std::span<const std::uint64_t> keys)
{
    auto name = [&](VertexId v) -> std::uint64_t { return keys.empty() ? v : keys[v]; };
    auto vertices = g.vertices().to_vector();
    if (!keys.empty()) {
        std::sort(vertices.begin(), vertices.end(), [&](VertexId a, VertexId b) { return keys[a] < keys[b]; });
    }
    for (auto v : vertices) {
        out << name(v) << ' ';
        if (auto w = s.winner(v)) {
            out << index_of(*w);
        } else {
            out << '?';
        }
        if (v < s.strategy.size() && s.strategy[v] != kNoVertex) out << ' ' << name(s.strategy[v]);
        out << '\n';
    }
    out << "explored=" << summary.explored << " solver_calls=" << summary.solver_calls
        << " explore_ms=" << std::llround(summary.explore_ms) << " solve_ms=" << std::llround(summary.solve_ms);
    if (summary.decided) {
        out << " decided=";
        if (*summary.decided) {
            out << index_of(**summary.decided);
        } else {
            out << '?';
        }
    }
    out << '\n';
}

ResultFile
parse_result(std::string_view text)
{
    ResultFile result;
    std::istringstream in{std::string(text)};
    std::string row;
    std::size_t line = 0;
    while (std::getline(in, row)) {
        ++line;
        if (row.find('=') != std::string::npos) {
            std::istringstream fields(row);
            std::string field;
            while (fields >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) throw ParseError(line, "malformed summary field '" + field + "'");
                result.summary[field.substr(0, eq)] = field.substr(eq + 1);
            }
            continue;
        }
        Cursor cur(row, line);
        if (cur.at_end()) continue;
        ResultLine r;
        r.id = cur.number();
        if (cur.peek('?')) {
            cur.expect('?');
        } else {
            auto w = cur.number();
            if (w > 1) cur.fail("winner must be 0, 1 or ?");
            r.winner = w == 0 ? Player::Even : Player::Odd;
        }
        if (!cur.at_end()) r.move = cur.number();
        if (!cur.at_end()) cur.fail("trailing characters");
        result.lines.push_back(r);
    }
    return result;
}

} // namespace otfpg
