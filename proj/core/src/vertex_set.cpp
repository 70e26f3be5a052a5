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

#include "otfpg/vertex_set.hpp"

#include <algorithm>

namespace otfpg {

VertexSet
VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

void
VertexSet::resize(std::size_t universe)
{
    if (universe < size_) {
        // drop members beyond the new bound
        words_.resize((universe + 63) / 64);
        if (universe % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
        }
    } else {
        words_.resize((universe + 63) / 64, 0);
    }
    size_ = universe;
}

void
VertexSet::insert(VertexId v)
{
    if (v >= size_) resize(std::size_t{v} + 1);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void
VertexSet::clear()
{
    std::fill(words_.begin(), words_.end(), 0);
}

std::size_t
VertexSet::count() const
{
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool
VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexId
VertexSet::first() const
{
    auto it = begin();
    return it == end() ? kNoVertex : *it;
}

bool
VertexSet::is_subset_of(const VertexSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~theirs) return false;
    }
    return true;
}

bool
VertexSet::intersects(const VertexSet& other) const
{
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

VertexSet&
VertexSet::operator|=(const VertexSet& other)
{
    if (other.size_ > size_) resize(other.size_);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet&
VertexSet::operator&=(const VertexSet& other)
{
    if (other.size_ > size_) resize(other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    }
    return *this;
}

VertexSet&
VertexSet::operator-=(const VertexSet& other)
{
    if (other.size_ > size_) resize(other.size_);
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet
VertexSet::complement() const
{
    return full(size_) - *this;
}

bool
VertexSet::operator==(const VertexSet& other) const
{
    const auto n = std::max(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < words_.size() ? words_[i] : 0;
        const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
        if (a != b) return false;
    }
    return true;
}

std::vector<VertexId>
VertexSet::to_vector() const
{
    return std::vector<VertexId>(begin(), end());
}

} // namespace otfpg
