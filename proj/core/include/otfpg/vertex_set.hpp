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

#ifndef OTFPG_VERTEX_SET_HPP
#define OTFPG_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <vector>

namespace otfpg {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/**
 * Dense bitset over vertex ids [0, universe_size).
 *
 * Binary operations accept operands of different universe sizes; missing
 * bits count as absent and the result takes the larger size. Equality is
 * element-wise, so {1,2} over 8 ids equals {1,2} over 64 ids.
 */
class VertexSet
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
        iterator(const std::uint64_t* words, std::size_t nwords, std::size_t word)
            : words_(words), nwords_(nwords), word_(word)
        {
            if (word_ < nwords_) current_ = words_[word_];
            advance();
        }

        VertexId operator*() const { return static_cast<VertexId>(word_ * 64 + std::countr_zero(current_)); }

        iterator& operator++()
        {
            current_ &= current_ - 1;
            advance();
            return *this;
        }

        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }

        bool operator==(const iterator& other) const { return word_ == other.word_ && current_ == other.current_; }

    private:
        void advance()
        {
            while (current_ == 0 && word_ < nwords_) {
                if (++word_ < nwords_) current_ = words_[word_];
            }
        }

        const std::uint64_t* words_ = nullptr;
        std::size_t nwords_ = 0;
        std::size_t word_ = 0;
        std::uint64_t current_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> ids) : VertexSet(universe)
    {
        for (auto v : ids) insert(v);
    }

    static VertexSet full(std::size_t universe);

    std::size_t universe_size() const { return size_; }
    void resize(std::size_t universe);

    bool contains(VertexId v) const
    {
        return v < size_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(VertexId v);
    void erase(VertexId v)
    {
        if (v < size_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void clear();

    std::size_t count() const;
    bool empty() const;
    /// Smallest member, or kNoVertex.
    VertexId first() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement relative to [0, universe_size).
    VertexSet complement() const;

    bool operator==(const VertexSet& other) const;

    iterator begin() const { return iterator(words_.data(), words_.size(), 0); }
    iterator end() const { return iterator(words_.data(), words_.size(), words_.size()); }

    std::vector<VertexId> to_vector() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace otfpg

#endif
