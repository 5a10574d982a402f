/*
   Copyright 2026 The bellc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bellc/partitions.hpp"

#include <algorithm>

#include "bellc/errors.hpp"

namespace bellc {

MultiIndex::MultiIndex(std::vector<Entry> entries)
    : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].first == 0 || entries_[i].second == 0) {
            throw DomainError("multi-index parts and multiplicities must be positive");
        }
        if (i > 0 && entries_[i].first == entries_[i - 1].first) {
            throw DomainError("repeated part in multi-index");
        }
    }
}

std::uint32_t MultiIndex::multiplicity(std::uint32_t part) const
{
    for (const auto& [m, i] : entries_) {
        if (m == part) {
            return i;
        }
    }
    return 0;
}

std::uint64_t MultiIndex::weight() const
{
    std::uint64_t w = 0;
    for (const auto& [m, i] : entries_) {
        w += static_cast<std::uint64_t>(m) * i;
    }
    return w;
}

std::uint64_t MultiIndex::size() const
{
    std::uint64_t s = 0;
    for (const auto& e : entries_) {
        s += e.second;
    }
    return s;
}

std::string MultiIndex::to_string() const
{
    std::string out = "(";
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j > 0) {
            out += ", ";
        }
        out += "i" + std::to_string(entries_[j].first) + "=" + std::to_string(entries_[j].second);
    }
    return out + ")";
}

bool operator<(const MultiIndex& a, const MultiIndex& b)
{
    // Compare dense tuples (i_1, i_2, ...) without materializing them.
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first != ib->first) {
            // The side with the smaller part has a positive entry where the
            // other has zero.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) {
            return ia->second < ib->second;
        }
        ++ia;
        ++ib;
    }
    return ia == a.entries_.end() && ib != b.entries_.end();
}

namespace {

bool allowed(std::uint32_t part, PartsMode parts)
{
    return parts == PartsMode::all || part % 2 == 1;
}

struct Enumerator {
    std::optional<std::uint32_t> size;
    PartsMode parts;
    std::vector<MultiIndex::Entry> current;
    std::vector<MultiIndex> out;

    // Distribute remaining weight over parts <= part, largest part first.
    void descend(std::uint32_t part, std::uint64_t weight_left, std::uint64_t size_left)
    {
        if (weight_left == 0) {
            if (!size || size_left == 0) {
                out.emplace_back(current);
            }
            return;
        }
        if (part == 0) {
            return;
        }
        if (size) {
            // Each remaining factor contributes at least 1 and at most `part`
            // to the weight.
            if (size_left == 0 || size_left > weight_left || size_left * part < weight_left) {
                return;
            }
        }
        if (allowed(part, parts)) {
            std::uint64_t max_mult = weight_left / part;
            if (size) {
                max_mult = std::min(max_mult, size_left);
            }
            for (std::uint64_t i = max_mult; i >= 1; --i) {
                current.emplace_back(part, static_cast<std::uint32_t>(i));
                descend(part - 1, weight_left - i * part, size ? size_left - i : 0);
                current.pop_back();
            }
        }
        descend(part - 1, weight_left, size_left);
    }
};

} // namespace

std::vector<MultiIndex> enumerate_multi_indices(std::uint32_t n, std::optional<std::uint32_t> k, PartsMode parts,
                                                std::uint32_t max_part)
{
    if (max_part < 1) {
        throw DomainError("max_part must be at least 1");
    }
    Enumerator e{k, parts, {}, {}};
    e.descend(std::min(max_part, std::max<std::uint32_t>(n, 1)), n, k.value_or(0));
    std::sort(e.out.begin(), e.out.end());
    return e.out;
}

std::uint64_t count_multi_indices(std::uint32_t n, std::optional<std::uint32_t> k, PartsMode parts,
                                  std::uint32_t max_part)
{
    if (max_part < 1) {
        throw DomainError("max_part must be at least 1");
    }
    // ways[w][s]: multi-indices over the parts processed so far with weight w
    // and size s. Size is capped at n (a part contributes at least 1).
    const std::size_t size_cap = n;
    std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(size_cap + 1, 0));
    ways[0][0] = 1;
    for (std::uint32_t m = 1; m <= std::min(max_part, n); ++m) {
        if (!allowed(m, parts)) {
            continue;
        }
        // Unbounded multiplicity: ascending sweep reuses part m.
        for (std::uint32_t w = m; w <= n; ++w) {
            for (std::size_t s = 1; s <= size_cap; ++s) {
                ways[w][s] += ways[w - m][s - 1];
            }
        }
    }
    if (k) {
        return *k <= size_cap ? ways[n][*k] : 0;
    }
    std::uint64_t total = 0;
    for (std::size_t s = 0; s <= size_cap; ++s) {
        total += ways[n][s];
    }
    return total;
}

} // namespace bellc
