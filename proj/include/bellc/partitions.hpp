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

#ifndef BELLC_PARTITIONS_HPP
#define BELLC_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bellc {

enum class PartsMode {
    all,
    odd_only,
};

/// Multiplicities (part m -> i_m >= 1), stored sorted by part. Encodes the
/// exponent tuples (i_1, i_2, ...) that index explicit Bell-polynomial sums.
class MultiIndex {
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;

    MultiIndex() = default;
    /// Throws DomainError on a zero part, a zero multiplicity or a repeated
    /// part.
    explicit MultiIndex(std::vector<Entry> entries);

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    /// Multiplicity of part m (0 when absent).
    [[nodiscard]] std::uint32_t multiplicity(std::uint32_t part) const;
    /// sum m * i_m
    [[nodiscard]] std::uint64_t weight() const;
    /// sum i_m
    [[nodiscard]] std::uint64_t size() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    /// Lexicographic on the dense tuple (i_1, i_2, ...).
    friend bool operator<(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<Entry> entries_;
};

/// All multi-indices with weight n, parts in the allowed set and <= max_part,
/// and size k (any size when k is nullopt). Sorted ascending; no
/// duplicates. Throws DomainError when max_part < 1.
std::vector<MultiIndex> enumerate_multi_indices(std::uint32_t n, std::optional<std::uint32_t> k, PartsMode parts,
                                                std::uint32_t max_part);

/// Cardinality of the set above by dynamic programming over parts.
std::uint64_t count_multi_indices(std::uint32_t n, std::optional<std::uint32_t> k, PartsMode parts,
                                  std::uint32_t max_part);

} // namespace bellc

#endif // BELLC_PARTITIONS_HPP
