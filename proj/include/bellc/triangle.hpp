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

#ifndef BELLC_TRIANGLE_HPP
#define BELLC_TRIANGLE_HPP

#include <cstddef>
#include <vector>

#include "bellc/rational.hpp"

namespace bellc {

/// Entries (n, k) for 0 <= k <= n <= n_max, stored row-major with k
/// ascending.
class TriangleTable {
public:
    explicit TriangleTable(std::size_t n_max);

    [[nodiscard]] std::size_t n_max() const { return rows_.size() - 1; }
    /// Throws DomainError outside 0 <= k <= n <= n_max.
    [[nodiscard]] const BigRational& at(std::size_t n, std::size_t k) const;
    BigRational& at(std::size_t n, std::size_t k);
    [[nodiscard]] const std::vector<BigRational>& row(std::size_t n) const { return rows_.at(n); }
    [[nodiscard]] const std::vector<std::vector<BigRational>>& rows() const { return rows_; }

    /// Row-major flattening.
    [[nodiscard]] std::vector<BigRational> flatten() const;

    friend bool operator==(const TriangleTable&, const TriangleTable&) = default;

private:
    std::vector<std::vector<BigRational>> rows_;
};

} // namespace bellc

#endif // BELLC_TRIANGLE_HPP
