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

#include "bellc/triangle.hpp"

#include <string>

#include "bellc/errors.hpp"

namespace bellc {

TriangleTable::TriangleTable(std::size_t n_max)
{
    rows_.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows_.emplace_back(n + 1);
    }
}

const BigRational& TriangleTable::at(std::size_t n, std::size_t k) const
{
    if (n >= rows_.size() || k > n) {
        throw DomainError("triangle index (" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
    }
    return rows_[n][k];
}

BigRational& TriangleTable::at(std::size_t n, std::size_t k)
{
    return const_cast<BigRational&>(static_cast<const TriangleTable&>(*this).at(n, k));
}

std::vector<BigRational> TriangleTable::flatten() const
{
    std::vector<BigRational> out;
    for (const auto& r : rows_) {
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

} // namespace bellc
