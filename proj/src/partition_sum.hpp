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

#ifndef BELLC_SRC_PARTITION_SUM_HPP
#define BELLC_SRC_PARTITION_SUM_HPP

#include <functional>
#include <vector>

#include "bellc/partitions.hpp"
#include "bellc/polynomial.hpp"

namespace bellc::detail {

// sum over mu of n! / prod(i_m!) * prod (scale(m) * x_m)^{i_m}
inline Polynomial partition_sum(unsigned n, const std::vector<MultiIndex>& indices,
                                const std::function<BigRational(unsigned)>& scale)
{
    const BigRational n_fact = factorial(n);
    Polynomial total;
    for (const auto& mu : indices) {
        BigRational coeff = n_fact;
        std::vector<ExponentVector::Factor> factors;
        for (const auto& [m, i] : mu.entries()) {
            coeff *= scale(m).pow(i) / factorial(i);
            factors.emplace_back(m, i);
        }
        total += Polynomial::term(ExponentVector::from_factors(std::move(factors)), coeff);
    }
    return total;
}

} // namespace bellc::detail

#endif // BELLC_SRC_PARTITION_SUM_HPP
