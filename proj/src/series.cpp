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

#include "bellc/series.hpp"

namespace bellc {

namespace {

std::vector<Polynomial> symbolic_args(std::size_t count)
{
    std::vector<Polynomial> args;
    args.reserve(count);
    for (std::size_t m = 1; m <= count; ++m) {
        args.push_back(Polynomial::variable(static_cast<Indeterminate>(m)));
    }
    return args;
}

} // namespace

PolynomialSeries symbolic_central_kernel(std::size_t precision)
{
    const auto args = symbolic_args(precision);
    return central_kernel<Polynomial>(args, precision);
}

PolynomialSeries symbolic_exponential_kernel(std::size_t precision)
{
    std::vector<Polynomial> coeffs(precision + 1);
    for (std::size_t m = 1; m <= precision; ++m) {
        coeffs[m] =
            Polynomial::variable(static_cast<Indeterminate>(m)) * factorial(static_cast<long long>(m)).inverse();
    }
    return PolynomialSeries::from_coefficients(std::move(coeffs));
}

} // namespace bellc
