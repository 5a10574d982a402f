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

#include "bellc/central.hpp"

#include <string>

#include "bellc/errors.hpp"
#include "bellc/partitions.hpp"
#include "bellc/series.hpp"
#include "partition_sum.hpp"

namespace bellc {

namespace {

const BigRational kHalf = BigRational::make(1, 2);

// Weight of x_m in the odd-part sums: 1 / (2^{m-1} m!).
BigRational odd_part_scale(unsigned m)
{
    return (BigRational(2).pow(m - 1) * factorial(m)).inverse();
}

// e^{t/2} - e^{-t/2}, computed from two exponentials.
RationalSeries half_sinh_kernel(std::size_t precision)
{
    const auto half_t = RationalSeries::monomial(kHalf, 1, precision);
    return half_t.exp() - (-half_t).exp();
}

PolynomialSeries lift(const RationalSeries& s)
{
    std::vector<Polynomial> coeffs;
    coeffs.reserve(s.precision() + 1);
    for (const auto& c : s.coefficients()) {
        coeffs.emplace_back(c);
    }
    return PolynomialSeries::from_coefficients(std::move(coeffs));
}

PolynomialSeries times_weight(const PolynomialSeries& s)
{
    return s * PolynomialSeries::constant(Polynomial::variable(kWeightIndeterminate), s.precision());
}

IdentityCheck make_check(std::string id, unsigned n, std::optional<unsigned> k, const BigRational& lhs,
                         const BigRational& rhs)
{
    return IdentityCheck{std::move(id), n, k, lhs == rhs, lhs.to_string(), rhs.to_string()};
}

} // namespace

BigRational central_T(unsigned n, unsigned k)
{
    return central_alternating_sum(n, k, BigRational(1));
}

BigRational central_T_series(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    return half_sinh_kernel(n).pow(k).egf_coeff(n) * factorial(k).inverse();
}

BigRational central_bell_eval(unsigned n, const BigRational& x)
{
    BigRational total;
    for (unsigned k = 0; k <= n; ++k) {
        total += central_T(n, k) * x.pow(k);
    }
    return total;
}

BigRational central_bell_series(unsigned n, const BigRational& x)
{
    return (half_sinh_kernel(n) * x).exp().egf_coeff(n);
}

Polynomial central_bell_series_symbolic(unsigned n)
{
    return times_weight(lift(half_sinh_kernel(n))).exp().egf_coeff(n);
}

DobinskiReport dobinski_central(unsigned n, const BigRational& x, double tol, std::size_t max_shell)
{
    if (x.sign() < 0) {
        throw DomainError("Dobinski summation requires x >= 0");
    }
    if (!(tol > 0.0)) {
        throw DomainError("Dobinski tolerance must be positive");
    }
    DobinskiReport report;
    BigRational previous_bound;
    BigRational x_power(1);
    BigRational s_fact(1);
    for (std::size_t s = 0; s < max_shell; ++s) {
        if (s > 0) {
            x_power *= x;
            s_fact *= BigRational(s);
        }
        // l = s - j, so l/2 - j/2 = (s - 2j)/2.
        BigRational inner;
        for (std::size_t j = 0; j <= s; ++j) {
            const BigRational base = BigRational::make(static_cast<long long>(s) - 2 * static_cast<long long>(j), 2);
            const BigRational term = binomial(s, j) * base.pow(n);
            inner += j % 2 == 0 ? term : -term;
        }
        report.partial_sum += inner * x_power / s_fact;
        report.terms = s + 1;

        const BigRational bound =
            (BigRational(2) * x).pow(s) * BigRational::make(static_cast<long long>(s), 2).pow(n) / s_fact;
        if (s > 0 && bound <= previous_bound && bound.to_double() < tol) {
            report.approx = report.partial_sum.to_double();
            return report;
        }
        previous_bound = bound;
    }
    throw NonConvergence("central Dobinski sum for n=" + std::to_string(n) + ", x=" + x.to_string()
                         + " did not reach tolerance within " + std::to_string(max_shell) + " shells");
}

CentralIncompleteResult central_incomplete(unsigned n, unsigned k)
{
    CentralIncompleteResult result{n, k, {}};
    if (n < k) {
        return result;
    }
    // Parity yields an empty index set for odd n - k.
    const auto indices = enumerate_multi_indices(n, k, PartsMode::odd_only, n - k + 1);
    result.value = detail::partition_sum(n, indices, &odd_part_scale);
    return result;
}

Polynomial central_incomplete_series(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    return symbolic_central_kernel(n).pow(k).egf_coeff(n) * factorial(k).inverse();
}

Polynomial central_incomplete_via_bell(unsigned n, unsigned k)
{
    if (n < k || (n - k) % 2 != 0) {
        throw DomainError("central_incomplete_via_bell requires n >= k and n - k even (n=" + std::to_string(n)
                          + ", k=" + std::to_string(k) + ")");
    }
    return incomplete_bell(n, k).rescale([](Indeterminate m) {
        return m % 2 == 0 ? BigRational{} : BigRational(2).pow(m - 1).inverse();
    });
}

BigRational central_alternating_sum(unsigned n, unsigned k, const BigRational& x)
{
    const BigRational half_k = BigRational::make(k, 2);
    BigRational sum;
    for (unsigned l = 0; l <= k; ++l) {
        const BigRational term = binomial(k, l) * (BigRational(l) - half_k).pow(n);
        sum += (k - l) % 2 == 0 ? term : -term;
    }
    return x.pow(n) * sum / factorial(k);
}

BigRational central_incomplete_powers(unsigned n, unsigned k, const BigRational& x)
{
    const BigRational via_sum = central_alternating_sum(n, k, x);
    const BigRational via_partitions = central_incomplete(n, k).value.substitute_powers(x);
    if (via_sum != via_partitions) {
        throw InvariantViolation("T_{" + std::to_string(n) + "," + std::to_string(k) + "}(x, x^2, ...) at x="
                                 + x.to_string() + ": alternating sum " + via_sum.to_string()
                                 + " != partition sum " + via_partitions.to_string());
    }
    return via_sum;
}

BigRational central_incomplete_x10(unsigned n, unsigned k, const BigRational& x)
{
    return n == k ? x.pow(k) : BigRational{};
}

CentralCompleteResult central_complete(unsigned n, const BigRational& weight)
{
    CentralCompleteResult result{n, weight, {}};
    for (unsigned k = 0; k <= n; ++k) {
        result.value += central_incomplete(n, k).value * weight.pow(k);
    }
    return result;
}

CentralCompleteResult central_complete_symbolic(unsigned n)
{
    CentralCompleteResult result{n, std::nullopt, {}};
    for (unsigned k = 0; k <= n; ++k) {
        result.value += central_incomplete(n, k).value * Polynomial::variable(kWeightIndeterminate, k);
    }
    return result;
}

Polynomial central_complete_series(unsigned n, const std::optional<BigRational>& weight)
{
    const auto kernel = symbolic_central_kernel(n);
    const auto scaled = weight ? kernel * *weight : times_weight(kernel);
    return scaled.exp().egf_coeff(n);
}

Polynomial central_complete_odd_parts_sum(unsigned n)
{
    const auto indices = enumerate_multi_indices(n, std::nullopt, PartsMode::odd_only, std::max(n, 1U));
    return detail::partition_sum(n, indices, &odd_part_scale);
}

Polynomial central_complete_odd_formula(unsigned n)
{
    if (n % 2 == 0) {
        throw DomainError("odd-n central complete formula called with even n=" + std::to_string(n));
    }
    return central_complete_odd_parts_sum(n);
}

BigRational factorial_argument_lhs(unsigned n, unsigned k)
{
    Polynomial::Assignment args;
    for (unsigned m = 1; m + k <= n + 1; ++m) {
        args.emplace(m, factorial(m - 1));
    }
    return central_incomplete(n, k).value.substitute(args);
}

BigRational factorial_argument_rhs(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    // [t^l] (log(1+t))^k / k! = S1(l, k) / l!
    const auto log_power =
        RationalSeries::monomial(BigRational(1), 1, n).log1p().pow(k) * factorial(k).inverse();
    BigRational sum;
    for (unsigned l = k; l <= n; ++l) {
        // [t^n] (t / (1 - t/2))^l
        BigRational spread;
        if (l == 0) {
            spread = n == 0 ? BigRational(1) : BigRational{};
        } else {
            spread = binomial(n - 1, l - 1) * kHalf.pow(n - l);
        }
        sum += log_power[l] * spread;
    }
    return factorial(n) * sum;
}

BigRational central_factorial_argument(unsigned n, unsigned k)
{
    if (n < k) {
        throw DomainError("factorial-argument identity requires n >= k");
    }
    const BigRational lhs = factorial_argument_lhs(n, k);
    const BigRational rhs = factorial_argument_rhs(n, k);
    if (lhs != rhs) {
        throw InvariantViolation("T_{" + std::to_string(n) + "," + std::to_string(k) + "}(0!, 1!, ...): "
                                 + lhs.to_string() + " != " + rhs.to_string());
    }
    return lhs;
}

std::vector<IdentityCheck> central_bell_identity_suite(unsigned n_max, std::span<const BigRational> probes)
{
    std::vector<IdentityCheck> checks;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<Polynomial> incomplete;
        std::vector<BigRational> at_ones;
        BigRational t_row_sum;
        for (unsigned k = 0; k <= n; ++k) {
            incomplete.push_back(central_incomplete(n, k).value);
            at_ones.push_back(incomplete.back().substitute_all(BigRational(1)));
            t_row_sum += central_T(n, k);
        }
        const Polynomial complete_unit = central_complete(n, BigRational(1)).value;
        checks.push_back(make_check("central_bell_row_sum", n, std::nullopt,
                                    complete_unit.substitute_all(BigRational(1)), t_row_sum));

        for (const auto& x : probes) {
            const BigRational bell_x = central_bell_eval(n, x);
            BigRational weighted;
            for (unsigned k = 0; k <= n; ++k) {
                weighted += x.pow(k) * at_ones[k];
            }
            checks.push_back(make_check("weighted_incomplete_sum", n, std::nullopt, weighted, bell_x));
            checks.push_back(
                make_check("complete_equal_args", n, std::nullopt, complete_unit.substitute_all(x), bell_x));
            for (unsigned k = 0; k <= n; ++k) {
                checks.push_back(make_check("incomplete_equal_args", n, k, incomplete[k].substitute_all(x),
                                            x.pow(k) * at_ones[k]));
            }
            const BigRational unit_args = central_complete(n, x).value.substitute_all(BigRational(1));
            checks.push_back(make_check("complete_unit_args", n, std::nullopt, unit_args, bell_x));
        }
    }
    return checks;
}

} // namespace bellc
