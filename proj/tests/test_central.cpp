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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bellc/central.hpp"
#include "bellc/errors.hpp"
#include "bellc/partitions.hpp"

using bellc::BigRational;
using bellc::Polynomial;

namespace {

BigRational q(long long p, long long d = 1)
{
    return BigRational::make(p, d);
}

Polynomial x(bellc::Indeterminate i, std::uint32_t e = 1)
{
    return Polynomial::variable(i, e);
}

// T(n, k) = T(n-2, k-2) + (k/2)^2 T(n-2, k), T(0, 0) = 1, T(1, 1) = 1.
std::vector<std::vector<BigRational>> recurrence_T(unsigned n_max)
{
    std::vector<std::vector<BigRational>> t(n_max + 1, std::vector<BigRational>(n_max + 1, q(0)));
    t[0][0] = q(1);
    if (n_max >= 1) {
        t[1][1] = q(1);
    }
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            BigRational v = q(k * k, 4) * t[n - 2][k];
            if (k >= 2) {
                v += t[n - 2][k - 2];
            }
            t[n][k] = v;
        }
    }
    return t;
}

std::vector<BigRational> probes(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<BigRational> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(q(static_cast<long long>(rng() % 19) - 9, static_cast<long long>(rng() % 9) + 1));
    }
    return out;
}

} // namespace

TEST_CASE("central factorial numbers")
{
    CHECK(bellc::central_T(0, 0) == q(1));
    CHECK(bellc::central_T(3, 1) == q(1, 4));
    CHECK(bellc::central_T(4, 2) == q(1));
    CHECK(bellc::central_T(5, 1) == q(1, 16));
    CHECK(bellc::central_T(5, 3) == q(5, 2));
    CHECK(bellc::central_T(6, 4) == q(5));
    CHECK(bellc::central_T(4, 1) == q(0));
    CHECK(bellc::central_T(2, 3) == q(0));
    CHECK(bellc::central_T(3, 0) == q(0));
}

TEST_CASE("central factorial numbers: three routes agree")
{
    const auto t = recurrence_T(24);
    for (unsigned n = 0; n <= 24; ++n) {
        for (unsigned k = 0; k <= n + 2; ++k) {
            const BigRational expected = k <= n ? t[n][k] : q(0);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(bellc::central_T(n, k) == expected);
            CHECK(bellc::central_T_series(n, k) == expected);
            if ((n + k) % 2 == 1) {
                CHECK(bellc::central_T(n, k).is_zero());
            }
        }
    }
}

TEST_CASE("central Bell values")
{
    const std::vector<BigRational> at_one{q(1), q(1), q(1), q(5, 4), q(2), q(57, 16), q(7), q(989, 64)};
    for (unsigned n = 0; n < at_one.size(); ++n) {
        CHECK(bellc::central_bell_eval(n, q(1)) == at_one[n]);
        CHECK(bellc::central_bell_series(n, q(1)) == at_one[n]);
    }
    CHECK(bellc::central_bell_eval(3, q(2)) == q(17, 2));
    for (unsigned n = 0; n <= 14; ++n) {
        const auto symbolic = bellc::central_bell_series_symbolic(n);
        for (const auto& v : probes(n, 4)) {
            CHECK(bellc::central_bell_eval(n, v) == bellc::central_bell_series(n, v));
            CHECK(symbolic.substitute({{bellc::kWeightIndeterminate, v}}) == bellc::central_bell_eval(n, v));
        }
    }
}

TEST_CASE("central incomplete polynomials")
{
    CHECK(bellc::central_incomplete(4, 2).value == x(1) * x(3));
    CHECK(bellc::central_incomplete(3, 1).value == x(3) * q(1, 4));
    CHECK(bellc::central_incomplete(5, 2).value.is_zero());
    CHECK(bellc::central_incomplete(2, 4).value.is_zero());
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(bellc::central_incomplete(n, n).value == x(1, n));
    }
    const auto r = bellc::central_incomplete(6, 2);
    CHECK(r.n == 6);
    CHECK(r.k == 2);
}

TEST_CASE("central incomplete: routes agree and only odd arguments occur")
{
    for (unsigned n = 0; n <= 14; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const auto value = bellc::central_incomplete(n, k).value;
            CAPTURE(n);
            CAPTURE(k);
            CHECK(value == bellc::central_incomplete_series(n, k));
            for (const auto i : value.indeterminates()) {
                CHECK(i % 2 == 1);
                CHECK(i <= n - k + 1);
            }
            if ((n - k) % 2 == 0) {
                CHECK(value == bellc::central_incomplete_via_bell(n, k));
            } else {
                CHECK(value.is_zero());
                CHECK_THROWS_AS(bellc::central_incomplete_via_bell(n, k), bellc::DomainError);
            }
            CHECK(value.substitute_all(q(1)) == bellc::central_T(n, k));
        }
    }
    CHECK_THROWS_AS(bellc::central_incomplete_via_bell(2, 3), bellc::DomainError);
}

TEST_CASE("central incomplete at powers of x")
{
    CHECK(bellc::central_incomplete_powers(3, 1, q(2)) == q(8) * q(1, 4));
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= n + 1; ++k) {
            for (const auto& v : probes(100 + n, 3)) {
                const auto value = bellc::central_incomplete_powers(n, k, v);
                CHECK(value == bellc::central_alternating_sum(n, k, v));
                CHECK(value == bellc::central_T(n, k) * v.pow(n));
            }
        }
    }
}

TEST_CASE("central incomplete at (x, 1, 0, ...)")
{
    CHECK(bellc::central_incomplete_x10(3, 3, q(2)) == q(8));
    CHECK(bellc::central_incomplete_x10(0, 0, q(5)) == q(1));
    CHECK(bellc::central_incomplete_x10(4, 2, q(2)) == q(0));
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const auto value = bellc::central_incomplete(n, k).value;
            for (const auto& v : probes(200 + n, 3)) {
                Polynomial::Assignment args{{1, v}, {2, q(1)}};
                for (unsigned m = 3; m <= n + 1; ++m) {
                    args.emplace(m, q(0));
                }
                CHECK(bellc::central_incomplete_x10(n, k, v) == value.substitute(args));
            }
        }
    }
}

TEST_CASE("central complete polynomials")
{
    CHECK(bellc::central_complete(0, q(3)).value == Polynomial(q(1)));
    const auto c2 = bellc::central_complete(2, q(3));
    CHECK(c2.n == 2);
    CHECK(c2.weight == q(3));
    CHECK(c2.value == x(1, 2) * q(9));
    CHECK_FALSE(bellc::central_complete_symbolic(3).weight.has_value());
    for (unsigned n = 0; n <= 12; ++n) {
        const auto symbolic = bellc::central_complete_symbolic(n).value;
        CHECK(symbolic == bellc::central_complete_series(n, std::nullopt));
        CHECK(bellc::central_complete(n, q(1)).value.substitute_all(q(1)) == bellc::central_bell_eval(n, q(1)));
        for (const auto& v : probes(300 + n, 3)) {
            const auto numeric = bellc::central_complete(n, v).value;
            CHECK(numeric == bellc::central_complete_series(n, v));
            CHECK(numeric == symbolic.partial_substitute({{bellc::kWeightIndeterminate, v}}));
            CHECK(numeric.substitute_all(q(1)) == bellc::central_bell_eval(n, v));
            CHECK(bellc::central_complete(n, q(1)).value.substitute_all(v) == bellc::central_bell_eval(n, v));
        }
    }
}

TEST_CASE("central complete odd formula")
{
    CHECK(bellc::central_complete_odd_formula(1) == x(1));
    CHECK(bellc::central_complete_odd_formula(3) == x(3) * q(1, 4) + x(1, 3));
    for (unsigned n = 0; n <= 14; ++n) {
        if (n % 2 == 0) {
            CHECK_THROWS_AS(bellc::central_complete_odd_formula(n), bellc::DomainError);
        } else {
            CHECK(bellc::central_complete_odd_formula(n) == bellc::central_complete_odd_parts_sum(n));
        }
        CHECK(bellc::central_complete_odd_parts_sum(n) == bellc::central_complete(n, q(1)).value);
    }
}

TEST_CASE("incomplete central polynomial at factorial arguments")
{
    CHECK(bellc::central_factorial_argument(0, 0) == q(1));
    CHECK(bellc::central_factorial_argument(3, 1) == q(1, 2));
    CHECK(bellc::central_factorial_argument(4, 2) == q(2));
    CHECK(bellc::central_factorial_argument(5, 1) == q(3, 2));
    CHECK(bellc::central_factorial_argument(5, 3) == q(5));
    CHECK(bellc::central_factorial_argument(6, 2) == q(23, 2));
    CHECK(bellc::factorial_argument_rhs(3, 0) == q(0));
    CHECK_THROWS_AS(bellc::central_factorial_argument(2, 3), bellc::DomainError);
    for (unsigned n = 0; n <= 14; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(bellc::factorial_argument_lhs(n, k) == bellc::factorial_argument_rhs(n, k));
        }
    }
}

TEST_CASE("identity suite")
{
    const auto ps = probes(7, 5);
    const auto checks = bellc::central_bell_identity_suite(8, ps);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
        CAPTURE(c.id);
        CAPTURE(c.n);
        CHECK(c.pass);
    }
    const std::vector<BigRational> zero{q(0)};
    for (const auto& c : bellc::central_bell_identity_suite(0, zero)) {
        CHECK(c.pass);
        CHECK(c.n == 0);
    }
}

TEST_CASE("central Dobinski summation")
{
    const auto r = bellc::dobinski_central(3, q(1), 1e-12, 400);
    CHECK(std::abs(r.approx - 1.25) < 1e-9);
    CHECK(std::abs(bellc::dobinski_central(0, q(2), 1e-12, 400).approx - 1.0) < 1e-9);
    CHECK(bellc::dobinski_central(1, q(0), 1e-12, 400).approx == 0.0);
    for (unsigned n = 0; n <= 10; ++n) {
        for (const auto& v : {q(1, 2), q(1), q(2)}) {
            const auto exact = bellc::central_bell_eval(n, v).to_double();
            const auto approx = bellc::dobinski_central(n, v, 1e-12, 400).approx;
            CHECK(std::abs(approx - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
    CHECK_THROWS_AS(bellc::dobinski_central(10, q(5), 1e-12, 5), bellc::NonConvergence);
    CHECK_THROWS_AS(bellc::dobinski_central(1, q(-1), 1e-12, 100), bellc::DomainError);
    CHECK_THROWS_AS(bellc::dobinski_central(1, q(1), -1.0, 100), bellc::DomainError);
}
