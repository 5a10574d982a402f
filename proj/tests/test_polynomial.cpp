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

#include <random>

#include "bellc/errors.hpp"
#include "bellc/polynomial.hpp"

using bellc::BigRational;
using bellc::ExponentVector;
using bellc::Polynomial;
using bellc::ScaleMode;

namespace {

Polynomial x(bellc::Indeterminate i, std::uint32_t e = 1)
{
    return Polynomial::variable(i, e);
}

Polynomial c(long long p, long long d = 1)
{
    return Polynomial(BigRational::make(p, d));
}

Polynomial random_poly(std::mt19937_64& rng)
{
    Polynomial p;
    const int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Polynomial mono = c(static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 3) + 1);
        const int factors = static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) {
            mono *= x(static_cast<bellc::Indeterminate>(rng() % 4 + 1));
        }
        p += mono;
    }
    return p;
}

} // namespace

TEST_CASE("exponent vectors merge factors and order by weighted degree")
{
    const ExponentVector a{{3, 1}, {1, 1}, {3, 0}};
    CHECK(a.factors() == std::vector<ExponentVector::Factor>{{1, 1}, {3, 1}});
    CHECK(a.factor_count() == 2);
    CHECK(a.weighted_degree() == 4);
    CHECK(a.exponent(2) == 0);
    const ExponentVector b{{2, 2}};
    CHECK((a * b).factors() == std::vector<ExponentVector::Factor>{{1, 1}, {2, 2}, {3, 1}});
    // Same weighted degree 4: lexicographic on the factor list.
    CHECK(a < b);
    CHECK(ExponentVector{{1, 3}} < b);
    CHECK(ExponentVector{} < ExponentVector{{1, 1}});
}

TEST_CASE("addition")
{
    CHECK((x(1) + (-x(1))).is_zero());
    CHECK(x(1) * x(3) + x(1) * x(3) == Polynomial::term(ExponentVector{{1, 1}, {3, 1}}, BigRational(2)));
    const Polynomial p = x(1) * x(3) + c(1, 2);
    CHECK(p + Polynomial{} == p);
}

TEST_CASE("multiplication")
{
    CHECK(x(1) * x(3) == Polynomial::term(ExponentVector{{1, 1}, {3, 1}}, BigRational(1)));
    CHECK((x(1) + c(1)) * (x(1) - c(1)) == x(1, 2) - c(1));
    const Polynomial p = x(2) * c(3, 4) + x(5);
    CHECK(p * c(1) == p);
    CHECK((p * Polynomial{}).is_zero());
}

TEST_CASE("substitution")
{
    const Polynomial t31 = x(3) * c(1, 4);
    CHECK(t31.substitute({{3, BigRational(1)}}) == BigRational::make(1, 4));
    CHECK((x(1) * x(3)).substitute({{1, BigRational(1)}, {3, BigRational(1)}}) == BigRational(1));
    CHECK(Polynomial{}.substitute({{1, BigRational(5)}}) == BigRational(0));
    CHECK_THROWS_AS((x(1) * x(3)).substitute({{1, BigRational(1)}}), bellc::DomainError);
    CHECK((x(1, 2) + x(2)).substitute_all(BigRational(3)) == BigRational(12));
}

TEST_CASE("partial substitution keeps unassigned indeterminates")
{
    const Polynomial p = x(1) * x(2) + x(2, 2);
    CHECK(p.partial_substitute({{2, BigRational(3)}}) == x(1) * c(3) + c(9));
}

TEST_CASE("power substitution x_m -> base^m")
{
    CHECK((x(3) * c(1, 4)).substitute_powers(BigRational(2)) == BigRational(2));
    CHECK((x(1) * x(3)).substitute_powers(BigRational(1)) == BigRational(1));
    CHECK(x(1, 2).substitute_powers(BigRational(3)) == BigRational(9));
}

TEST_CASE("argument scaling")
{
    const BigRational a = BigRational::make(-2, 3);
    const Polynomial p = x(1) * x(3);
    CHECK(p.scale_args(ScaleMode::uniform, a) == p * a.pow(2));
    CHECK(p.scale_args(ScaleMode::graded, a) == p * a.pow(4));
    const Polynomial r = x(1) * c(5) + x(2, 3) - c(7);
    CHECK(r.scale_args(ScaleMode::uniform, BigRational(1)) == r);
    CHECK(r.scale_args(ScaleMode::graded, BigRational(1)) == r);
}

TEST_CASE("text form")
{
    CHECK(Polynomial{}.to_string() == "0");
    CHECK((x(1, 3) + x(3) * c(1, 4)).to_string() == "x1^3 + 1/4*x3");
    CHECK((c(2) - x(1) * x(2)).to_string() == "2 - x1*x2");
    CHECK(x(bellc::kWeightIndeterminate, 2).to_string() == "x^2");
}

TEST_CASE("ring axioms and substitution homomorphism on random polynomials")
{
    std::mt19937_64 rng(11);
    const Polynomial::Assignment at{{1, BigRational::make(2, 3)},
                                    {2, BigRational(-1)},
                                    {3, BigRational::make(5, 2)},
                                    {4, BigRational(3)}};
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng);
        const auto q = random_poly(rng);
        const auto r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK((p * q).substitute(at) == p.substitute(at) * q.substitute(at));
        CHECK((p + q).substitute(at) == p.substitute(at) + q.substitute(at));
        const auto sum = p * q + r;
        for (const auto& [mono, coeff] : sum.terms()) {
            CHECK_FALSE(coeff.is_zero());
        }
    }
}
