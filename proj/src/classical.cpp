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

#include "bellc/classical.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include <mpfr.h>

#include "bellc/errors.hpp"
#include "bellc/partitions.hpp"
#include "bellc/series.hpp"
#include "partition_sum.hpp"

namespace bellc {

namespace {

// Rows of a triangle grown on demand by a row recurrence; safe to share
// between threads.
class MemoTriangle {
public:
    using Step = BigRational (*)(const std::vector<BigRational>& prev, unsigned n, unsigned k);

    explicit MemoTriangle(Step step)
        : step_(step)
    {
        rows_.push_back({BigRational(1)});
    }

    BigRational get(unsigned n, unsigned k)
    {
        if (k > n) {
            return {};
        }
        std::lock_guard lock(mutex_);
        grow(n);
        return rows_[n][k];
    }

    TriangleTable table(unsigned n_max)
    {
        std::lock_guard lock(mutex_);
        grow(n_max);
        TriangleTable t(n_max);
        for (unsigned n = 0; n <= n_max; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                t.at(n, k) = rows_[n][k];
            }
        }
        return t;
    }

private:
    void grow(unsigned n)
    {
        while (rows_.size() <= n) {
            const auto m = static_cast<unsigned>(rows_.size());
            std::vector<BigRational> row(m + 1);
            for (unsigned k = 0; k <= m; ++k) {
                row[k] = step_(rows_.back(), m, k);
            }
            rows_.push_back(std::move(row));
        }
    }

    Step step_;
    std::mutex mutex_;
    std::vector<std::vector<BigRational>> rows_;
};

BigRational prev_at(const std::vector<BigRational>& prev, unsigned k)
{
    return k < prev.size() ? prev[k] : BigRational{};
}

// S2(n, k) = S2(n-1, k-1) + k S2(n-1, k)
BigRational stirling2_step(const std::vector<BigRational>& prev, unsigned n, unsigned k)
{
    (void)n;
    const BigRational left = k > 0 ? prev_at(prev, k - 1) : BigRational{};
    return left + BigRational(k) * prev_at(prev, k);
}

// s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
BigRational stirling1_step(const std::vector<BigRational>& prev, unsigned n, unsigned k)
{
    const BigRational left = k > 0 ? prev_at(prev, k - 1) : BigRational{};
    return left - BigRational(n - 1) * prev_at(prev, k);
}

MemoTriangle& stirling2_memo()
{
    static MemoTriangle memo(&stirling2_step);
    return memo;
}

MemoTriangle& stirling1_memo()
{
    static MemoTriangle memo(&stirling1_step);
    return memo;
}

RationalSeries exp_minus_one(std::size_t precision)
{
    return RationalSeries::monomial(BigRational(1), 1, precision).exp() - RationalSeries::one(precision);
}

// f^k / k! at coefficient n, as an EGF coefficient.
template <CoefficientRing Ring>
Ring egf_power_coeff(const PowerSeries<Ring>& f, unsigned n, unsigned k)
{
    return f.pow(k).egf_coeff(n) * factorial(k).inverse();
}

double exp_neg_times(const BigRational& x, const BigRational& sum)
{
    mpfr_t e;
    mpfr_t s;
    mpfr_init2(e, 256);
    mpfr_init2(s, 256);
    mpfr_set_q(e, x.mpq().get_mpq_t(), MPFR_RNDN);
    mpfr_neg(e, e, MPFR_RNDN);
    mpfr_exp(e, e, MPFR_RNDN);
    mpfr_set_q(s, sum.mpq().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(e, e, s, MPFR_RNDN);
    const double d = mpfr_get_d(e, MPFR_RNDN);
    mpfr_clear(e);
    mpfr_clear(s);
    if (!std::isfinite(d)) {
        throw MagnitudeError("Dobinski estimate out of double range");
    }
    return d;
}

} // namespace

BigRational stirling2(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    return egf_power_coeff(exp_minus_one(n), n, k);
}

BigRational stirling1(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    const auto log1p_t = RationalSeries::monomial(BigRational(1), 1, n).log1p();
    return egf_power_coeff(log1p_t, n, k);
}

BigRational stirling2_recurrence(unsigned n, unsigned k)
{
    return stirling2_memo().get(n, k);
}

BigRational stirling1_recurrence(unsigned n, unsigned k)
{
    return stirling1_memo().get(n, k);
}

TriangleTable stirling2_table(unsigned n_max)
{
    return stirling2_memo().table(n_max);
}

TriangleTable stirling1_table(unsigned n_max)
{
    return stirling1_memo().table(n_max);
}

Polynomial incomplete_bell(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    const auto indices = enumerate_multi_indices(n, k, PartsMode::all, n - k + 1);
    return detail::partition_sum(n, indices, [](unsigned m) { return factorial(m).inverse(); });
}

Polynomial incomplete_bell_series(unsigned n, unsigned k)
{
    if (n < k) {
        return {};
    }
    return egf_power_coeff(symbolic_exponential_kernel(n), n, k);
}

BigRational incomplete_bell_x10(unsigned n, unsigned k, const BigRational& x)
{
    if (n < k || n > 2 * k) {
        return {};
    }
    return factorial(n) / factorial(k) * binomial(k, n - k) * x.pow(2LL * k - n)
        * BigRational::make(1, 2).pow(n - k);
}

Polynomial complete_bell(unsigned n)
{
    Polynomial total;
    for (unsigned k = 0; k <= n; ++k) {
        total += incomplete_bell(n, k);
    }
    return total;
}

Polynomial complete_bell_series(unsigned n)
{
    return symbolic_exponential_kernel(n).exp().egf_coeff(n);
}

BigRational bell_eval(unsigned n, const BigRational& x)
{
    BigRational total;
    for (unsigned k = 0; k <= n; ++k) {
        total += stirling2_recurrence(n, k) * x.pow(k);
    }
    return total;
}

DobinskiReport dobinski_classical(unsigned n, const BigRational& x, double tol, std::size_t max_terms)
{
    if (x.sign() < 0) {
        throw DomainError("Dobinski summation requires x >= 0");
    }
    if (!(tol > 0.0)) {
        throw DomainError("Dobinski tolerance must be positive");
    }
    DobinskiReport report;
    BigRational previous;
    BigRational x_power(1);
    BigRational k_fact(1);
    for (std::size_t k = 0; k < max_terms; ++k) {
        if (k > 0) {
            x_power *= x;
            k_fact *= BigRational(k);
        }
        const BigRational term = BigRational(k).pow(n) * x_power / k_fact;
        report.partial_sum += term;
        report.terms = k + 1;
        // Terms k^n x^k / k! are log-concave in k, so once they stop growing
        // they decrease for good.
        if (k > 0 && term <= previous && term.to_double() < tol) {
            report.approx = exp_neg_times(x, report.partial_sum);
            return report;
        }
        previous = term;
    }
    throw NonConvergence("classical Dobinski sum for n=" + std::to_string(n) + ", x=" + x.to_string()
                         + " did not reach tolerance within " + std::to_string(max_terms) + " terms");
}

} // namespace bellc
