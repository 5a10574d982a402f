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

#ifndef BELLC_SERIES_HPP
#define BELLC_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellc/errors.hpp"
#include "bellc/polynomial.hpp"
#include "bellc/rational.hpp"

namespace bellc {

// Coefficient rings the series engine works over: BigRational and Polynomial.
template <class R>
concept CoefficientRing = requires(R a, const R& b, const BigRational& s) {
    R{};
    R{s};
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * s } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

/// Truncated power series c_0 + c_1 t + ... + c_P t^P + O(t^{P+1}).
///
/// Coefficients past P are unknown rather than zero: binary operations
/// truncate to the smaller operand precision and any access past P throws
/// PrecisionError.
template <CoefficientRing Ring>
class PowerSeries {
public:
    /// Zero series known to precision P.
    explicit PowerSeries(std::size_t precision)
        : coeffs_(precision + 1)
    {
    }

    /// Series whose precision is coeffs.size() - 1. Throws DomainError on an
    /// empty coefficient list.
    static PowerSeries from_coefficients(std::vector<Ring> coeffs)
    {
        if (coeffs.empty()) {
            throw DomainError("power series needs at least one coefficient");
        }
        PowerSeries s(0);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    static PowerSeries constant(const Ring& c, std::size_t precision)
    {
        PowerSeries s(precision);
        s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries one(std::size_t precision) { return constant(Ring{BigRational(1)}, precision); }

    /// c * t^power.
    static PowerSeries monomial(const Ring& c, std::size_t power, std::size_t precision)
    {
        PowerSeries s(precision);
        if (power <= precision) {
            s.coeffs_[power] = c;
        }
        return s;
    }

    [[nodiscard]] std::size_t precision() const { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Ring> coefficients() const { return coeffs_; }

    /// Coefficient of t^n.
    [[nodiscard]] const Ring& operator[](std::size_t n) const
    {
        if (n > precision()) {
            throw PrecisionError("coefficient t^" + std::to_string(n) + " requested from a series known to t^"
                                 + std::to_string(precision()));
        }
        return coeffs_[n];
    }

    /// n! * [t^n].
    [[nodiscard]] Ring egf_coeff(std::size_t n) const
    {
        return (*this)[n] * factorial(static_cast<long long>(n));
    }

    [[nodiscard]] PowerSeries truncated(std::size_t precision) const
    {
        if (precision > this->precision()) {
            throw PrecisionError("cannot raise the precision of a truncated series");
        }
        PowerSeries s(precision);
        std::copy_n(coeffs_.begin(), precision + 1, s.coeffs_.begin());
        return s;
    }

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g)
    {
        PowerSeries s(std::min(f.precision(), g.precision()));
        for (std::size_t n = 0; n <= s.precision(); ++n) {
            s.coeffs_[n] = f.coeffs_[n] + g.coeffs_[n];
        }
        return s;
    }

    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g)
    {
        PowerSeries s(std::min(f.precision(), g.precision()));
        for (std::size_t n = 0; n <= s.precision(); ++n) {
            s.coeffs_[n] = f.coeffs_[n] - g.coeffs_[n];
        }
        return s;
    }

    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g)
    {
        PowerSeries s(std::min(f.precision(), g.precision()));
        const std::size_t p = s.precision();
        for (std::size_t i = 0; i <= p; ++i) {
            if (f.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= p; ++j) {
                if (g.coeffs_[j].is_zero()) {
                    continue;
                }
                s.coeffs_[i + j] = s.coeffs_[i + j] + f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return s;
    }

    friend PowerSeries operator*(PowerSeries f, const BigRational& scalar)
    {
        for (auto& c : f.coeffs_) {
            c = c * scalar;
        }
        return f;
    }

    PowerSeries operator-() const { return *this * BigRational(-1); }

    /// f^k; f^0 is 1 at the precision of f.
    [[nodiscard]] PowerSeries pow(std::size_t k) const
    {
        PowerSeries result = one(precision());
        PowerSeries base = *this;
        while (k > 0) {
            if (k & 1U) {
                result = result * base;
            }
            k >>= 1U;
            if (k > 0) {
                base = base * base;
            }
        }
        return result;
    }

    /// f(c t): coefficient n is multiplied by c^n.
    [[nodiscard]] PowerSeries dilate(const BigRational& c) const
    {
        PowerSeries s = *this;
        for (std::size_t n = 0; n < s.coeffs_.size(); ++n) {
            s.coeffs_[n] = s.coeffs_[n] * c.pow(static_cast<long long>(n));
        }
        return s;
    }

    /// sum_{k>=0} f^k / k!. Requires a zero constant term.
    [[nodiscard]] PowerSeries exp() const
    {
        require_zero_constant("exp");
        PowerSeries result = one(precision());
        PowerSeries term = result;
        // f^k vanishes below t^k, so k <= P terms suffice.
        for (std::size_t k = 1; k <= precision(); ++k) {
            term = term * *this * BigRational::make(1, static_cast<long long>(k));
            result = result + term;
        }
        return result;
    }

    /// log(1 + f) = sum_{m>=1} (-1)^{m+1} f^m / m. Requires a zero constant
    /// term.
    [[nodiscard]] PowerSeries log1p() const
    {
        require_zero_constant("log1p");
        PowerSeries result(precision());
        PowerSeries power = *this;
        for (std::size_t m = 1; m <= precision(); ++m) {
            const long long sign = m % 2 == 1 ? 1 : -1;
            result = result + power * BigRational::make(sign, static_cast<long long>(m));
            power = power * *this;
        }
        return result;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    void require_zero_constant(const char* op) const
    {
        if (!coeffs_[0].is_zero()) {
            throw DomainError(std::string(op) + " of a series with nonzero constant term");
        }
    }

    std::vector<Ring> coeffs_;
};

using RationalSeries = PowerSeries<BigRational>;
using PolynomialSeries = PowerSeries<Polynomial>;

/// sum_{m=1}^{P} (x_m - (-1)^m x_m) / 2^m * t^m / m!, with x_m = 0 past the
/// supplied arguments. Even-m coefficients cancel exactly; odd-m coefficients
/// equal x_m / (2^{m-1} m!).
template <CoefficientRing Ring>
PowerSeries<Ring> central_kernel(std::span<const Ring> args, std::size_t precision)
{
    PowerSeries<Ring> s(precision);
    std::vector<Ring> coeffs(precision + 1);
    for (std::size_t m = 1; m <= precision && m <= args.size(); ++m) {
        const Ring& x = args[m - 1];
        const Ring signed_x = m % 2 == 0 ? x : x * BigRational(-1);
        const BigRational scale =
            (BigRational(2).pow(static_cast<long long>(m)) * factorial(static_cast<long long>(m))).inverse();
        coeffs[m] = (x - signed_x) * scale;
    }
    return PowerSeries<Ring>::from_coefficients(std::move(coeffs));
}

/// Kernel over the symbolic indeterminates x_1..x_P.
PolynomialSeries symbolic_central_kernel(std::size_t precision);

/// sum_{m=1}^{P} x_m t^m / m! over the symbolic indeterminates x_1..x_P.
PolynomialSeries symbolic_exponential_kernel(std::size_t precision);

} // namespace bellc

#endif // BELLC_SERIES_HPP
