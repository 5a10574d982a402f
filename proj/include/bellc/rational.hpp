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

#ifndef BELLC_RATIONAL_HPP
#define BELLC_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bellc {

/// Exact rational number kept in canonical form: positive denominator,
/// coprime numerator/denominator, zero stored as 0/1.
///
/// Canonical form is established in every constructor and preserved by
/// every operation, so equality is plain component comparison.
class BigRational {
public:
    BigRational() = default;

    template <std::integral I>
    BigRational(I value) // NOLINT(google-explicit-constructor)
        : value_(to_mpz(value))
    {
    }

    /// num/den reduced. Throws DomainError when den == 0.
    static BigRational make(const mpz_class& num, const mpz_class& den);
    static BigRational make(long long num, long long den);

    /// Accepts `-?<digits>(/<digits>)?`. Throws ParseError otherwise or on a
    /// zero denominator.
    static BigRational parse(std::string_view text);

    static BigRational from_mpq(const mpq_class& q);

    [[nodiscard]] const mpz_class& numerator() const { return value_.get_num(); }
    [[nodiscard]] const mpz_class& denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& mpq() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] BigRational abs() const;
    /// Throws DomainError on zero.
    [[nodiscard]] BigRational inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    /// 0^0 is 1 (empty product).
    [[nodiscard]] BigRational pow(long long exponent) const;

    /// `p/q`, or `p` when q == 1.
    [[nodiscard]] std::string to_string() const;
    /// Nearest double. Throws MagnitudeError when out of double range.
    [[nodiscard]] double to_double() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    /// Throws DomainError on division by zero.
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

private:
    template <std::integral I>
    static mpz_class to_mpz(I value)
    {
        if constexpr (std::is_signed_v<I>) {
            if constexpr (sizeof(I) <= sizeof(long)) {
                return mpz_class(static_cast<long>(value));
            } else {
                return mpz_class(std::to_string(value));
            }
        } else {
            if constexpr (sizeof(I) <= sizeof(unsigned long)) {
                return mpz_class(static_cast<unsigned long>(value));
            } else {
                return mpz_class(std::to_string(value));
            }
        }
    }

    mpq_class value_{0};
};

// n! as an exact value. Throws DomainError for n < 0.
BigRational factorial(long long n);

// C(n, k) for 0 <= k <= n, zero outside that range (n >= 0).
BigRational binomial(long long n, long long k);

} // namespace bellc

#endif // BELLC_RATIONAL_HPP
