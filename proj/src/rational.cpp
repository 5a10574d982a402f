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

#include "bellc/rational.hpp"

#include <cmath>
#include <string>

#include <mpfr.h>

#include "bellc/errors.hpp"

namespace bellc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

BigRational BigRational::make(const mpz_class& num, const mpz_class& den)
{
    if (sgn(den) == 0) {
        throw DomainError("rational with zero denominator");
    }
    BigRational r;
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
}

BigRational BigRational::make(long long num, long long den)
{
    return make(BigRational(num).numerator(), BigRational(den).numerator());
}

BigRational BigRational::from_mpq(const mpq_class& q)
{
    BigRational r;
    r.value_ = q;
    r.value_.canonicalize();
    return r;
}

BigRational BigRational::parse(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_digits = body.substr(0, slash);
    const std::string_view den_digits =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_digits) || !all_digits(den_digits)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_digits), 10);
    const mpz_class den(std::string(den_digits), 10);
    if (sgn(den) == 0) {
        throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    }
    if (text.front() == '-') {
        num = -num;
    }
    return make(num, den);
}

BigRational BigRational::abs() const
{
    BigRational r;
    r.value_ = ::abs(value_);
    return r;
}

BigRational BigRational::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    return BigRational(1) / *this;
}

BigRational BigRational::pow(long long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    BigRational r;
    r.value_ = mpq_class(num, den);
    return r;
}

std::string BigRational::to_string() const
{
    return value_.get_str(10);
}

double BigRational::to_double() const
{
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    if (!std::isfinite(d)) {
        throw MagnitudeError("rational out of double range");
    }
    return d;
}

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const
{
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational factorial(long long n)
{
    if (n < 0) {
        throw DomainError("factorial of a negative integer");
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRational::make(f, mpz_class(1));
}

BigRational binomial(long long n, long long k)
{
    if (n < 0) {
        throw DomainError("binomial with negative upper index");
    }
    if (k < 0 || k > n) {
        return {};
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRational::make(c, mpz_class(1));
}

} // namespace bellc
