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

#include "bellc/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "bellc/errors.hpp"

namespace bellc {

ExponentVector::ExponentVector(std::initializer_list<Factor> factors)
    : ExponentVector(from_factors(std::vector<Factor>(factors)))
{
}

ExponentVector ExponentVector::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    ExponentVector ev;
    for (const auto& [index, exp] : factors) {
        if (exp == 0) {
            continue;
        }
        if (!ev.factors_.empty() && ev.factors_.back().first == index) {
            ev.factors_.back().second += exp;
        } else {
            ev.factors_.emplace_back(index, exp);
        }
    }
    return ev;
}

std::uint32_t ExponentVector::exponent(Indeterminate index) const
{
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{index, 0});
    return it != factors_.end() && it->first == index ? it->second : 0;
}

std::uint64_t ExponentVector::factor_count() const
{
    std::uint64_t n = 0;
    for (const auto& f : factors_) {
        n += f.second;
    }
    return n;
}

std::uint64_t ExponentVector::weighted_degree() const
{
    std::uint64_t n = 0;
    for (const auto& [index, exp] : factors_) {
        n += static_cast<std::uint64_t>(index) * exp;
    }
    return n;
}

ExponentVector ExponentVector::operator*(const ExponentVector& rhs) const
{
    ExponentVector out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool operator<(const ExponentVector& a, const ExponentVector& b)
{
    const auto da = a.weighted_degree();
    const auto db = b.weighted_degree();
    if (da != db) {
        return da < db;
    }
    return a.factors_ < b.factors_;
}

Polynomial::Polynomial(const BigRational& constant)
{
    add_term(ExponentVector{}, constant);
}

Polynomial Polynomial::variable(Indeterminate index, std::uint32_t exponent)
{
    return term(ExponentVector{{index, exponent}}, BigRational(1));
}

Polynomial Polynomial::term(ExponentVector monomial, const BigRational& coeff)
{
    Polynomial p;
    p.add_term(monomial, coeff);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

BigRational Polynomial::constant_term() const
{
    return coefficient(ExponentVector{});
}

BigRational Polynomial::coefficient(const ExponentVector& monomial) const
{
    const auto it = terms_.find(monomial);
    return it == terms_.end() ? BigRational{} : it->second;
}

std::set<Indeterminate> Polynomial::indeterminates() const
{
    std::set<Indeterminate> out;
    for (const auto& [mono, coeff] : terms_) {
        for (const auto& f : mono.factors()) {
            out.insert(f.first);
        }
    }
    return out;
}

void Polynomial::add_term(const ExponentVector& monomial, const BigRational& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BigRational Polynomial::substitute(const Assignment& assignment) const
{
    BigRational total;
    for (const auto& [mono, coeff] : terms_) {
        BigRational value = coeff;
        for (const auto& [index, exp] : mono.factors()) {
            const auto it = assignment.find(index);
            if (it == assignment.end()) {
                throw DomainError("no value assigned to x" + std::to_string(index));
            }
            value *= it->second.pow(exp);
        }
        total += value;
    }
    return total;
}

BigRational Polynomial::substitute_all(const BigRational& value) const
{
    BigRational total;
    for (const auto& [mono, coeff] : terms_) {
        total += coeff * value.pow(static_cast<long long>(mono.factor_count()));
    }
    return total;
}

BigRational Polynomial::substitute_powers(const BigRational& base) const
{
    BigRational total;
    for (const auto& [mono, coeff] : terms_) {
        total += coeff * base.pow(static_cast<long long>(mono.weighted_degree()));
    }
    return total;
}

Polynomial Polynomial::partial_substitute(const Assignment& assignment) const
{
    Polynomial out;
    for (const auto& [mono, coeff] : terms_) {
        BigRational value = coeff;
        std::vector<ExponentVector::Factor> kept;
        for (const auto& f : mono.factors()) {
            const auto it = assignment.find(f.first);
            if (it == assignment.end()) {
                kept.push_back(f);
            } else {
                value *= it->second.pow(f.second);
            }
        }
        out.add_term(ExponentVector::from_factors(std::move(kept)), value);
    }
    return out;
}

Polynomial Polynomial::rescale(const std::function<BigRational(Indeterminate)>& factor) const
{
    Polynomial out;
    for (const auto& [mono, coeff] : terms_) {
        BigRational value = coeff;
        for (const auto& [index, exp] : mono.factors()) {
            value *= factor(index).pow(exp);
        }
        out.add_term(mono, value);
    }
    return out;
}

Polynomial Polynomial::scale_args(ScaleMode mode, const BigRational& alpha) const
{
    if (mode == ScaleMode::uniform) {
        return rescale([&](Indeterminate) { return alpha; });
    }
    return rescale([&](Indeterminate m) { return alpha.pow(m); });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    for (const auto& [mono, coeff] : rhs.terms_) {
        add_term(mono, coeff);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    for (const auto& [mono, coeff] : rhs.terms_) {
        add_term(mono, -coeff);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) {
        coeff *= scalar;
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    return *this * BigRational(-1);
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        BigRational c = coeff;
        if (!first) {
            out += c.sign() < 0 ? " - " : " + ";
            c = c.abs();
        }
        first = false;
        std::string body;
        for (const auto& [index, exp] : mono.factors()) {
            if (!body.empty()) {
                body += '*';
            }
            body += index == kWeightIndeterminate ? std::string("x") : "x" + std::to_string(index);
            if (exp > 1) {
                body += '^' + std::to_string(exp);
            }
        }
        if (body.empty()) {
            out += c.to_string();
        } else if (c.is_one()) {
            out += body;
        } else if (c == BigRational(-1)) {
            out += '-' + body;
        } else {
            out += c.to_string() + '*' + body;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.to_string();
}

} // namespace bellc
