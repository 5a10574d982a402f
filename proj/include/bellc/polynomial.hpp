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

#ifndef BELLC_POLYNOMIAL_HPP
#define BELLC_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bellc/rational.hpp"

namespace bellc {

using Indeterminate = std::uint32_t;

// Index reserved for an auxiliary weight variable (the `x` in a central
// complete Bell polynomial). Regular indeterminates x_1, x_2, ... start at 1.
inline constexpr Indeterminate kWeightIndeterminate = 0;

/// Sparse monomial x_{i1}^{e1} x_{i2}^{e2} ... with indices strictly
/// increasing and every exponent >= 1. The empty vector is the constant
/// monomial.
class ExponentVector {
public:
    using Factor = std::pair<Indeterminate, std::uint32_t>;

    ExponentVector() = default;
    /// Accepts factors in any order; repeated indices are merged and zero
    /// exponents dropped.
    ExponentVector(std::initializer_list<Factor> factors);
    static ExponentVector from_factors(std::vector<Factor> factors);

    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] bool is_constant() const { return factors_.empty(); }

    /// Exponent of x_index (0 when absent).
    [[nodiscard]] std::uint32_t exponent(Indeterminate index) const;
    /// Number of factors counted with multiplicity.
    [[nodiscard]] std::uint64_t factor_count() const;
    /// Sum of index * exponent.
    [[nodiscard]] std::uint64_t weighted_degree() const;

    [[nodiscard]] ExponentVector operator*(const ExponentVector& rhs) const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    /// Graded lexicographic: weighted degree first, then the factor list.
    friend bool operator<(const ExponentVector& a, const ExponentVector& b);

private:
    std::vector<Factor> factors_;
};

enum class ScaleMode {
    uniform, // x_m -> alpha * x_m
    graded,  // x_m -> alpha^m * x_m
};

/// Multivariate polynomial over BigRational. Terms with zero coefficient are
/// never stored, so structural equality is polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, BigRational>;
    using Assignment = std::map<Indeterminate, BigRational>;

    Polynomial() = default;
    explicit Polynomial(const BigRational& constant);

    static Polynomial variable(Indeterminate index, std::uint32_t exponent = 1);
    static Polynomial term(ExponentVector monomial, const BigRational& coeff);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] BigRational constant_term() const;
    /// Coefficient of the given monomial (zero if absent).
    [[nodiscard]] BigRational coefficient(const ExponentVector& monomial) const;
    [[nodiscard]] std::set<Indeterminate> indeterminates() const;

    /// Full evaluation. Throws DomainError if an occurring indeterminate has
    /// no assigned value.
    [[nodiscard]] BigRational substitute(const Assignment& assignment) const;
    /// Evaluation with every indeterminate set to `value`.
    [[nodiscard]] BigRational substitute_all(const BigRational& value) const;
    /// Evaluation with x_m = base^m.
    [[nodiscard]] BigRational substitute_powers(const BigRational& base) const;
    /// Replaces the assigned indeterminates by values, keeping the others.
    [[nodiscard]] Polynomial partial_substitute(const Assignment& assignment) const;
    /// x_m -> factor(m) * x_m for every occurring m.
    [[nodiscard]] Polynomial rescale(const std::function<BigRational(Indeterminate)>& factor) const;
    [[nodiscard]] Polynomial scale_args(ScaleMode mode, const BigRational& alpha) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const BigRational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
    friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form such as `x1^3 + 1/4*x3`; `0` for the zero
    /// polynomial. The weight indeterminate prints as `x`.
    [[nodiscard]] std::string to_string() const;

private:
    void add_term(const ExponentVector& monomial, const BigRational& coeff);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace bellc

#endif // BELLC_POLYNOMIAL_HPP
