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

#ifndef BELLC_CENTRAL_HPP
#define BELLC_CENTRAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bellc/classical.hpp"
#include "bellc/polynomial.hpp"
#include "bellc/rational.hpp"
#include "bellc/report.hpp"

namespace bellc {

/// Central factorial number of the second kind,
/// T(n, k) = 1/k! sum_j C(k, j) (-1)^{k-j} (j - k/2)^n.
/// The alternating sum itself vanishes for n < k and for odd n - k.
BigRational central_T(unsigned n, unsigned k);
/// Same number as n! [t^n] (e^{t/2} - e^{-t/2})^k / k!.
BigRational central_T_series(unsigned n, unsigned k);

/// B_n^(c)(x) = sum_k T(n, k) x^k.
BigRational central_bell_eval(unsigned n, const BigRational& x);
/// n! [t^n] exp(x (e^{t/2} - e^{-t/2})) for a numeric x.
BigRational central_bell_series(unsigned n, const BigRational& x);
/// The same coefficient with x kept symbolic (the weight indeterminate).
Polynomial central_bell_series_symbolic(unsigned n);

/// Double sum over l, j >= 0 of C(l+j, j) (-1)^j (l/2 - j/2)^n x^{l+j} / (l+j)!,
/// grouped into shells s = l + j that are summed exactly. Stops once the
/// shell magnitude bound (2x)^s (s/2)^n / s! is non-increasing and below
/// `tol`. Throws DomainError for x < 0 or tol <= 0 and NonConvergence when
/// `max_shell` shells do not suffice.
DobinskiReport dobinski_central(unsigned n, const BigRational& x, double tol, std::size_t max_shell);

/// T_{n,k}(x_1, ..., x_{n-k+1}) together with its indices.
struct CentralIncompleteResult {
    unsigned n = 0;
    unsigned k = 0;
    Polynomial value;
};

/// Partition sum over odd parts m with weights x_m / (2^{m-1} m!).
/// Even-indexed arguments never occur. Zero when n < k or n - k is odd.
CentralIncompleteResult central_incomplete(unsigned n, unsigned k);
/// Same polynomial as n! [t^n] (central kernel)^k / k!.
Polynomial central_incomplete_series(unsigned n, unsigned k);
/// B_{n,k}(x_1, 0, x_3/2^2, 0, ..., x_{n-k+1}/2^{n-k}). Requires n >= k and
/// n - k even; throws DomainError otherwise.
Polynomial central_incomplete_via_bell(unsigned n, unsigned k);

/// x^n/k! sum_l C(k, l) (-1)^{k-l} (l - k/2)^n, for every n, k.
BigRational central_alternating_sum(unsigned n, unsigned k, const BigRational& x);
/// T_{n,k}(x, x^2, ..., x^{n-k+1}). Computes the alternating sum and the
/// substituted partition sum and throws InvariantViolation if they differ.
BigRational central_incomplete_powers(unsigned n, unsigned k, const BigRational& x);
/// T_{n,k}(x, 1, 0, ..., 0) = x^k when n == k, otherwise 0.
BigRational central_incomplete_x10(unsigned n, unsigned k, const BigRational& x);

/// B_n^(c)(x | x_1, ..., x_n) with either a numeric weight x or a symbolic
/// one (the weight indeterminate, index 0).
struct CentralCompleteResult {
    unsigned n = 0;
    std::optional<BigRational> weight; // nullopt: symbolic
    Polynomial value;
};

CentralCompleteResult central_complete(unsigned n, const BigRational& weight);
CentralCompleteResult central_complete_symbolic(unsigned n);
/// n! [t^n] exp(x * central kernel); symbolic weight when nullopt.
Polynomial central_complete_series(unsigned n, const std::optional<BigRational>& weight);

/// sum over odd-part multi-indices of weight n (any size) of
/// n!/prod(m_j!) prod (x_j / (j! 2^{j-1}))^{m_j}. Defined for every n.
Polynomial central_complete_odd_parts_sum(unsigned n);
/// The odd-n statement of the above; throws DomainError for even n.
Polynomial central_complete_odd_formula(unsigned n);

/// T_{n,k}(0!, 1!, ..., (n-k)!) via the partition sum.
BigRational factorial_argument_lhs(unsigned n, unsigned k);
/// n! sum_{l=k}^{n} S1(l, k)/l! C(n-1, l-1) (1/2)^{n-l}, where the l = 0 term
/// contributes [n == 0] (the t^0 coefficient of (t/(1 - t/2))^0).
BigRational factorial_argument_rhs(unsigned n, unsigned k);
/// Both sides above; requires n >= k. Throws InvariantViolation if they
/// differ.
BigRational central_factorial_argument(unsigned n, unsigned k);

/// For each n <= n_max and each probe x, checks
///   weighted_incomplete_sum  sum_k x^k T_{n,k}(1, ..., 1) = B_n^(c)(x)
///   complete_equal_args      B_n^(c)(1 | x, ..., x) = B_n^(c)(x)
///   incomplete_equal_args    T_{n,k}(x, ..., x) = x^k T_{n,k}(1, ..., 1) for every k
///   complete_unit_args       B_n^(c)(x | 1, ..., 1) = B_n^(c)(x)
/// plus, once per n, central_bell_row_sum: B_n^(c)(1 | 1, ..., 1) = sum_k T(n, k).
/// Failures are reported in the returned checks, never thrown.
std::vector<IdentityCheck> central_bell_identity_suite(unsigned n_max, std::span<const BigRational> probes);

} // namespace bellc

#endif // BELLC_CENTRAL_HPP
