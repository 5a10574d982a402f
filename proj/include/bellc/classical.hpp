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

#ifndef BELLC_CLASSICAL_HPP
#define BELLC_CLASSICAL_HPP

#include <cstddef>

#include "bellc/polynomial.hpp"
#include "bellc/rational.hpp"
#include "bellc/triangle.hpp"

namespace bellc {

// Stirling numbers. The plain names extract EGF coefficients of
// (e^t - 1)^k / k! and (log(1 + t))^k / k!; the `_recurrence` variants read a
// shared memoized triangle built from the row recurrences.

BigRational stirling2(unsigned n, unsigned k);
BigRational stirling1(unsigned n, unsigned k);
BigRational stirling2_recurrence(unsigned n, unsigned k);
BigRational stirling1_recurrence(unsigned n, unsigned k);
TriangleTable stirling2_table(unsigned n_max);
TriangleTable stirling1_table(unsigned n_max);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) as a sum over
/// multi-indices with sum i_m = k and sum m i_m = n. Zero when n < k.
Polynomial incomplete_bell(unsigned n, unsigned k);
/// Same polynomial via n! [t^n] (sum_m x_m t^m / m!)^k / k!.
Polynomial incomplete_bell_series(unsigned n, unsigned k);

/// Closed form of B_{n,k}(x, 1, 0, ..., 0):
/// n!/k! * C(k, n-k) * x^{2k-n} / 2^{n-k} on k <= n <= 2k, zero elsewhere.
BigRational incomplete_bell_x10(unsigned n, unsigned k, const BigRational& x);

/// B_n(x_1, ..., x_n) = sum_k B_{n,k}.
Polynomial complete_bell(unsigned n);
/// Same polynomial via n! [t^n] exp(sum_i x_i t^i / i!).
Polynomial complete_bell_series(unsigned n);

/// B_n(x) = sum_k S2(n, k) x^k.
BigRational bell_eval(unsigned n, const BigRational& x);

/// Outcome of a truncated Dobinski-type summation.
struct DobinskiReport {
    BigRational partial_sum; // exact truncated sum
    std::size_t terms = 0;   // terms (or shells) summed
    double approx = 0.0;     // float estimate of the target value
};

/// e^{-x} sum_{k>=0} k^n x^k / k!, truncated once the terms are
/// non-increasing and the last one is below `tol`. `partial_sum` excludes the
/// e^{-x} factor; `approx` includes it. Throws DomainError for x < 0 or
/// tol <= 0 and NonConvergence when `max_terms` terms do not suffice.
DobinskiReport dobinski_classical(unsigned n, const BigRational& x, double tol, std::size_t max_terms);

} // namespace bellc

#endif // BELLC_CLASSICAL_HPP
