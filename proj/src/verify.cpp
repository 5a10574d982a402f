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

#include "bellc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "bellc/central.hpp"
#include "bellc/classical.hpp"
#include "bellc/errors.hpp"
#include "bellc/partitions.hpp"

namespace bellc {

namespace {

using Checks = std::vector<IdentityCheck>;
using SuiteFn = void (*)(unsigned n_max, const std::vector<BigRational>& probes, Checks& out);

void check(Checks& out, std::string id, unsigned n, std::optional<unsigned> k, const BigRational& lhs,
           const BigRational& rhs)
{
    out.push_back({std::move(id), n, k, lhs == rhs, lhs.to_string(), rhs.to_string()});
}

void check(Checks& out, std::string id, unsigned n, std::optional<unsigned> k, const Polynomial& lhs,
           const Polynomial& rhs)
{
    out.push_back({std::move(id), n, k, lhs == rhs, lhs.to_string(), rhs.to_string()});
}

void classical_suite(unsigned n_max, const std::vector<BigRational>& probes, Checks& out)
{
    const BigRational one(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const Polynomial bnk = incomplete_bell(n, k);
            const BigRational s2 = stirling2(n, k);
            check(out, "incomplete_routes", n, k, bnk, incomplete_bell_series(n, k));
            check(out, "incomplete_at_ones", n, k, bnk.substitute_all(one), s2);
            check(out, "s2_recurrence", n, k, s2, stirling2_recurrence(n, k));
            check(out, "s1_recurrence", n, k, stirling1(n, k), stirling1_recurrence(n, k));
        }
        const Polynomial bn = complete_bell(n);
        check(out, "complete_routes", n, std::nullopt, bn, complete_bell_series(n));
        for (const auto& x : probes) {
            check(out, "complete_at_x", n, std::nullopt, bn.substitute_all(x), bell_eval(n, x));
        }
    }
    // Closed form of B_{n,k}(x, 1, 0, ...) on its band k <= n <= 2k.
    for (unsigned k = 0; k <= n_max; ++k) {
        for (unsigned n = k; n <= std::min(2 * k, n_max); ++n) {
            const Polynomial bnk = incomplete_bell(n, k);
            for (const auto& x : probes) {
                Polynomial::Assignment args{{1, x}, {2, BigRational(1)}};
                for (unsigned m = 3; m + k <= n + 1; ++m) {
                    args.emplace(m, BigRational{});
                }
                check(out, "incomplete_x10", n, k, incomplete_bell_x10(n, k, x), bnk.substitute(args));
            }
        }
    }
}

void homogeneity_suite(unsigned n_max, const std::vector<BigRational>& probes, Checks& out)
{
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const Polynomial bnk = incomplete_bell(n, k);
            const Polynomial tnk = central_incomplete(n, k).value;
            for (const auto& a : probes) {
                check(out, "uniform_scaling", n, k, bnk.scale_args(ScaleMode::uniform, a), bnk * a.pow(k));
                check(out, "graded_scaling", n, k, bnk.scale_args(ScaleMode::graded, a), bnk * a.pow(n));
                check(out, "central_uniform_scaling", n, k, tnk.scale_args(ScaleMode::uniform, a), tnk * a.pow(k));
            }
        }
    }
}

void central_suite(unsigned n_max, const std::vector<BigRational>& probes, Checks& out)
{
    const BigRational one(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const BigRational t = central_T(n, k);
            const Polynomial tnk = central_incomplete(n, k).value;
            check(out, "central_T_routes", n, k, t, central_T_series(n, k));
            check(out, "central_incomplete_at_ones", n, k, tnk.substitute_all(one), t);
            check(out, "central_incomplete_routes", n, k, tnk, central_incomplete_series(n, k));
            if (!probes.empty()) {
                const auto& x = probes.front();
                Polynomial::Assignment args{{1, x}, {2, one}};
                for (unsigned m = 3; m + k <= n + 1; ++m) {
                    args.emplace(m, BigRational{});
                }
                check(out, "central_incomplete_x10", n, k, central_incomplete_x10(n, k, x), tnk.substitute(args));
            }
        }
        Polynomial by_T;
        for (unsigned k = 0; k <= n; ++k) {
            by_T += Polynomial::variable(kWeightIndeterminate, k) * central_T(n, k);
        }
        check(out, "central_bell_routes", n, std::nullopt, by_T, central_bell_series_symbolic(n));
        for (const auto& x : probes) {
            check(out, "central_bell_value_routes", n, std::nullopt, central_bell_eval(n, x),
                  central_bell_series(n, x));
        }
        check(out, "central_complete_routes", n, std::nullopt, central_complete_symbolic(n).value,
              central_complete_series(n, std::nullopt));
        check(out, "central_complete_unit_weight", n, std::nullopt, central_complete(n, one).value,
              central_complete_series(n, one));
    }
}

void reduction_suite(unsigned n_max, const std::vector<BigRational>& /*probes*/, Checks& out)
{
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = n % 2; k <= n; k += 2) {
            check(out, "odd_argument_reduction", n, k, central_incomplete(n, k).value,
                  central_incomplete_via_bell(n, k));
        }
    }
}

void powers_suite(unsigned n_max, const std::vector<BigRational>& probes, Checks& out)
{
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n_max; ++k) {
            if (k > n) {
                for (const auto& x : probes) {
                    check(out, "alternating_sum_below", n, k, central_alternating_sum(n, k, x), BigRational{});
                }
                continue;
            }
            const Polynomial tnk = central_incomplete(n, k).value;
            const BigRational at_ones = tnk.substitute_all(BigRational(1));
            for (const auto& x : probes) {
                const BigRational powers = tnk.substitute_powers(x);
                check(out, "alternating_sum_powers", n, k, central_alternating_sum(n, k, x), powers);
                check(out, "powers_scaling", n, k, powers, x.pow(n) * at_ones);
            }
        }
    }
}

void odd_parts_suite(unsigned n_max, const std::vector<BigRational>& /*probes*/, Checks& out)
{
    for (unsigned n = 0; n <= n_max; ++n) {
        Polynomial by_k;
        for (unsigned k = 0; k <= n; ++k) {
            by_k += central_incomplete(n, k).value;
        }
        if (n % 2 == 1) {
            check(out, "odd_parts_formula", n, std::nullopt, central_complete_odd_formula(n), by_k);
        } else {
            check(out, "odd_parts_even", n, std::nullopt, central_complete_odd_parts_sum(n), by_k);
        }
    }
}

void identity_suite(unsigned n_max, const std::vector<BigRational>& probes, Checks& out)
{
    auto checks = central_bell_identity_suite(n_max, probes);
    out.insert(out.end(), std::make_move_iterator(checks.begin()), std::make_move_iterator(checks.end()));
}

void factorial_argument_suite(unsigned n_max, const std::vector<BigRational>& /*probes*/, Checks& out)
{
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            check(out, "factorial_arguments", n, k, factorial_argument_lhs(n, k), factorial_argument_rhs(n, k));
        }
    }
}

void parity_suite(unsigned n_max, const std::vector<BigRational>& /*probes*/, Checks& out)
{
    const BigRational zero;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = (n + 1) % 2; k <= n; k += 2) {
            check(out, "parity_T", n, k, central_T(n, k), zero);
            check(out, "parity_T_series", n, k, central_T_series(n, k), zero);
            check(out, "parity_poly", n, k, central_incomplete(n, k).value, Polynomial{});
            check(out, "parity_indices", n, k,
                  BigRational(count_multi_indices(n, k, PartsMode::odd_only, n - k + 1)), zero);
        }
    }
}

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"classical", &classical_suite}, {"central", &central_suite}, {"lemma21", &reduction_suite},
        {"thm22", &powers_suite},         {"thm24", &odd_parts_suite},     {"thm25", &identity_suite},
        {"thm27", &factorial_argument_suite},         {"parity", &parity_suite},   {"homogeneity", &homogeneity_suite},
    };
    return suites;
}

} // namespace

std::vector<BigRational> probe_values(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    std::vector<BigRational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Plain modular reduction keeps the draw identical across standard
        // libraries.
        const auto p = static_cast<long long>(rng() % 19) - 9;
        const auto q = static_cast<long long>(rng() % 9) + 1;
        out.push_back(BigRational::make(p, q));
    }
    return out;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) {
            v.push_back(name);
        }
        v.emplace_back("all");
        return v;
    }();
    return names;
}

VerificationReport run_suite(std::string_view suite, unsigned n_max, std::uint64_t seed)
{
    VerificationReport report{std::string(suite), n_max, seed, {}};
    const auto probes = probe_values(seed, kProbesPerCell);
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite == "all" || suite == name) {
            fn(n_max, probes, report.checks);
            found = true;
        }
    }
    if (!found) {
        throw DomainError("unknown suite '" + std::string(suite) + "'");
    }
    return report;
}

} // namespace bellc
