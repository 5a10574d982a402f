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

// Brute-force oracles shared by the test binaries. None of these call into
// the library's computation routes.

#ifndef BELLC_TESTS_ORACLES_HPP
#define BELLC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// counts[k] = number of set partitions of {1..n} into k blocks, by walking
// every restricted growth string a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}).
inline std::vector<std::uint64_t> set_partitions_by_blocks(unsigned n)
{
    std::vector<std::uint64_t> counts(n + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<unsigned> a(n, 0);
    std::vector<unsigned> prefix_max(n, 0);
    while (true) {
        ++counts[prefix_max[n - 1] + 1];
        // Next restricted growth string.
        int i = static_cast<int>(n) - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (unsigned j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
    return counts;
}

// counts[k] = number of permutations of n elements with k cycles (|S1(n, k)|).
inline std::vector<std::uint64_t> permutations_by_cycles(unsigned n)
{
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        std::vector<bool> seen(n, false);
        unsigned cycles = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (!seen[i]) {
                ++cycles;
                for (unsigned j = i; !seen[j]; j = perm[j]) {
                    seen[j] = true;
                }
            }
        }
        ++counts[cycles];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

// Every dense tuple (i_1, ..., i_max_part) with i_m <= n / m, filtered by
// sum i_m == k (k < 0: any) and sum m i_m == n, optionally odd parts only.
// Returned as sparse maps part -> multiplicity.
inline std::vector<std::map<unsigned, unsigned>> exhaustive_multi_indices(unsigned n, int k, bool odd_only,
                                                                         unsigned max_part)
{
    std::vector<std::map<unsigned, unsigned>> out;
    std::vector<unsigned> i(max_part + 1, 0);
    while (true) {
        unsigned weight = 0;
        unsigned size = 0;
        bool parity_ok = true;
        for (unsigned m = 1; m <= max_part; ++m) {
            weight += m * i[m];
            size += i[m];
            if (odd_only && m % 2 == 0 && i[m] != 0) {
                parity_ok = false;
            }
        }
        if (parity_ok && weight == n && (k < 0 || size == static_cast<unsigned>(k))) {
            std::map<unsigned, unsigned> mu;
            for (unsigned m = 1; m <= max_part; ++m) {
                if (i[m] != 0) {
                    mu[m] = i[m];
                }
            }
            out.push_back(mu);
        }
        // Odometer increment.
        unsigned m = 1;
        while (m <= max_part && i[m] == n / m) {
            i[m] = 0;
            ++m;
        }
        if (m > max_part) {
            break;
        }
        ++i[m];
    }
    return out;
}

} // namespace oracle

#endif // BELLC_TESTS_ORACLES_HPP
