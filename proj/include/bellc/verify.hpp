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

#ifndef BELLC_VERIFY_HPP
#define BELLC_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bellc/rational.hpp"
#include "bellc/report.hpp"

namespace bellc {

// Random probes drawn per identity cell.
inline constexpr std::size_t kProbesPerCell = 20;

/// Deterministic probe values p/q with |p| <= 9 and 1 <= q <= 9, drawn from a
/// 64-bit Mersenne Twister seeded with `seed`.
std::vector<BigRational> probe_values(std::uint64_t seed, std::size_t count);

/// Suite names accepted by run_suite, `all` last.
const std::vector<std::string>& suite_names();

/// Runs one identity suite (or all of them) for n <= n_max. Throws
/// DomainError on an unknown suite name.
VerificationReport run_suite(std::string_view suite, unsigned n_max, std::uint64_t seed);

} // namespace bellc

#endif // BELLC_VERIFY_HPP
