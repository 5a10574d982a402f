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

#ifndef BELLC_REPORT_HPP
#define BELLC_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bellc {

/// One evaluated identity: both sides rendered as exact text.
struct IdentityCheck {
    std::string id;
    unsigned n = 0;
    std::optional<unsigned> k;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string suite;
    unsigned n_max = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityCheck> checks;

    [[nodiscard]] bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
    }
};

} // namespace bellc

#endif // BELLC_REPORT_HPP
