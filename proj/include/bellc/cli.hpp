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

#ifndef BELLC_CLI_HPP
#define BELLC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bellc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a check or comparison failed
inline constexpr int kExitUsage = 2;        // bad flags or inconsistent parameters
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitNetwork = 4;
inline constexpr int kExitParse = 5;

/// Runs `bellc <args...>` (program name excluded), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bellc::cli

#endif // BELLC_CLI_HPP
