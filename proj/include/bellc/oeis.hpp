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

#ifndef BELLC_OEIS_HPP
#define BELLC_OEIS_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellc/rational.hpp"
#include "bellc/report.hpp"

namespace bellc {

/// OEIS b-file: `n a(n)` lines, `#` comments and blank lines ignored.
struct BFile {
    std::string id;
    std::vector<std::pair<long long, BigRational>> entries; // indices strictly increasing, integer values
};

/// Throws ParseError on a malformed line, a non-integer value or a
/// non-increasing index.
BFile parse_bfile(std::istream& in, std::string id);
BFile read_bfile(const std::filesystem::path& path, std::string id);

/// How computed values are linearized before comparison with a b-file.
///   bell               B_n(1), n = 0..n_max
///   stirling2-flat     S2(n, k) row-major, 0 <= k <= n <= n_max
///   stirling1-abs-flat |S1(n, k)| row-major
///   custom:<kind>[,even][,abs][,scale=<p/q>]
///     kind in stirling1, stirling2, central-t (triangles) or bell,
///     central-bell (sequences at x = 1); `even` keeps only entries with even
///     n (and even k); `scale=r` multiplies row n by r^n; `abs` takes
///     absolute values.
struct Mapping {
    std::string kind;
    bool even = false;
    bool absolute = false;
    BigRational scale{1};
};

/// Throws ParseError on an unknown mapping.
Mapping parse_mapping(std::string_view text);
/// Flattened values for rows n = 0..n_max.
std::vector<BigRational> mapping_values(const Mapping& mapping, unsigned n_max);

/// Compares b-file entry i (position = index - first index) with the mapped
/// value at that position, for every position the mapping covers. Fails if
/// nothing was compared.
VerificationReport oeis_check(const BFile& bfile, const Mapping& mapping, std::string_view mapping_text,
                              unsigned n_max);

/// `A000110` -> `b000110.txt`. Throws ParseError on a malformed id.
std::string bfile_name(std::string_view sequence_id);

/// Downloads the b-file from oeis.org into cache_dir unless it is already
/// cached there; returns the local path. Throws NetworkError.
std::filesystem::path fetch_bfile(std::string_view sequence_id, const std::filesystem::path& cache_dir);

} // namespace bellc

#endif // BELLC_OEIS_HPP
