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

#ifndef BELLC_SERIALIZE_HPP
#define BELLC_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bellc/polynomial.hpp"
#include "bellc/report.hpp"
#include "bellc/triangle.hpp"

namespace bellc {

/// `[{"monomial": "1:2,3:1", "coeff": "5/4"}, ...]` in graded lexicographic
/// term order; the constant term uses monomial "". Throws DomainError if the
/// weight indeterminate occurs.
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
/// Inverse of the above. Throws ParseError on malformed input.
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

// Tables. CSV starts with `# kind=<kind>, n_max=<n>`; triangles then have one
// ragged row per n (k = 0..n), sequences a single row of values.
std::string triangle_to_csv(std::string_view kind, const TriangleTable& table);
std::string sequence_to_csv(std::string_view kind, const std::vector<BigRational>& values);
nlohmann::ordered_json triangle_to_json(std::string_view kind, const TriangleTable& table);
nlohmann::ordered_json sequence_to_json(std::string_view kind, const std::vector<BigRational>& values);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

} // namespace bellc

#endif // BELLC_SERIALIZE_HPP
