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

#include "bellc/serialize.hpp"

#include <charconv>
#include <sstream>

#include "bellc/errors.hpp"

namespace bellc {

namespace {

std::string monomial_text(const ExponentVector& mono)
{
    std::string out;
    for (const auto& [index, exp] : mono.factors()) {
        if (index == kWeightIndeterminate) {
            throw DomainError("the weight indeterminate has no JSON form; substitute it first");
        }
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(index) + ':' + std::to_string(exp);
    }
    return out;
}

std::uint32_t parse_u32(std::string_view s, std::string_view what)
{
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("bad " + std::string(what) + " in monomial: '" + std::string(s) + "'");
    }
    return v;
}

ExponentVector monomial_from_text(std::string_view text)
{
    std::vector<ExponentVector::Factor> factors;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view pair = text.substr(0, comma);
        const auto colon = pair.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("monomial factor without ':' : '" + std::string(pair) + "'");
        }
        const auto index = parse_u32(pair.substr(0, colon), "index");
        const auto exp = parse_u32(pair.substr(colon + 1), "exponent");
        if (index == 0 || exp == 0) {
            throw ParseError("monomial indices and exponents must be positive");
        }
        factors.emplace_back(index, exp);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return ExponentVector::from_factors(std::move(factors));
}

std::string csv_header(std::string_view kind, std::size_t n_max)
{
    return "# kind=" + std::string(kind) + ", n_max=" + std::to_string(n_max) + "\n";
}

std::string csv_row(const std::vector<BigRational>& values)
{
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += values[i].to_string();
    }
    return line + "\n";
}

nlohmann::ordered_json string_array(const std::vector<BigRational>& values)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : values) {
        arr.push_back(v.to_string());
    }
    return arr;
}

} // namespace

nlohmann::ordered_json polynomial_to_json(const Polynomial& p)
{
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        terms.push_back({{"monomial", monomial_text(mono)}, {"coeff", coeff.to_string()}});
    }
    return terms;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j)
{
    if (!j.is_array()) {
        throw ParseError("polynomial JSON must be an array of terms");
    }
    Polynomial p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff") || !t["monomial"].is_string()
            || !t["coeff"].is_string()) {
            throw ParseError("polynomial term must be {\"monomial\": str, \"coeff\": str}");
        }
        p += Polynomial::term(monomial_from_text(t["monomial"].get<std::string>()),
                              BigRational::parse(t["coeff"].get<std::string>()));
    }
    return p;
}

std::string triangle_to_csv(std::string_view kind, const TriangleTable& table)
{
    std::string out = csv_header(kind, table.n_max());
    for (const auto& row : table.rows()) {
        out += csv_row(row);
    }
    return out;
}

std::string sequence_to_csv(std::string_view kind, const std::vector<BigRational>& values)
{
    return csv_header(kind, values.empty() ? 0 : values.size() - 1) + csv_row(values);
}

nlohmann::ordered_json triangle_to_json(std::string_view kind, const TriangleTable& table)
{
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows()) {
        rows.push_back(string_array(row));
    }
    return {{"kind", kind}, {"n_max", table.n_max()}, {"rows", rows}};
}

nlohmann::ordered_json sequence_to_json(std::string_view kind, const std::vector<BigRational>& values)
{
    return {{"kind", kind}, {"n_max", values.empty() ? 0 : values.size() - 1}, {"values", string_array(values)}};
}

nlohmann::ordered_json report_to_json(const VerificationReport& report)
{
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"id", c.id},
                          {"n", c.n},
                          {"k", c.k ? nlohmann::ordered_json(*c.k) : nlohmann::ordered_json(nullptr)},
                          {"status", c.pass ? "pass" : "fail"},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs}});
    }
    return {{"suite", report.suite}, {"n_max", report.n_max}, {"seed", report.seed}, {"checks", checks}};
}

} // namespace bellc
