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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "bellc/central.hpp"
#include "bellc/classical.hpp"
#include "bellc/errors.hpp"
#include "bellc/serialize.hpp"

using bellc::BigRational;
using bellc::Polynomial;
using nlohmann::ordered_json;

namespace {

BigRational q(long long p, long long d = 1)
{
    return BigRational::make(p, d);
}

Polynomial random_polynomial(std::mt19937_64& rng)
{
    Polynomial p;
    const int terms = static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        Polynomial m(q(static_cast<long long>(rng() % 19) - 9, static_cast<long long>(rng() % 9) + 1));
        const int factors = static_cast<int>(rng() % 4);
        for (int f = 0; f < factors; ++f) {
            m = m * Polynomial::variable(static_cast<bellc::Indeterminate>(1 + rng() % 7),
                                         static_cast<std::uint32_t>(1 + rng() % 3));
        }
        p += m;
    }
    return p;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.starts_with("#")) {
            continue;
        }
        std::vector<std::string> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("polynomial JSON form")
{
    const Polynomial p = Polynomial::variable(1) * Polynomial::variable(3) + Polynomial(q(5, 4));
    const auto j = bellc::polynomial_to_json(p);
    CHECK(j.dump() == R"([{"monomial":"","coeff":"5/4"},{"monomial":"1:1,3:1","coeff":"1"}])");
    CHECK(bellc::polynomial_to_json(Polynomial()).dump() == "[]");
    CHECK(bellc::polynomial_from_json(j) == p);
}

TEST_CASE("polynomial JSON round trip")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_polynomial(rng);
        const auto text = bellc::polynomial_to_json(p).dump();
        CHECK(bellc::polynomial_from_json(ordered_json::parse(text)) == p);
    }
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const auto b = bellc::incomplete_bell(n, k);
            CHECK(bellc::polynomial_from_json(bellc::polynomial_to_json(b)) == b);
        }
    }
}

TEST_CASE("polynomial JSON rejects the weight indeterminate and bad input")
{
    CHECK_THROWS_AS(bellc::polynomial_to_json(bellc::central_complete_symbolic(2).value), bellc::DomainError);
    for (const char* bad : {R"({"monomial":"1:1","coeff":"1"})", R"([{"monomial":"1:1"}])",
                            R"([{"monomial":"1-1","coeff":"1"}])", R"([{"monomial":"0:1","coeff":"1"}])",
                            R"([{"monomial":"1:0","coeff":"1"}])", R"([{"monomial":"1:1","coeff":"x"}])",
                            R"([{"monomial":1,"coeff":"1"}])"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(bellc::polynomial_from_json(ordered_json::parse(bad)), bellc::ParseError);
    }
}

TEST_CASE("triangle CSV layout")
{
    bellc::TriangleTable t(2);
    t.at(0, 0) = q(1);
    t.at(1, 1) = q(1);
    t.at(2, 1) = q(1, 4);
    t.at(2, 2) = q(1);
    CHECK(bellc::triangle_to_csv("demo", t) == "# kind=demo, n_max=2\n1\n0,1\n0,1/4,1\n");
    const auto j = bellc::triangle_to_json("demo", t);
    CHECK(j.dump() == R"({"kind":"demo","n_max":2,"rows":[["1"],["0","1"],["0","1/4","1"]]})");
}

TEST_CASE("sequence CSV and JSON")
{
    const std::vector<BigRational> v{q(1), q(1), q(2), q(5)};
    CHECK(bellc::sequence_to_csv("bell", v) == "# kind=bell, n_max=3\n1,1,2,5\n");
    CHECK(bellc::sequence_to_json("bell", v).dump() == R"({"kind":"bell","n_max":3,"values":["1","1","2","5"]})");
}

TEST_CASE("CSV and JSON carry the same values")
{
    for (const auto& table : {bellc::stirling1_table(9), bellc::stirling2_table(9)}) {
        const auto rows = csv_rows(bellc::triangle_to_csv("t", table));
        const auto j = bellc::triangle_to_json("t", table);
        REQUIRE(rows.size() == j["rows"].size());
        for (std::size_t n = 0; n < rows.size(); ++n) {
            REQUIRE(rows[n].size() == j["rows"][n].size());
            for (std::size_t k = 0; k < rows[n].size(); ++k) {
                CHECK(rows[n][k] == j["rows"][n][k].get<std::string>());
                CHECK(BigRational::parse(rows[n][k]) == table.at(n, k));
            }
        }
    }
}

TEST_CASE("report JSON")
{
    bellc::VerificationReport r{"demo", 3, 7, {}};
    r.checks.push_back({"a", 2, std::nullopt, true, "1", "1"});
    r.checks.push_back({"b", 3, 1u, false, "1/2", "1"});
    const auto j = bellc::report_to_json(r);
    CHECK(j.dump() == R"({"suite":"demo","n_max":3,"seed":7,"checks":[)"
                      R"({"id":"a","n":2,"k":null,"status":"pass","lhs":"1","rhs":"1"},)"
                      R"({"id":"b","n":3,"k":1,"status":"fail","lhs":"1/2","rhs":"1"}]})");
}
