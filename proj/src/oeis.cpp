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

#include "bellc/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "bellc/central.hpp"
#include "bellc/classical.hpp"
#include "bellc/errors.hpp"

namespace bellc {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_triangle_kind(std::string_view kind)
{
    return kind == "stirling1" || kind == "stirling2" || kind == "central-t";
}

bool is_sequence_kind(std::string_view kind)
{
    return kind == "bell" || kind == "central-bell";
}

TriangleTable triangle_for(std::string_view kind, unsigned n_max)
{
    if (kind == "stirling1") {
        return stirling1_table(n_max);
    }
    if (kind == "stirling2") {
        return stirling2_table(n_max);
    }
    TriangleTable t(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            t.at(n, k) = central_T(n, k);
        }
    }
    return t;
}

} // namespace

BFile parse_bfile(std::istream& in, std::string id)
{
    BFile out{std::move(id), {}};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::istringstream fields{std::string(body)};
        std::string index_text;
        std::string value_text;
        std::string extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra)) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": expected 'n value', got '"
                             + std::string(body) + "'");
        }
        long long index = 0;
        BigRational value;
        try {
            const BigRational idx = BigRational::parse(index_text);
            value = BigRational::parse(value_text);
            if (!idx.is_integer() || !value.is_integer() || !idx.numerator().fits_slong_p()) {
                throw ParseError("non-integer field");
            }
            index = idx.numerator().get_si();
        } catch (const ParseError&) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": malformed integers in '"
                             + std::string(body) + "'");
        }
        if (!out.entries.empty() && index <= out.entries.back().first) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": index " + std::to_string(index)
                             + " does not increase");
        }
        out.entries.emplace_back(index, std::move(value));
    }
    return out;
}

BFile read_bfile(const std::filesystem::path& path, std::string id)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open b-file '" + path.string() + "'");
    }
    return parse_bfile(in, std::move(id));
}

Mapping parse_mapping(std::string_view text)
{
    if (text == "bell") {
        return Mapping{"bell"};
    }
    if (text == "stirling2-flat") {
        return Mapping{"stirling2"};
    }
    if (text == "stirling1-abs-flat") {
        return Mapping{"stirling1", false, true};
    }
    constexpr std::string_view prefix = "custom:";
    if (text.substr(0, prefix.size()) != prefix) {
        throw ParseError("unknown mapping '" + std::string(text) + "'");
    }
    std::string_view rest = text.substr(prefix.size());
    Mapping m;
    bool first = true;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        if (first) {
            if (!is_triangle_kind(item) && !is_sequence_kind(item)) {
                throw ParseError("unknown mapping kind '" + std::string(item) + "'");
            }
            m.kind = std::string(item);
            first = false;
        } else if (item == "even") {
            m.even = true;
        } else if (item == "abs") {
            m.absolute = true;
        } else if (item.substr(0, 6) == "scale=") {
            m.scale = BigRational::parse(item.substr(6));
        } else {
            throw ParseError("unknown mapping option '" + std::string(item) + "'");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return m;
}

std::vector<BigRational> mapping_values(const Mapping& mapping, unsigned n_max)
{
    std::vector<BigRational> out;
    auto emit = [&](unsigned n, BigRational v) {
        v *= mapping.scale.pow(n);
        out.push_back(mapping.absolute ? v.abs() : v);
    };
    if (is_sequence_kind(mapping.kind)) {
        for (unsigned n = 0; n <= n_max; ++n) {
            if (mapping.even && n % 2 != 0) {
                continue;
            }
            emit(n, mapping.kind == "bell" ? bell_eval(n, BigRational(1)) : central_bell_eval(n, BigRational(1)));
        }
        return out;
    }
    const TriangleTable t = triangle_for(mapping.kind, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            if (mapping.even && (n % 2 != 0 || k % 2 != 0)) {
                continue;
            }
            emit(n, t.at(n, k));
        }
    }
    return out;
}

VerificationReport oeis_check(const BFile& bfile, const Mapping& mapping, std::string_view mapping_text,
                              unsigned n_max)
{
    VerificationReport report{"oeis:" + bfile.id + ":" + std::string(mapping_text), n_max, 0, {}};
    const auto values = mapping_values(mapping, n_max);
    if (bfile.entries.empty()) {
        report.checks.push_back({bfile.id, 0, std::nullopt, false, "<empty b-file>", ""});
        return report;
    }
    const long long first = bfile.entries.front().first;
    for (const auto& [index, expected] : bfile.entries) {
        const auto pos = static_cast<std::size_t>(index - first);
        if (pos >= values.size()) {
            break;
        }
        report.checks.push_back({bfile.id, static_cast<unsigned>(index), std::nullopt, values[pos] == expected,
                                 values[pos].to_string(), expected.to_string()});
    }
    if (report.checks.empty()) {
        report.checks.push_back({bfile.id, 0, std::nullopt, false, "<no overlapping entries>", ""});
    }
    return report;
}

std::string bfile_name(std::string_view sequence_id)
{
    const bool ok = sequence_id.size() == 7 && sequence_id.front() == 'A'
        && std::all_of(sequence_id.begin() + 1, sequence_id.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (!ok) {
        throw ParseError("sequence id must look like A000110, got '" + std::string(sequence_id) + "'");
    }
    return "b" + std::string(sequence_id.substr(1)) + ".txt";
}

std::filesystem::path fetch_bfile(std::string_view sequence_id, const std::filesystem::path& cache_dir)
{
    const std::string name = bfile_name(sequence_id);
    const auto local = cache_dir / name;
    if (std::filesystem::exists(local)) {
        return local;
    }
    httplib::Client client("https://oeis.org");
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    const auto res = client.Get("/" + std::string(sequence_id) + "/" + name);
    if (!res) {
        throw NetworkError("fetching " + name + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw NetworkError("fetching " + name + " returned HTTP " + std::to_string(res->status));
    }
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    const auto partial = cache_dir / (name + ".part");
    {
        std::ofstream out(partial, std::ios::binary);
        out << res->body;
        if (!out) {
            throw NetworkError("cannot write cache file '" + partial.string() + "'");
        }
    }
    std::filesystem::rename(partial, local);
    return local;
}

} // namespace bellc
