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

#include "bellc/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "bellc/central.hpp"
#include "bellc/classical.hpp"
#include "bellc/errors.hpp"
#include "bellc/oeis.hpp"
#include "bellc/serialize.hpp"
#include "bellc/verify.hpp"

namespace bellc::cli {

namespace {

// Raised for parameter combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableOptions {
    std::string kind;
    unsigned n_max = 0;
    std::string format = "json";
};

struct EvalOptions {
    std::string target;
    unsigned n = 0;
    std::optional<unsigned> k;
    std::optional<std::string> x;
    std::vector<std::string> args;
};

struct VerifyOptions {
    std::string suite = "all";
    unsigned n_max = 0;
    std::uint64_t seed = 0;
};

struct DobinskiOptions {
    std::string target;
    unsigned n = 0;
    std::string x;
    double tol = 1e-10;
    std::size_t limit = 200;
};

struct OeisOptions {
    std::string id;
    std::string source;
    std::string mapping;
    unsigned n_max = 0;
};

BigRational parse_rational_flag(const std::string& text, const char* flag)
{
    try {
        return BigRational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int cmd_table(const TableOptions& opt, std::ostream& out)
{
    const bool csv = opt.format == "csv";
    if (opt.kind == "bell" || opt.kind == "central-bell") {
        std::vector<BigRational> values;
        for (unsigned n = 0; n <= opt.n_max; ++n) {
            values.push_back(opt.kind == "bell" ? bell_eval(n, BigRational(1)) : central_bell_eval(n, BigRational(1)));
        }
        out << (csv ? sequence_to_csv(opt.kind, values) : sequence_to_json(opt.kind, values).dump(2) + "\n");
        return kExitOk;
    }
    TriangleTable table(opt.n_max);
    if (opt.kind == "stirling1") {
        table = stirling1_table(opt.n_max);
    } else if (opt.kind == "stirling2") {
        table = stirling2_table(opt.n_max);
    } else {
        for (unsigned n = 0; n <= opt.n_max; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                table.at(n, k) = central_T(n, k);
            }
        }
    }
    out << (csv ? triangle_to_csv(opt.kind, table) : triangle_to_json(opt.kind, table).dump(2) + "\n");
    return kExitOk;
}

void print_polynomial_or_value(const Polynomial& p, const std::vector<std::string>& args, std::ostream& out)
{
    if (!args.empty()) {
        Polynomial::Assignment assignment;
        for (std::size_t i = 0; i < args.size(); ++i) {
            assignment.emplace(static_cast<Indeterminate>(i + 1), parse_rational_flag(args[i], "--args"));
        }
        try {
            out << p.substitute(assignment).to_string() << "\n";
        } catch (const DomainError& e) {
            throw UsageError(std::string("--args: ") + e.what());
        }
        return;
    }
    if (p.is_constant()) {
        out << p.constant_term().to_string() << "\n";
        return;
    }
    out << polynomial_to_json(p).dump() << "\n";
}

int cmd_eval(const EvalOptions& opt, std::ostream& out)
{
    const bool incomplete = opt.target == "incomplete" || opt.target == "central-incomplete";
    if (incomplete && !opt.k) {
        throw UsageError("eval " + opt.target + " requires --k");
    }
    if (!incomplete && opt.k) {
        throw UsageError("--k is not used by eval " + opt.target);
    }
    if (incomplete && opt.x) {
        throw UsageError("--x is not used by eval " + opt.target + "; pass argument values with --args");
    }
    if ((opt.target == "bell" || opt.target == "central-bell") && !opt.args.empty()) {
        throw UsageError("--args is not used by eval " + opt.target);
    }
    const BigRational x = opt.x ? parse_rational_flag(*opt.x, "--x") : BigRational(1);

    if (opt.target == "bell") {
        out << bell_eval(opt.n, x).to_string() << "\n";
    } else if (opt.target == "central-bell") {
        out << central_bell_eval(opt.n, x).to_string() << "\n";
    } else if (opt.target == "incomplete") {
        print_polynomial_or_value(incomplete_bell(opt.n, *opt.k), opt.args, out);
    } else if (opt.target == "central-incomplete") {
        print_polynomial_or_value(central_incomplete(opt.n, *opt.k).value, opt.args, out);
    } else {
        print_polynomial_or_value(central_complete(opt.n, x).value, opt.args, out);
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out)
{
    const auto report = run_suite(opt.suite, opt.n_max, opt.seed);
    out << report_to_json(report).dump(2) << "\n";
    return report.passed() ? kExitOk : kExitFailure;
}

int cmd_dobinski(const DobinskiOptions& opt, std::ostream& out, std::ostream& err)
{
    const BigRational x = parse_rational_flag(opt.x, "--x");
    if (x.sign() < 0) {
        throw UsageError("--x must be >= 0 for Dobinski summation");
    }
    if (!(opt.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    const bool central = opt.target == "central";
    DobinskiReport report;
    try {
        report = central ? dobinski_central(opt.n, x, opt.tol, opt.limit)
                         : dobinski_classical(opt.n, x, opt.tol, opt.limit);
    } catch (const NonConvergence& e) {
        err << "bellc: " << e.what() << "\n";
        return kExitNonConvergence;
    }
    const BigRational exact = central ? central_bell_eval(opt.n, x) : bell_eval(opt.n, x);
    const double abs_error = std::abs(report.approx - exact.to_double());
    const bool within = abs_error < opt.tol;
    nlohmann::ordered_json j{{"target", opt.target},
                             {"n", opt.n},
                             {"x", x.to_string()},
                             {"tol", opt.tol},
                             {"terms", report.terms},
                             {"approx", report.approx},
                             {"exact", exact.to_string()},
                             {"abs_error", abs_error},
                             {"within_tol", within}};
    out << j.dump(2) << "\n";
    return within ? kExitOk : kExitFailure;
}

int cmd_oeis(const OeisOptions& opt, std::ostream& out, std::ostream& err)
{
    Mapping mapping;
    try {
        mapping = parse_mapping(opt.mapping);
        (void)bfile_name(opt.id);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    std::filesystem::path path = opt.source;
    if (opt.source == "http") {
        const char* env = std::getenv("BELLC_CACHE_DIR");
        const std::filesystem::path cache = env != nullptr && *env != '\0' ? env : ".bellc-cache";
        try {
            path = fetch_bfile(opt.id, cache);
        } catch (const NetworkError& e) {
            err << "bellc: " << e.what() << "\n";
            return kExitNetwork;
        }
    }
    BFile bfile;
    try {
        bfile = read_bfile(path, opt.id);
    } catch (const ParseError& e) {
        err << "bellc: " << e.what() << "\n";
        return kExitParse;
    }
    const auto report = oeis_check(bfile, mapping, opt.mapping, opt.n_max);
    out << report_to_json(report).dump(2) << "\n";
    return report.passed() ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Bell, Stirling and central factorial computations", "bellc"};
    app.require_subcommand(1);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Tabulate a triangle or sequence");
    table_cmd->add_option("kind", table.kind, "stirling1, stirling2, central-t, bell or central-bell")
        ->required()
        ->check(CLI::IsMember({"stirling1", "stirling2", "central-t", "bell", "central-bell"}));
    table_cmd->add_option("--n-max", table.n_max, "Largest row index")->required();
    table_cmd->add_option("--format", table.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a single polynomial or value");
    eval_cmd->add_option("target", eval.target, "bell, central-bell, incomplete, central-incomplete, central-complete")
        ->required()
        ->check(CLI::IsMember({"bell", "central-bell", "incomplete", "central-incomplete", "central-complete"}));
    eval_cmd->add_option("--n", eval.n)->required();
    eval_cmd->add_option("--k", eval.k);
    eval_cmd->add_option("--x", eval.x, "Rational p/q (variable or weight)");
    eval_cmd->add_option("--args", eval.args, "Comma-separated values for x1, x2, ...")->delimiter(',');

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
    verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--n-max", verify.n_max)->required();
    verify_cmd->add_option("--seed", verify.seed);

    DobinskiOptions dob;
    auto* dob_cmd = app.add_subcommand("dobinski", "Truncated Dobinski-type summation");
    dob_cmd->add_option("target", dob.target)->required()->check(CLI::IsMember({"classical", "central"}));
    dob_cmd->add_option("--n", dob.n)->required();
    dob_cmd->add_option("--x", dob.x)->required();
    dob_cmd->add_option("--tol", dob.tol);
    dob_cmd->add_option("--limit", dob.limit);

    OeisOptions oeis;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare against an OEIS b-file");
    oeis_cmd->add_option("--id", oeis.id)->required();
    oeis_cmd->add_option("--source", oeis.source, "b-file path, or 'http'")->required();
    oeis_cmd->add_option("--mapping", oeis.mapping)->required();
    oeis_cmd->add_option("--n-max", oeis.n_max)->required();

    std::vector<const char*> argv{"bellc"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table_cmd) {
            return cmd_table(table, out);
        }
        if (*eval_cmd) {
            return cmd_eval(eval, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        if (*dob_cmd) {
            return cmd_dobinski(dob, out, err);
        }
        return cmd_oeis(oeis, out, err);
    } catch (const UsageError& e) {
        err << "bellc: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace bellc::cli
