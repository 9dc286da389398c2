// Copyright 2026 The normtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "normtrace/report.hpp"
#include "normtrace/verify.hpp"

using namespace normtrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInvalid = 2;

int emit(const nlohmann::json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << render_text(report);
    return report.value("ok", false) ? kExitOk : kExitVerification;
}

int verify_paper(bool as_json) {
    nlohmann::json criteria = nlohmann::json::array();
    bool all = true;
    run_all_criteria([&](const CriterionResult& r) {
        all = all && r.pass();
        nlohmann::json claims = nlohmann::json::array();
        for (const auto& c : r.claims)
            claims.push_back({{"description", c.description}, {"pass", c.pass}, {"detail", c.detail}});
        criteria.push_back({{"number", r.number}, {"title", r.title}, {"pass", r.pass()}, {"seconds", r.seconds},
                            {"limit_seconds", r.limit_seconds}, {"claims", claims}});
        if (as_json)
            return;
        for (const auto& c : r.claims)
            std::printf("%s  [%d] %s%s%s\n", c.pass ? "PASS" : "FAIL", r.number, c.description.c_str(),
                        c.detail.empty() ? "" : " -- ", c.detail.c_str());
        std::printf("%s  criterion %d: %s (%.2f s, limit %.0f s)\n", r.pass() ? "PASS" : "FAIL", r.number,
                    r.title.c_str(), r.seconds, r.limit_seconds);
        std::fflush(stdout);
    });
    if (as_json)
        std::cout << nlohmann::json{{"command", "verify-paper"}, {"ok", all}, {"criteria", criteria}}.dump(2) << '\n';
    return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decreasing norm-trace evaluation codes: parameters, duals, hulls and trace repair"};
    app.require_subcommand(1);

    bool as_json = false;
    bool brute = false;
    bool witness = false;
    std::string spec_path;
    ReportOptions opts;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    auto with_spec = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "Code description file")->required()->check(CLI::ExistingFile);
        return sub;
    };
    auto* points = with_spec(app.add_subcommand("points", "List the curve points in canonical order"));
    auto* params = with_spec(app.add_subcommand("params", "Length, dimension and minimum distance"));
    params->add_flag("--brute", brute, "Cross-check the distance by exhaustive search");
    params->add_flag("--witness", witness, "Construct and verify a minimum-weight codeword");
    params->add_option("--budget", opts.budget, "Largest (q^r)^k enumerated by --brute");
    auto* gen = with_spec(app.add_subcommand("gen-matrix", "Print the generator matrix"));
    auto* dual = with_spec(app.add_subcommand("dual", "Dual code as a scaled complement code"));
    auto* hull_cmd = with_spec(app.add_subcommand("hull", "Hull after diagonal scaling"));
    auto* classify = with_spec(app.add_subcommand("classify", "Self-dual / self-orthogonal / LCD classification"));
    auto* sim = with_spec(app.add_subcommand("repair-sim", "Simulate single-erasure trace repair"));
    sim->add_option("--trials", opts.trials, "Number of random codewords");
    sim->add_option("--seed", opts.seed, "mt19937_64 seed for the random messages");
    auto* table = app.add_subcommand("table1", "Length-15 table over F_9");
    table->add_flag("--brute", brute, "Cross-check every row by exhaustive search");
    table->add_option("--budget", opts.budget, "Largest (q^r)^k enumerated by --brute");
    auto* verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");

    for (auto* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "Emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    opts.brute = brute;
    opts.witness = witness;

    try {
        if (verify->parsed())
            return verify_paper(as_json);
        if (table->parsed())
            return emit(report_table1(opts), as_json);

        const CodeSpec spec = load_spec(spec_path);
        if (points->parsed())
            return emit(report_points(spec), as_json);
        if (params->parsed())
            return emit(report_params(spec, opts), as_json);
        if (gen->parsed())
            return emit(report_gen_matrix(spec), as_json);
        if (dual->parsed())
            return emit(report_dual(spec), as_json);
        if (hull_cmd->parsed())
            return emit(report_hull(spec), as_json);
        if (classify->parsed())
            return emit(report_classify(spec), as_json);
        if (sim->parsed())
            return emit(report_repair_sim(spec, opts), as_json);
    } catch (const SpecError& e) {
        std::cerr << "invalid spec: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
