/*
   Copyright 2026 The lmrep authors

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

#include <CLI11.hpp>
#include <iostream>

#include "lmrep/cli_commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Latimer-MacDuffee ideal classes and near-companion representatives "
                 "over Z and F_p[t]"};
    app.require_subcommand(1);

    lmrep::JobConfig config;
    bool compact = false, pretty = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ring", config.ring, "Base ring: Z or GF(p)[t]");
        cmd->add_option("--f", config.f, "Monic defining polynomial, e.g. \"x^3+4*x-1\"");
        cmd->add_option("--seed", config.seed, "Seed for randomized suites");
        cmd->add_flag("--assert-irreducible", config.assert_irreducible,
                      "Assert irreducibility of f (required for degree >= 4)");
        cmd->add_flag("--json", compact, "Compact single-line JSON output");
        cmd->add_flag("--pretty", pretty, "Indented JSON output (default)");
        cmd->add_option("--example", config.example, "Built-in worked example preset (1 or 2)")
            ->check(CLI::Range(1, 2));
    };

    CLI::App* repr = app.add_subcommand(
        "repr", "Degree-one ideal -> (a, z), kappa and the representative C_f(a,z)");
    add_common(repr);
    repr->add_option("--ideal", config.ideal_text,
                     "Comma-separated ideal generators, e.g. \"3, x-2\"");

    CLI::App* forward = app.add_subcommand(
        "forward", "Matrix with charpoly f -> ideal class data (and C_f(a,z) when degree one)");
    add_common(forward);
    forward->add_option("--matrix", config.matrix_path,
                        "JSON matrix file {\"ring\": ..., \"entries\": [[...]]}");

    CLI::App* classes = app.add_subcommand(
        "classes", "Enumerate ideals, group them into classes, verify the degree-one coverage");
    add_common(classes);
    classes->add_option("--prime-bound", config.prime_bound,
                        "Base-prime bound (magnitude over Z, degree over F_p[t])");
    classes->add_option("--exp-bound", config.exp_bound, "Largest exponent per prime");
    classes->add_option("--box", config.box, "Equivalence search box");

    CLI::App* selfcheck =
        app.add_subcommand("selfcheck", "Run the randomized invariant suites");
    add_common(selfcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    config.compact_json = compact && !pretty;

    lmrep::CmdResult result;
    try {
        if (repr->parsed())
            result = lmrep::cmd_repr(config);
        else if (forward->parsed())
            result = lmrep::cmd_forward(config);
        else if (classes->parsed())
            result = lmrep::cmd_classes(config);
        else
            result = lmrep::cmd_selfcheck(config);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    std::cout << result.output << "\n";
    return result.exit_code;
}
