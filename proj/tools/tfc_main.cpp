/*
 * Copyright 2026 The tfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tfc/errors.hpp"
#include "tfc/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    double tolerance = 1e-9;
    std::string format = "text";
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--seed", opt.seed, "Seed for the free-function generator");
    cmd->add_option("--samples", opt.samples,
                    "Free functions per constraint check (the first is the zero "
                    "function; 0 skips sampling)");
    cmd->add_option("--tol", opt.tolerance, "Deviation tolerance for approximate fields");
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained-expression engine: reproduce the built-in examples "
                 "and verify constraint satisfaction for random free functions"};
    app.require_subcommand(1);

    Options opt;
    std::string example_id;

    CLI::App* run = app.add_subcommand("run", "Run one example and report its checks");
    run->add_option("example", example_id,
                    "One of: matrix_r2x3, string_c2, gf4, multivariate")
        ->required();
    add_common_flags(run, opt);

    CLI::App* all =
        app.add_subcommand("verify-all", "Run every example plus the algebraic suites");
    add_common_flags(all, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own exit would return its code; pin usage errors to 2.
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        bool pass = false;
        std::string rendered;
        if (run->parsed()) {
            const auto report =
                tfc::verify::run_example(example_id, opt.seed, opt.samples, opt.tolerance);
            pass = report.pass();
            rendered = opt.format == "json" ? tfc::verify::to_json(report)
                                            : tfc::verify::to_text(report);
        } else {
            const auto aggregate =
                tfc::verify::run_all(opt.seed, opt.samples, opt.tolerance);
            pass = aggregate.pass();
            rendered = opt.format == "json" ? tfc::verify::to_json(aggregate)
                                            : tfc::verify::to_text(aggregate);
        }
        std::cout << rendered;
        return pass ? kExitPass : kExitCheckFailure;
    } catch (const tfc::UnknownExampleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tfc::Error& e) {
        // Construction problems (singular supports and friends), not check
        // failures.
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
