// Copyright 2026 The nqueens-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nqueens/cli.hpp"

using namespace nqueens;

int main(int argc, char **argv) {
    cli::RunConfig cfg;
    std::string format = "text";
    if (const char *env = std::getenv("NQUEENS_FORMAT")) {
        format = env;
    }
    std::string out_path;

    CLI::App app{"Exact simulator and verifier for the quantum N-Queens solver circuit"};
    app.require_subcommand(1);
    app.add_option("--format", format, "Output format: text or json (default from NQUEENS_FORMAT)");
    app.add_option("--out,-o", out_path, "Write command output to PATH instead of stdout");
    app.add_option("--max-n", cfg.max_n, "Simulation size cap (default 6, at most 7)");

    struct Sub {
        const char *name;
        cli::Mode mode;
        const char *help;
    };
    const Sub subs[] = {
        {"solve", cli::Mode::Solve, "Simulate the solver circuit and print the post-selected boards"},
        {"verify", cli::Mode::Verify, "Simulate and compare against the classical oracle"},
        {"counts", cli::Mode::Counts, "Qubit and gate counts, built vs closed form"},
        {"export-qasm", cli::Mode::ExportQasm, "Write the circuit as OpenQASM 2.0"},
        {"oracle", cli::Mode::Oracle, "List classical solutions by backtracking"},
        {"sample", cli::Mode::Sample, "Seeded measurement sampling of the final state"},
    };
    for (const Sub &s : subs) {
        CLI::App *sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        sub->add_option("n", cfg.n, "Board size")->required();
        if (s.mode == cli::Mode::Sample) {
            sub->add_option("--shots", cfg.shots, "Number of shots (>= 1)");
            sub->add_option("--seed", cfg.seed, "RNG seed");
            sub->add_flag("--gate-uniformity", cfg.gate_uniformity,
                          "Fail when the chi-square uniformity p-value is <= 0.001");
        }
        sub->callback([&cfg, mode = s.mode] { cfg.mode = mode; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return cli::kUsage;
    }

    auto parsed = cli::parse_format(format);
    if (!parsed) {
        std::cerr << "error: unknown format '" << format << "' (expected text or json)\n";
        return cli::kUsage;
    }
    cfg.format = *parsed;
    if (!out_path.empty()) {
        cfg.out_path = out_path;
    }

    try {
        return cli::run_command(cfg, std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kMismatch;
    }
}
