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

#pragma once

// Subcommand implementations behind tools/nqueens. Argument parsing lives in
// the tool; everything here takes a validated RunConfig and writes to the
// given streams, so the commands can be driven directly from tests.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nqueens/analysis.hpp"
#include "nqueens/board.hpp"
#include "nqueens/circuit.hpp"
#include "nqueens/qasm.hpp"
#include "nqueens/sim.hpp"

namespace nqueens::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kResourceCap = 3,
};

enum class Mode { Solve, Verify, Counts, ExportQasm, Oracle, Sample };
enum class Format { Text, Json };

inline constexpr std::size_t kDefaultMaxN = 6;
inline constexpr std::size_t kHardMaxN = 7;
inline constexpr std::size_t kMaxBuiltCensusN = 1000;
inline constexpr std::size_t kMaxClosedFormN = 1000000;

struct RunConfig {
    Mode mode = Mode::Solve;
    std::size_t n = 4;
    std::size_t shots = 1024;
    std::uint64_t seed = 0;
    Format format = Format::Text;
    std::optional<std::string> out_path;
    std::size_t max_n = kDefaultMaxN;
    /// sample only: fail when the uniformity p-value is <= kUniformityAlpha.
    bool gate_uniformity = false;
};

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "text") {
        return Format::Text;
    }
    if (s == "json") {
        return Format::Json;
    }
    return std::nullopt;
}

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt_cols(const PermutationVector &p) {
    std::string s = "[";
    for (std::size_t k = 0; k < p.cols.size(); k++) {
        s += (k ? ", " : "") + std::to_string(p.cols[k]);
    }
    return s + "]";
}

/// 2 * n^n terms, the transient peak during the column checks.
inline double estimated_peak_terms(std::size_t n) {
    return 2.0 * std::pow(static_cast<double>(n), static_cast<double>(n));
}

/// Returns an exit code when the simulation must not run.
inline std::optional<int> check_simulation_cap(const RunConfig &cfg, std::ostream &err) {
    if (cfg.max_n > kHardMaxN) {
        err << "error: --max-n cannot exceed " << kHardMaxN << "\n";
        return kUsage;
    }
    if (cfg.n > cfg.max_n) {
        err << "error: n = " << cfg.n << " exceeds the simulation cap of " << cfg.max_n << " (about "
            << std::fixed << std::setprecision(0) << estimated_peak_terms(cfg.n) << std::defaultfloat
            << " peak terms); raise it with --max-n (at most " << kHardMaxN << ")\n";
        return kResourceCap;
    }
    if (cfg.n == kHardMaxN) {
        err << "warning: n = " << cfg.n << " holds up to " << std::fixed << std::setprecision(0)
            << estimated_peak_terms(cfg.n) << std::defaultfloat
            << " terms and may need a few hundred MB and several seconds\n";
    }
    return std::nullopt;
}

}  // namespace detail

inline int cmd_solve(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (auto code = detail::check_simulation_cap(cfg, err)) {
        return *code;
    }
    VerificationReport report = verify_against_oracle(cfg.n);
    if (cfg.format == Format::Json) {
        out << nlohmann::json(report).dump(2) << "\n";
    } else {
        out << "n = " << cfg.n << "\n";
        out << "qubits: " << make_layout(cfg.n).total() << "\n";
        if (report.quantum_solutions.empty()) {
            out << "no solutions\n";
        } else {
            out << "solutions: " << report.quantum_solutions.size() << "\n";
        }
        out << "success probability: " << detail::fmt_double(report.success_probability) << "\n";
        out << "oracle agrees: " << (report.equal ? "yes" : "NO") << "\n";
        for (std::size_t k = 0; k < report.quantum_solutions.size(); k++) {
            const auto &p = report.quantum_solutions[k];
            out << "\nsolution " << (k + 1) << ": " << detail::fmt_cols(p) << "\n";
            out << BoardConfig::from_permutation(p).to_grid();
        }
    }
    return report.ok() ? kOk : kMismatch;
}

inline int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (auto code = detail::check_simulation_cap(cfg, err)) {
        return *code;
    }
    VerificationReport report = verify_against_oracle(cfg.n);
    if (cfg.format == Format::Json) {
        out << nlohmann::json(report).dump(2) << "\n";
    } else {
        out << "n = " << report.n << "\n";
        out << "quantum solutions: " << report.quantum_solutions.size() << "\n";
        out << "classical solutions: " << report.classical_solutions.size() << "\n";
        out << "equal=" << (report.equal ? "true" : "false") << "\n";
        out << "census_ok=" << (report.census_ok ? "true" : "false") << "\n";
        out << "ancilla_mismatches=" << report.ancilla_mismatches << "\n";
        out << "success_probability=" << detail::fmt_double(report.success_probability) << "\n";
    }
    return report.ok() ? kOk : kMismatch;
}

struct CountRow {
    std::string quantity;
    std::optional<std::uint64_t> built;
    std::uint64_t closed_form;

    bool matches() const {
        return !built || *built == closed_form;
    }
};

/// Built-vs-closed-form table. The built column is counted from the gate
/// builders for n <= kMaxBuiltCensusN and left empty above that.
inline std::vector<CountRow> census_rows(std::size_t n) {
    const GateCensus closed = closed_form_census(n);
    std::optional<GateCensus> built;
    if (n <= kMaxBuiltCensusN) {
        built = streamed_census(n);
    }
    auto b = [&](auto field) -> std::optional<std::uint64_t> {
        if (!built) {
            return std::nullopt;
        }
        return field(*built);
    };
    std::vector<CountRow> rows;
    rows.push_back({"qubits", b([](const GateCensus &c) { return std::uint64_t(c.qubits); }), closed.qubits});
    rows.push_back({"column-check gates", b([](const GateCensus &c) { return c.column_check_gates; }),
                    closed.column_check_gates});
    rows.push_back({"  hadamard", b([](const GateCensus &c) { return c.count(GateKind::H); }),
                    closed.count(GateKind::H)});
    rows.push_back({"  controlled-z", b([](const GateCensus &c) { return c.count(GateKind::CZ); }),
                    closed.count(GateKind::CZ)});
    rows.push_back({"diagonal toffolis", b([](const GateCensus &c) { return c.diagonal_toffolis; }),
                    closed.diagonal_toffolis});
    rows.push_back({"diagonal ancilla init (x)", b([](const GateCensus &c) { return c.ancilla_init_gates; }),
                    closed.ancilla_init_gates});
    rows.push_back({"w-state prep gates", b([](const GateCensus &c) { return c.w_prep_gates; }), closed.w_prep_gates});
    rows.push_back({"total gates", b([](const GateCensus &c) { return c.total(); }), closed.total()});
    return rows;
}

inline int cmd_counts(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n > kMaxClosedFormN) {
        err << "error: counts supports n up to " << kMaxClosedFormN << "\n";
        return kUsage;
    }
    const auto rows = census_rows(cfg.n);
    bool all_match = true;
    for (const auto &r : rows) {
        all_match = all_match && r.matches();
    }
    if (cfg.format == Format::Json) {
        nlohmann::json j;
        j["n"] = cfg.n;
        j["rows"] = nlohmann::json::array();
        for (const auto &r : rows) {
            j["rows"].push_back({{"quantity", r.quantity},
                                 {"built", r.built ? nlohmann::json(*r.built) : nlohmann::json(nullptr)},
                                 {"closed_form", r.closed_form},
                                 {"match", r.matches()}});
        }
        j["all_match"] = all_match;
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << cfg.n << "\n";
        out << std::left << std::setw(28) << "quantity" << std::setw(16) << "built" << std::setw(16) << "closed-form"
            << "status\n";
        for (const auto &r : rows) {
            out << std::left << std::setw(28) << r.quantity << std::setw(16)
                << (r.built ? std::to_string(*r.built) : std::string("-")) << std::setw(16) << r.closed_form
                << (r.built ? (r.matches() ? "MATCH" : "MISMATCH") : "n/a") << "\n";
        }
    }
    return all_match ? kOk : kMismatch;
}

inline int cmd_oracle(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    const auto solutions = solve_classical(cfg.n);
    if (cfg.format == Format::Json) {
        nlohmann::json j{{"n", cfg.n}, {"count", solutions.size()}, {"solutions", solutions}};
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << cfg.n << "\n";
        out << "solutions: " << solutions.size() << "\n";
        for (const auto &p : solutions) {
            out << detail::fmt_cols(p) << "\n";
        }
    }
    return kOk;
}

inline int cmd_sample(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.shots == 0) {
        err << "error: --shots must be at least 1\n";
        return kUsage;
    }
    if (auto code = detail::check_simulation_cap(cfg, err)) {
        return *code;
    }
    const SparseState state = run(build_full_circuit(cfg.n));
    const SamplingReport rep = sampling_report(state, cfg.shots, cfg.seed);
    if (cfg.format == Format::Json) {
        nlohmann::json j = rep;
        j["n"] = cfg.n;
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << cfg.n << "\n";
        out << "shots: " << rep.shots << "\n";
        out << "seed: " << rep.seed << " (" << rep.rng_algorithm << ")\n";
        out << "support: " << rep.support << "\n";
        out << "distinct outcomes: " << rep.distinct << "\n";
        out << "solution hits: " << rep.solution_hits << " (" << rep.distinct_solutions << " distinct)\n";
        out << "ancilla mismatches: " << rep.ancilla_mismatches << "\n";
        if (rep.chi_square) {
            out << "chi-square: " << detail::fmt_double(*rep.chi_square) << " (dof " << rep.degrees_of_freedom
                << ", p = " << detail::fmt_double(*rep.p_value) << ")\n";
        } else {
            out << "chi-square: n/a (single-term support)\n";
        }
    }
    if (rep.ancilla_mismatches != 0) {
        return kMismatch;
    }
    if (cfg.gate_uniformity && rep.p_value && *rep.p_value <= kUniformityAlpha) {
        err << "uniformity check failed: p = " << detail::fmt_double(*rep.p_value) << "\n";
        return kMismatch;
    }
    return kOk;
}

inline int cmd_export_qasm(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    out << export_qasm(build_full_circuit(cfg.n)).text;
    return kOk;
}

/// Dispatches on cfg.mode. With an output path set, the command's stdout goes
/// to that file instead of `out`.
inline int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n == 0) {
        err << "error: n must be at least 1\n";
        return kUsage;
    }
    std::ofstream file;
    std::ostream *sink = &out;
    if (cfg.out_path) {
        file.open(*cfg.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open '" << *cfg.out_path << "' for writing\n";
            return kUsage;
        }
        sink = &file;
    }
    int code = kOk;
    switch (cfg.mode) {
        case Mode::Solve:
            code = cmd_solve(cfg, *sink, err);
            break;
        case Mode::Verify:
            code = cmd_verify(cfg, *sink, err);
            break;
        case Mode::Counts:
            code = cmd_counts(cfg, *sink, err);
            break;
        case Mode::ExportQasm:
            code = cmd_export_qasm(cfg, *sink, err);
            break;
        case Mode::Oracle:
            code = cmd_oracle(cfg, *sink, err);
            break;
        case Mode::Sample:
            code = cmd_sample(cfg, *sink, err);
            break;
    }
    if (cfg.out_path) {
        file.flush();
        if (!file) {
            err << "error: failed writing '" << *cfg.out_path << "'\n";
            return kUsage;
        }
    }
    return code;
}

}  // namespace nqueens::cli
