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

// Reading solver output: decode basis labels into boards plus ancilla bits,
// predict those ancilla bits classically, post-select the all-ones pattern
// and compare against the backtracking oracle.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "json.hpp"
#include "nqueens/board.hpp"
#include "nqueens/circuit.hpp"
#include "nqueens/errors.hpp"
#include "nqueens/sim.hpp"

namespace nqueens {

struct AncillaBits {
    std::vector<std::uint8_t> column;
    std::vector<std::uint8_t> diagonal;

    bool all_ones() const {
        auto one = [](std::uint8_t b) { return b == 1; };
        return std::all_of(column.begin(), column.end(), one) && std::all_of(diagonal.begin(), diagonal.end(), one);
    }

    bool operator==(const AncillaBits &) const = default;
};

struct OutcomeRecord {
    BoardConfig board;
    AncillaBits ancillas;
    Amplitude amplitude;
};

/// Splits a label into board / column-ancilla / diagonal-ancilla bits.
/// Throws EncodingError if a row of the board does not hold exactly one queen.
inline OutcomeRecord decode(const BasisLabel &label, const RegisterLayout &layout, Amplitude amplitude = {1.0, 0.0}) {
    const std::size_t n = layout.n();
    OutcomeRecord rec{BoardConfig(n), {}, amplitude};
    for (std::size_t r = 0; r < n; r++) {
        std::size_t queens = 0;
        for (std::size_t c = 0; c < n; c++) {
            bool bit = label.get(layout.system_qubit(r, c));
            rec.board.set(r, c, bit);
            queens += bit ? 1 : 0;
        }
        if (queens != 1) {
            throw EncodingError("label " + label.to_string(layout.total()) + " has " + std::to_string(queens) +
                                " queens in row " + std::to_string(r));
        }
    }
    rec.ancillas.column.resize(layout.num_column_ancillas());
    for (std::size_t c = 0; c < layout.num_column_ancillas(); c++) {
        rec.ancillas.column[c] = label.get(layout.column_ancilla(c)) ? 1 : 0;
    }
    rec.ancillas.diagonal.resize(layout.num_diagonal_ancillas());
    for (std::size_t k = 1; k <= layout.num_diagonal_ancillas(); k++) {
        rec.ancillas.diagonal[k - 1] = label.get(layout.diagonal_ancilla(k)) ? 1 : 0;
    }
    return rec;
}

/// Inverse of decode.
inline BasisLabel encode(const OutcomeRecord &rec, const RegisterLayout &layout) {
    const std::size_t n = layout.n();
    if (rec.board.n() != n || rec.ancillas.column.size() != layout.num_column_ancillas() ||
        rec.ancillas.diagonal.size() != layout.num_diagonal_ancillas()) {
        throw SizeError("outcome record does not match the register layout");
    }
    BasisLabel label;
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            label.set(layout.system_qubit(r, c), rec.board.at(r, c));
        }
    }
    for (std::size_t c = 0; c < rec.ancillas.column.size(); c++) {
        label.set(layout.column_ancilla(c), rec.ancillas.column[c] != 0);
    }
    for (std::size_t k = 1; k <= rec.ancillas.diagonal.size(); k++) {
        label.set(layout.diagonal_ancilla(k), rec.ancillas.diagonal[k - 1] != 0);
    }
    return label;
}

/// The ancilla bits the solver circuit should leave next to this board:
/// column c (c < n-1) holds the parity of its queen count, and the diagonal
/// ancilla for rows i < j is 0 exactly when their queens share a diagonal.
inline AncillaBits ancilla_truth(const BoardConfig &board) {
    auto perm = board.row_queens();
    if (!perm) {
        throw EncodingError("ancilla prediction needs exactly one queen per row");
    }
    const std::size_t n = board.n();
    AncillaBits bits;
    bits.column.resize(n - 1);
    for (std::size_t c = 0; c + 1 < n; c++) {
        bits.column[c] = static_cast<std::uint8_t>(board.col_sum(c) % 2);
    }
    bits.diagonal.assign(n * (n - 1) / 2, 1);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (is_diagonal(i, perm->cols[i], j, perm->cols[j])) {
                bits.diagonal[ancilla_index(i + 1, j + 1, n) - 1] = 0;
            }
        }
    }
    return bits;
}

/// Boards of every term whose ancillas are all 1, in permutation order.
inline std::vector<BoardConfig> postselect_solutions(const SparseState &state) {
    std::vector<PermutationVector> perms;
    for (const Term &t : readout(state)) {
        OutcomeRecord rec = decode(t.label, state.layout(), t.amplitude);
        if (rec.ancillas.all_ones()) {
            auto perm = rec.board.row_queens();
            perms.push_back(*perm);
        }
    }
    std::sort(perms.begin(), perms.end());
    std::vector<BoardConfig> boards;
    boards.reserve(perms.size());
    for (const auto &p : perms) {
        boards.push_back(BoardConfig::from_permutation(p));
    }
    return boards;
}

/// Number of terms whose ancilla bits differ from ancilla_truth of their board.
inline std::size_t count_ancilla_mismatches(const SparseState &state) {
    std::size_t mismatches = 0;
    for (const Term &t : state.terms()) {
        OutcomeRecord rec = decode(t.label, state.layout());
        if (!(rec.ancillas == ancilla_truth(rec.board))) {
            mismatches++;
        }
    }
    return mismatches;
}

struct VerificationReport {
    std::size_t n = 0;
    std::vector<PermutationVector> quantum_solutions;
    std::vector<PermutationVector> classical_solutions;
    bool equal = false;
    double success_probability = 0.0;
    bool census_ok = false;
    std::size_t ancilla_mismatches = 0;
    std::optional<std::uint64_t> seed;
    std::string rng_algorithm = std::string(kRngAlgorithm);

    bool ok() const {
        return equal && census_ok && ancilla_mismatches == 0;
    }
};

/// Census totals the closed forms speak about: qubits, column-check gates
/// and diagonal Toffolis.
inline bool census_matches_closed_form(const GateCensus &built, std::size_t n) {
    const GateCensus expected = closed_form_census(n);
    return built.qubits == expected.qubits && built.column_check_gates == expected.column_check_gates &&
           built.diagonal_toffolis == expected.diagonal_toffolis;
}

/// Post-selected solutions and the success probability of a final state.
inline void fill_from_state(VerificationReport &report, const SparseState &state) {
    report.n = state.layout().n();
    for (const BoardConfig &b : postselect_solutions(state)) {
        report.quantum_solutions.push_back(*b.row_queens());
    }
    report.equal = report.quantum_solutions == report.classical_solutions;
    // S(n) / n^n: every one of the n^n row-constrained boards carries equal weight.
    report.success_probability =
        static_cast<double>(report.quantum_solutions.size()) / std::pow(static_cast<double>(report.n), report.n);
    report.ancilla_mismatches = count_ancilla_mismatches(state);
}

/// Builds and simulates the circuit for n, then checks it against the
/// classical oracle, the ancilla predictions and the closed-form census.
inline VerificationReport verify_against_oracle(std::size_t n, unsigned workers = 1) {
    VerificationReport report;
    report.n = n;
    const Circuit circuit = build_full_circuit(n);
    report.census_ok = census_matches_closed_form(gate_census(circuit), n);
    report.classical_solutions = solve_classical(n);
    fill_from_state(report, run(circuit, workers));
    return report;
}

inline void to_json(nlohmann::json &j, const VerificationReport &r) {
    j = nlohmann::json{{"n", r.n},
                       {"quantum_solutions", r.quantum_solutions},
                       {"classical_solutions", r.classical_solutions},
                       {"equal", r.equal},
                       {"success_probability", r.success_probability},
                       {"census_ok", r.census_ok},
                       {"ancilla_mismatches", r.ancilla_mismatches},
                       {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
                       {"rng_algorithm", r.rng_algorithm}};
}

struct SamplingReport {
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::string rng_algorithm = std::string(kRngAlgorithm);
    std::size_t support = 0;
    std::size_t distinct = 0;
    /// Shots whose ancillas all read 1.
    std::size_t solution_hits = 0;
    /// Distinct boards among solution_hits.
    std::size_t distinct_solutions = 0;
    /// Shots whose ancilla bits disagree with ancilla_truth of their board.
    std::size_t ancilla_mismatches = 0;
    /// Pearson statistic against uniform over the support; absent when the
    /// support has a single term.
    std::optional<double> chi_square;
    std::size_t degrees_of_freedom = 0;
    std::optional<double> p_value;
};

inline constexpr double kUniformityAlpha = 0.001;

inline SamplingReport sampling_report(const SparseState &state, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    SamplingReport rep;
    rep.shots = shots;
    rep.seed = seed;
    const auto support = readout(state);
    rep.support = support.size();

    std::vector<Shot> draws = sample(state, shots, seed);
    std::vector<BasisLabel> labels;
    labels.reserve(draws.size());
    std::set<PermutationVector> solutions;
    for (const Shot &s : draws) {
        labels.push_back(s.label);
        OutcomeRecord rec = decode(s.label, state.layout());
        if (!(rec.ancillas == ancilla_truth(rec.board))) {
            rep.ancilla_mismatches++;
        }
        if (rec.ancillas.all_ones()) {
            rep.solution_hits++;
            solutions.insert(*rec.board.row_queens());
        }
    }
    rep.distinct_solutions = solutions.size();

    std::sort(labels.begin(), labels.end());
    // Observed counts aligned with the (sorted) support.
    std::vector<std::size_t> observed(support.size(), 0);
    std::size_t k = 0;
    for (const BasisLabel &l : labels) {
        while (support[k].label < l) {
            k++;
        }
        observed[k]++;
    }
    rep.distinct = static_cast<std::size_t>(std::count_if(observed.begin(), observed.end(), [](auto c) { return c > 0; }));

    if (support.size() > 1) {
        const double expected = static_cast<double>(shots) / static_cast<double>(support.size());
        double chi = 0.0;
        for (std::size_t c : observed) {
            const double d = static_cast<double>(c) - expected;
            chi += d * d / expected;
        }
        rep.chi_square = chi;
        rep.degrees_of_freedom = support.size() - 1;
        boost::math::chi_squared dist(static_cast<double>(rep.degrees_of_freedom));
        rep.p_value = boost::math::cdf(boost::math::complement(dist, chi));
    }
    return rep;
}

inline void to_json(nlohmann::json &j, const SamplingReport &r) {
    auto opt = [](const std::optional<double> &v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    j = nlohmann::json{{"shots", r.shots},
                       {"seed", r.seed},
                       {"rng_algorithm", r.rng_algorithm},
                       {"support", r.support},
                       {"distinct", r.distinct},
                       {"solution_hits", r.solution_hits},
                       {"distinct_solutions", r.distinct_solutions},
                       {"ancilla_mismatches", r.ancilla_mismatches},
                       {"chi_square", opt(r.chi_square)},
                       {"degrees_of_freedom", r.degrees_of_freedom},
                       {"p_value", opt(r.p_value)}};
}

}  // namespace nqueens
