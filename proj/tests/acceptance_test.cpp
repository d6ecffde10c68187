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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nqueens/nqueens.hpp"

using namespace nqueens;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<PermutationVector> as_perms(const std::vector<BoardConfig> &boards) {
    std::vector<PermutationVector> out;
    for (const auto &b : boards) {
        out.push_back(*b.row_queens());
    }
    return out;
}

double max_amplitude_diff(const SparseState &a, const SparseState &b) {
    std::map<BasisLabel, Amplitude> ma, mb;
    for (const auto &t : a.terms()) {
        ma[t.label] = t.amplitude;
    }
    for (const auto &t : b.terms()) {
        mb[t.label] = t.amplitude;
    }
    double worst = 0.0;
    for (auto &[k, v] : ma) {
        worst = std::max(worst, std::abs(v - mb[k]));
    }
    for (auto &[k, v] : mb) {
        worst = std::max(worst, std::abs(v - ma[k]));
    }
    return worst;
}

std::string fmt(const char *pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

// 1. N = 4, exhaustive readout.
Outcome four_queens_exhaustive() {
    const auto t0 = std::chrono::steady_clock::now();
    const Circuit c = build_full_circuit(4);
    if (c.layout.total() != 25 || c.layout.num_system() != 16 ||
        c.layout.num_column_ancillas() + c.layout.num_diagonal_ancillas() != 9) {
        return {false, "register is not 16 system + 9 ancilla qubits"};
    }
    const SparseState s = run(c);
    if (s.size() != 256) {
        return {false, "final support has " + std::to_string(s.size()) + " terms, expected 256"};
    }
    double worst = 0.0;
    for (const auto &t : s.terms()) {
        worst = std::max(worst, std::abs(std::abs(t.amplitude) - 1.0 / 16));
    }
    if (worst > 1e-10) {
        return {false, fmt("max | |amp| - 1/16 | = %.3g", worst)};
    }
    const auto quantum = as_perms(postselect_solutions(s));
    const auto classical = solve_classical(4);
    if (quantum.size() != 2 || quantum != classical) {
        return {false, "post-selected boards differ from the classical solutions"};
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) {
        return {false, fmt("took %.2f s", elapsed)};
    }
    return {true, "25 qubits, 256 terms at 1/16 (max dev " + fmt("%.1e", worst) + "), 2 solutions, " +
                      fmt("%.3f s", elapsed)};
}

// 2. N = 4, 310 seeded shots over a 100-seed sweep.
Outcome four_queens_sampling() {
    const SparseState s = run(build_full_circuit(4));
    std::size_t in_range = 0, mismatches = 0, min_d = 1000, max_d = 0;
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        const auto shots = sample(s, 310, seed);
        if (shots.size() != 310) {
            return {false, "sampler returned the wrong number of shots"};
        }
        std::set<BasisLabel> distinct;
        for (const auto &shot : shots) {
            distinct.insert(shot.label);
            const auto rec = decode(shot.label, s.layout());
            if (!(rec.ancillas == ancilla_truth(rec.board))) {
                mismatches++;
            }
        }
        min_d = std::min(min_d, distinct.size());
        max_d = std::max(max_d, distinct.size());
        in_range += (distinct.size() >= 150 && distinct.size() <= 205);
    }
    const bool pass = in_range >= 99 && mismatches == 0;
    return {pass, std::to_string(in_range) + "/100 seeds with distinct count in [150, 205] (range " +
                      std::to_string(min_d) + ".." + std::to_string(max_d) + "), " + std::to_string(mismatches) +
                      " ancilla mismatches"};
}

// 3. Oracle equivalence for n = 1..6.
Outcome oracle_sweep() {
    const std::size_t expected[] = {1, 0, 0, 2, 10, 4};
    std::string detail;
    double n6_seconds = 0.0;
    for (std::size_t n = 1; n <= 6; n++) {
        const auto t0 = std::chrono::steady_clock::now();
        const SparseState s = run(build_full_circuit(n));
        const auto quantum = as_perms(postselect_solutions(s));
        const double elapsed = seconds_since(t0);
        if (n == 6) {
            n6_seconds = elapsed;
            if (s.layout().total() != 56 || s.size() != 46656) {
                return {false, "n=6 run has " + std::to_string(s.layout().total()) + " qubits and " +
                                   std::to_string(s.size()) + " terms"};
            }
        }
        if (quantum != solve_classical(n) || quantum.size() != expected[n - 1]) {
            return {false, "n=" + std::to_string(n) + ": " + std::to_string(quantum.size()) +
                               " post-selected boards disagree with the oracle"};
        }
        detail += (n > 1 ? "," : "") + std::to_string(quantum.size());
    }
    if (n6_seconds >= 60.0) {
        return {false, fmt("n=6 took %.1f s", n6_seconds)};
    }
    return {true, "counts " + detail + "; n=6 in " + fmt("%.2f s", n6_seconds)};
}

// 4. Resource counts against the closed forms.
Outcome resource_counts() {
    for (std::size_t n = 1; n <= 12; n++) {
        const auto built = gate_census(build_full_circuit(n));
        const std::uint64_t m = n;
        const std::uint64_t col = (m - 1) * (m + 2);
        const std::uint64_t diag = m * m * (m - 1) - m * (m - 1) - m * (m - 1) * (m - 2) / 3;
        // 3N^2/2 + N/2 - 1, checked as 2 * Q = 3N^2 + N - 2.
        if (2 * built.qubits != 3 * m * m + m - 2) {
            return {false, "qubit total mismatch at n=" + std::to_string(n)};
        }
        if (built.count(GateKind::H) + built.count(GateKind::CZ) != col) {
            return {false, "column-check gate mismatch at n=" + std::to_string(n)};
        }
        if (built.count(GateKind::CCX) != diag) {
            return {false, "diagonal Toffoli mismatch at n=" + std::to_string(n)};
        }
    }
    for (std::uint64_t n = 1; n <= 1000; n++) {
        const std::uint64_t unsimplified = n * n * (n - 1) - n * (n - 1) - n * (n - 1) * (n - 2) / 3;
        if (unsimplified != n * (n - 1) * (2 * n - 1) / 3) {
            return {false, "simplified diagonal form disagrees at n=" + std::to_string(n)};
        }
    }
    return {true, "census matches for n=1..12; N(N-1)(2N-1)/3 agrees for n=1..1000"};
}

// 5. Even-count-of-even-parts proposition.
Outcome parity_proposition() {
    for (std::size_t n = 1; n <= 10; n++) {
        if (!verify_even_parity_proposition(n)) {
            return {false, "counterexample found at n=" + std::to_string(n)};
        }
    }
    return {true, "holds for n=1..10 by exhaustive enumeration"};
}

// 6. W-state preparation.
Outcome w_state_fidelity() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 6; n++) {
        const RegisterLayout layout(n);
        const double target = 1.0 / std::sqrt(double(n));
        for (std::size_t row = 0; row < n; row++) {
            SparseState s(layout);
            for (const Gate &g : build_w_prep(n, row)) {
                s.apply(g);
            }
            if (s.size() != n) {
                return {false, "n=" + std::to_string(n) + " row " + std::to_string(row) + " has " +
                                   std::to_string(s.size()) + " terms"};
            }
            std::set<std::size_t> cols;
            for (const auto &t : s.terms()) {
                if (t.label.popcount() != 1) {
                    return {false, "W-prep produced a non one-hot basis state"};
                }
                for (std::size_t c = 0; c < n; c++) {
                    if (t.label.get(layout.system_qubit(row, c))) {
                        cols.insert(c);
                    }
                }
                worst = std::max(worst, std::abs(t.amplitude - Amplitude(target, 0.0)));
            }
            if (cols.size() != n) {
                return {false, "W-prep does not cover every cell of its row"};
            }
        }
    }
    if (worst > 1e-12) {
        return {false, fmt("max amplitude deviation %.3g", worst)};
    }
    return {true, "n=2..6, every row block holds n one-hot terms at 1/sqrt(n) (max dev " + fmt("%.1e", worst) + ")"};
}

// Fuzz gate on the n = 4 register. Rotations and bit-flip targets stay on
// qubits 0..11 so the support is bounded by 2^12; controls and X/CZ operands
// range over all 25 qubits.
Gate fuzz_gate(std::mt19937_64 &rng) {
    std::uniform_int_distribution<QubitIndex> any(0, 24), low(0, 11);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    auto distinct_from = [&](QubitIndex a, QubitIndex b, bool low_only) {
        QubitIndex q;
        do {
            q = low_only ? low(rng) : any(rng);
        } while (q == a || q == b);
        return q;
    };
    const QubitIndex none = 1000;
    switch (rng() % 7) {
        case 0:
            return Gate::x(any(rng));
        case 1:
            return Gate::h(low(rng));
        case 2:
            return Gate::ry(low(rng), angle(rng));
        case 3: {
            QubitIndex t = low(rng);
            return Gate::cx(distinct_from(t, none, false), t);
        }
        case 4: {
            QubitIndex t = low(rng);
            return Gate::cry(distinct_from(t, none, false), t, angle(rng));
        }
        case 5: {
            QubitIndex a = any(rng);
            return Gate::cz(a, distinct_from(a, none, false));
        }
        default: {
            QubitIndex t = low(rng);
            QubitIndex c1 = distinct_from(t, none, false);
            return Gate::ccx(c1, distinct_from(t, c1, false), t);
        }
    }
}

// 7. Engine properties.
Outcome engine_properties() {
    const RegisterLayout layout(4);
    std::mt19937_64 rng(20240607);
    SparseState single(layout), multi(layout);
    double worst_norm = 0.0, worst_inverse = 0.0;
    for (int step = 0; step < 10000; step++) {
        const Gate g = fuzz_gate(rng);
        if (step % 20 == 0) {
            SparseState probe = single;
            probe.apply(g);
            probe.apply(g.inverse());
            worst_inverse = std::max(worst_inverse, max_amplitude_diff(single, probe));
        }
        single.apply(g, 1);
        multi.apply(g, 4);
        worst_norm = std::max(worst_norm, std::abs(single.norm_squared() - 1.0));
    }
    double worst_workers = max_amplitude_diff(single, multi);
    worst_workers = std::max(worst_workers, max_amplitude_diff(run(build_full_circuit(5), 1),
                                                               run(build_full_circuit(5), 4)));
    const bool pass = worst_norm <= 1e-10 && worst_inverse <= 1e-12 && worst_workers <= 1e-12;
    return {pass, "10^4-gate fuzz: max norm drift " + fmt("%.1e", worst_norm) + ", inverse " +
                      fmt("%.1e", worst_inverse) + ", workers " + fmt("%.1e", worst_workers) + ", final support " +
                      std::to_string(single.size())};
}

// 8. QASM round trip and golden stability.
Outcome qasm_round_trip() {
    double worst = 0.0;
    for (std::size_t n : {1u, 2u, 4u}) {
        const Circuit c = build_full_circuit(n);
        const QasmDocument doc = export_qasm(c);
        const Circuit parsed = parse_qasm_subset(doc.text);
        worst = std::max(worst, max_amplitude_diff(run(c), run(parsed)));
        if (export_qasm(c).text != doc.text) {
            return {false, "export is not deterministic"};
        }
        const std::string path = std::string(NQUEENS_GOLDEN_DIR) + "/nqueens_n" + std::to_string(n) + ".qasm";
        std::ifstream in(path, std::ios::binary);
        std::stringstream golden;
        golden << in.rdbuf();
        if (golden.str() != doc.text) {
            return {false, "export differs from " + path};
        }
    }
    if (worst > 1e-10) {
        return {false, fmt("round-trip amplitude deviation %.3g", worst)};
    }
    return {true, "n=1,2,4 byte-identical to golden files; round-trip deviation " + fmt("%.1e", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 N=4 exhaustive reproduction", four_queens_exhaustive},
        {"AC2 N=4 sampling reproduction", four_queens_sampling},
        {"AC3 oracle equivalence n=1..6", oracle_sweep},
        {"AC4 resource-count closed forms", resource_counts},
        {"AC5 even-parity proposition", parity_proposition},
        {"AC6 W-state fidelity", w_state_fidelity},
        {"AC7 engine properties", engine_properties},
        {"AC8 QASM round trip", qasm_round_trip},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
