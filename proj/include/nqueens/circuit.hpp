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

// Gate-level IR for the N-Queens solver circuit.
//
// Register layout (0-based):
//   [0, n^2)                        system qubits, cell (r, c) -> r*n + c
//   [n^2, n^2 + n - 1)              column-parity ancillas, columns 0..n-2
//   [n^2 + n - 1, total)            diagonal ancillas, one per row pair i < j
//
// The circuit has three stages: a W state on every row block, an H-CZ...CZ-H
// parity sandwich per column ancilla, then X on every diagonal ancilla
// followed by one Toffoli per diagonally attacking cell pair.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nqueens/errors.hpp"

namespace nqueens {

using QubitIndex = std::uint32_t;

class RegisterLayout {
   public:
    explicit RegisterLayout(std::size_t n) : n_(n) {
        if (n == 0) {
            throw SizeError("board size must be at least 1");
        }
    }

    std::size_t n() const {
        return n_;
    }
    std::size_t num_system() const {
        return n_ * n_;
    }
    std::size_t num_column_ancillas() const {
        return n_ - 1;
    }
    std::size_t num_diagonal_ancillas() const {
        return n_ * (n_ - 1) / 2;
    }
    std::size_t total() const {
        return num_system() + num_column_ancillas() + num_diagonal_ancillas();
    }

    std::size_t first_column_ancilla() const {
        return num_system();
    }
    std::size_t first_diagonal_ancilla() const {
        return num_system() + num_column_ancillas();
    }

    QubitIndex system_qubit(std::size_t row, std::size_t col) const {
        if (row >= n_ || col >= n_) {
            throw IndexError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside the board");
        }
        return static_cast<QubitIndex>(row * n_ + col);
    }

    QubitIndex column_ancilla(std::size_t col) const {
        if (col + 1 >= n_) {
            throw IndexError("column " + std::to_string(col) + " has no parity ancilla");
        }
        return static_cast<QubitIndex>(first_column_ancilla() + col);
    }

    /// k is the 1-based pair index returned by ancilla_index.
    QubitIndex diagonal_ancilla(std::size_t k) const {
        if (k == 0 || k > num_diagonal_ancillas()) {
            throw IndexError("diagonal ancilla index " + std::to_string(k) + " out of range");
        }
        return static_cast<QubitIndex>(first_diagonal_ancilla() + k - 1);
    }

    bool operator==(const RegisterLayout &) const = default;

   private:
    std::size_t n_;
};

inline RegisterLayout make_layout(std::size_t n) {
    return RegisterLayout(n);
}

enum class GateKind : std::uint8_t { X, H, RY, CX, CRY, CZ, CCX };

inline constexpr std::array<GateKind, 7> kAllGateKinds = {GateKind::X,   GateKind::H,  GateKind::RY, GateKind::CX,
                                                          GateKind::CRY, GateKind::CZ, GateKind::CCX};

inline constexpr std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::H:
            return "H";
        case GateKind::RY:
            return "RY";
        case GateKind::CX:
            return "CX";
        case GateKind::CRY:
            return "CRY";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CCX:
            return "CCX";
    }
    return "?";
}

inline constexpr std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::RY:
            return 1;
        case GateKind::CX:
        case GateKind::CRY:
        case GateKind::CZ:
            return 2;
        case GateKind::CCX:
            return 3;
    }
    return 0;
}

inline constexpr bool has_angle(GateKind kind) {
    return kind == GateKind::RY || kind == GateKind::CRY;
}

/// A gate with its operands; controls come before the target.
struct Gate {
    GateKind kind = GateKind::X;
    std::array<QubitIndex, 3> qubits{};
    double theta = 0.0;

    static Gate x(QubitIndex q) {
        return {GateKind::X, {q, 0, 0}, 0.0};
    }
    static Gate h(QubitIndex q) {
        return {GateKind::H, {q, 0, 0}, 0.0};
    }
    static Gate ry(QubitIndex q, double theta) {
        return {GateKind::RY, {q, 0, 0}, theta};
    }
    static Gate cx(QubitIndex control, QubitIndex target) {
        return {GateKind::CX, {control, target, 0}, 0.0};
    }
    static Gate cry(QubitIndex control, QubitIndex target, double theta) {
        return {GateKind::CRY, {control, target, 0}, theta};
    }
    static Gate cz(QubitIndex a, QubitIndex b) {
        return {GateKind::CZ, {a, b, 0}, 0.0};
    }
    static Gate ccx(QubitIndex c1, QubitIndex c2, QubitIndex target) {
        return {GateKind::CCX, {c1, c2, target}, 0.0};
    }

    std::span<const QubitIndex> operands() const {
        return {qubits.data(), gate_arity(kind)};
    }

    QubitIndex target() const {
        return qubits[gate_arity(kind) - 1];
    }

    Gate inverse() const {
        Gate g = *this;
        if (has_angle(kind)) {
            g.theta = -theta;
        }
        return g;
    }

    bool operator==(const Gate &other) const {
        if (kind != other.kind) {
            return false;
        }
        for (std::size_t k = 0; k < gate_arity(kind); k++) {
            if (qubits[k] != other.qubits[k]) {
                return false;
            }
        }
        return !has_angle(kind) || theta == other.theta;
    }
};

/// Throws IndexError when the gate does not fit a register of num_qubits.
inline void validate_gate(const Gate &gate, std::size_t num_qubits) {
    auto ops = gate.operands();
    for (std::size_t a = 0; a < ops.size(); a++) {
        if (ops[a] >= num_qubits) {
            throw IndexError(std::string(gate_name(gate.kind)) + " operand q[" + std::to_string(ops[a]) +
                             "] outside a register of " + std::to_string(num_qubits) + " qubits");
        }
        for (std::size_t b = 0; b < a; b++) {
            if (ops[a] == ops[b]) {
                throw IndexError(std::string(gate_name(gate.kind)) + " repeats operand q[" + std::to_string(ops[a]) +
                                 "]");
            }
        }
    }
    if (has_angle(gate.kind) && !std::isfinite(gate.theta)) {
        throw IndexError(std::string(gate_name(gate.kind)) + " angle is not finite");
    }
}

struct Circuit {
    RegisterLayout layout;
    std::vector<Gate> gates;

    void validate() const {
        for (const Gate &g : gates) {
            validate_gate(g, layout.total());
        }
    }
};

/// Formats an angle so that strtod reads back the identical double.
inline std::string format_angle(double theta) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", theta);
    return buf;
}

/// One line per gate: `KIND q[a] q[b] q[c] (θ=...)`.
inline void dump_circuit(const Circuit &circuit, std::ostream &out) {
    for (const Gate &g : circuit.gates) {
        out << gate_name(g.kind);
        for (QubitIndex q : g.operands()) {
            out << " q[" << q << "]";
        }
        if (has_angle(g.kind)) {
            out << " (θ=" << format_angle(g.theta) << ")";
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Builders. Each stage has a streaming form (emit_*) that hands gates to a
// callback in canonical order, and a collecting form (build_*). The streaming
// forms let the census run at sizes where the gate list would not fit in memory.
// ---------------------------------------------------------------------------

/// Rotation angle of cascade step i (1-based) in an n-qubit W preparation.
/// After the step, amplitude sqrt(1/(n-i+1)) of the remaining weight stays on
/// qubit i-1 and the rest moves to qubit i.
inline double w_cascade_angle(std::size_t n, std::size_t step) {
    return 2.0 * std::acos(std::sqrt(1.0 / static_cast<double>(n - step + 1)));
}

template <typename Emit>
void emit_w_prep(const RegisterLayout &layout, std::size_t row, Emit &&emit) {
    const std::size_t n = layout.n();
    if (row >= n) {
        throw IndexError("row " + std::to_string(row) + " out of range for n = " + std::to_string(n));
    }
    emit(Gate::x(layout.system_qubit(row, 0)));
    for (std::size_t i = 1; i < n; i++) {
        QubitIndex prev = layout.system_qubit(row, i - 1);
        QubitIndex cur = layout.system_qubit(row, i);
        emit(Gate::cry(prev, cur, w_cascade_angle(n, i)));
        emit(Gate::cx(cur, prev));
    }
}

template <typename Emit>
void emit_column_checks(const RegisterLayout &layout, Emit &&emit) {
    const std::size_t n = layout.n();
    for (std::size_t c = 0; c + 1 < n; c++) {
        QubitIndex anc = layout.column_ancilla(c);
        emit(Gate::h(anc));
        for (std::size_t r = 0; r < n; r++) {
            emit(Gate::cz(anc, layout.system_qubit(r, c)));
        }
        emit(Gate::h(anc));
    }
}

/// Diagonal ancilla number (1-based) for the 1-based row pair i < j:
/// k = (i-1)(2n-i)/2 + (j-i). Row i's pairs occupy a contiguous run of n-i
/// indices following the runs of rows 1..i-1.
inline std::size_t ancilla_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i < 1 || j > n || i >= j) {
        throw IndexError("ancilla_index requires 1 <= i < j <= n, got i=" + std::to_string(i) +
                         " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
    return (i - 1) * (2 * n - i) / 2 + (j - i);
}

template <typename Emit>
void emit_diagonal_checks(const RegisterLayout &layout, Emit &&emit) {
    const std::size_t n = layout.n();
    for (std::size_t k = 1; k <= layout.num_diagonal_ancillas(); k++) {
        emit(Gate::x(layout.diagonal_ancilla(k)));
    }
    // Same order as diagonal_pairs(): i, j, x, then y ascending.
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            const std::size_t d = j - i;
            const QubitIndex target = layout.diagonal_ancilla(ancilla_index(i + 1, j + 1, n));
            for (std::size_t x = 0; x < n; x++) {
                if (x >= d) {
                    emit(Gate::ccx(layout.system_qubit(i, x), layout.system_qubit(j, x - d), target));
                }
                if (x + d < n) {
                    emit(Gate::ccx(layout.system_qubit(i, x), layout.system_qubit(j, x + d), target));
                }
            }
        }
    }
}

template <typename Emit>
void emit_full_circuit(const RegisterLayout &layout, Emit &&emit) {
    for (std::size_t row = 0; row < layout.n(); row++) {
        emit_w_prep(layout, row, emit);
    }
    emit_column_checks(layout, emit);
    emit_diagonal_checks(layout, emit);
}

inline std::vector<Gate> build_w_prep(std::size_t n, std::size_t row) {
    std::vector<Gate> gates;
    emit_w_prep(RegisterLayout(n), row, [&](const Gate &g) { gates.push_back(g); });
    return gates;
}

inline std::vector<Gate> build_column_checks(std::size_t n) {
    std::vector<Gate> gates;
    emit_column_checks(RegisterLayout(n), [&](const Gate &g) { gates.push_back(g); });
    return gates;
}

inline std::vector<Gate> build_diagonal_checks(std::size_t n) {
    std::vector<Gate> gates;
    emit_diagonal_checks(RegisterLayout(n), [&](const Gate &g) { gates.push_back(g); });
    return gates;
}

inline Circuit build_full_circuit(std::size_t n) {
    Circuit circuit{RegisterLayout(n), {}};
    emit_full_circuit(circuit.layout, [&](const Gate &g) { circuit.gates.push_back(g); });
    return circuit;
}

// ---------------------------------------------------------------------------
// Resource accounting.
// ---------------------------------------------------------------------------

struct GateCensus {
    std::size_t qubits = 0;
    std::array<std::uint64_t, kAllGateKinds.size()> by_kind{};
    /// H + CZ: the column-parity stage.
    std::uint64_t column_check_gates = 0;
    /// CCX only; the X gates that prepare diagonal ancillas in |1> are
    /// counted separately in ancilla_init_gates.
    std::uint64_t diagonal_toffolis = 0;
    std::uint64_t ancilla_init_gates = 0;
    /// X on system qubits, CRY and CX.
    std::uint64_t w_prep_gates = 0;

    std::uint64_t count(GateKind kind) const {
        return by_kind[static_cast<std::size_t>(kind)];
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : by_kind) {
            t += c;
        }
        return t;
    }

    bool operator==(const GateCensus &) const = default;
};

namespace detail {

inline void tally(GateCensus &census, const RegisterLayout &layout, const Gate &g) {
    census.by_kind[static_cast<std::size_t>(g.kind)]++;
    switch (g.kind) {
        case GateKind::H:
        case GateKind::CZ:
            census.column_check_gates++;
            break;
        case GateKind::CCX:
            census.diagonal_toffolis++;
            break;
        case GateKind::X:
            if (g.qubits[0] >= layout.num_system()) {
                census.ancilla_init_gates++;
            } else {
                census.w_prep_gates++;
            }
            break;
        case GateKind::RY:
        case GateKind::CRY:
        case GateKind::CX:
            census.w_prep_gates++;
            break;
    }
}

}  // namespace detail

inline GateCensus gate_census(const Circuit &circuit) {
    GateCensus census;
    census.qubits = circuit.layout.total();
    for (const Gate &g : circuit.gates) {
        detail::tally(census, circuit.layout, g);
    }
    return census;
}

/// Census of the solver circuit for n, counted gate by gate from the builders
/// without materializing the gate list.
inline GateCensus streamed_census(std::size_t n) {
    RegisterLayout layout(n);
    GateCensus census;
    census.qubits = layout.total();
    emit_full_circuit(layout, [&](const Gate &g) { detail::tally(census, layout, g); });
    return census;
}

/// 3n^2/2 + n/2 - 1, evaluated as n(3n+1)/2 - 1 (n(3n+1) is always even).
inline std::uint64_t closed_form_qubits(std::uint64_t n) {
    return n * (3 * n + 1) / 2 - 1;
}

/// (n-1)(n+2): 2(n-1) Hadamards plus n(n-1) controlled-Z.
inline std::uint64_t closed_form_column_gates(std::uint64_t n) {
    return (n - 1) * (n + 2);
}

/// n^2(n-1) - n(n-1) - n(n-1)(n-2)/3, in the unsimplified form.
inline std::uint64_t closed_form_diagonal_toffolis(std::uint64_t n) {
    if (n < 2) {
        return 0;
    }
    return n * n * (n - 1) - n * (n - 1) - n * (n - 1) * (n - 2) / 3;
}

/// The same count simplified: n(n-1)(2n-1)/3, i.e. 2 * sum_{d=1}^{n-1} d^2.
inline std::uint64_t simplified_diagonal_toffolis(std::uint64_t n) {
    if (n < 2) {
        return 0;
    }
    return n * (n - 1) * (2 * n - 1) / 3;
}

inline GateCensus closed_form_census(std::size_t n) {
    if (n == 0) {
        throw SizeError("board size must be at least 1");
    }
    const std::uint64_t m = n;
    GateCensus c;
    c.qubits = closed_form_qubits(m);
    auto set = [&c](GateKind k, std::uint64_t v) { c.by_kind[static_cast<std::size_t>(k)] = v; };
    set(GateKind::H, 2 * (m - 1));
    set(GateKind::CZ, m * (m - 1));
    set(GateKind::CCX, closed_form_diagonal_toffolis(m));
    set(GateKind::X, m + m * (m - 1) / 2);
    set(GateKind::CRY, m * (m - 1));
    set(GateKind::CX, m * (m - 1));
    set(GateKind::RY, 0);
    c.column_check_gates = closed_form_column_gates(m);
    c.diagonal_toffolis = closed_form_diagonal_toffolis(m);
    c.ancilla_init_gates = m * (m - 1) / 2;
    c.w_prep_gates = m * (2 * m - 1);
    return c;
}

}  // namespace nqueens
