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

// OpenQASM 2.0 export, and a reader for exactly the subset the exporter
// writes. CRY is not in qelib1's baseline set, so it goes out as
//   ry(θ/2) t; cx c,t; ry(-θ/2) t; cx c,t;
// and comes back decomposed.

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nqueens/circuit.hpp"
#include "nqueens/errors.hpp"

namespace nqueens {

struct QasmDocument {
    std::string text;
    /// Gate statements only; excludes declarations and the final measure.
    std::size_t gate_line_count = 0;
};

namespace detail {

inline std::string qubit_ref(QubitIndex q) {
    return "q[" + std::to_string(q) + "]";
}

inline std::string range_comment(std::string_view what, std::size_t begin, std::size_t end) {
    if (begin == end) {
        return "// " + std::string(what) + ": none\n";
    }
    return "// " + std::string(what) + ": q[" + std::to_string(begin) + "]..q[" + std::to_string(end - 1) + "]\n";
}

}  // namespace detail

inline QasmDocument export_qasm(const Circuit &circuit) {
    const RegisterLayout &layout = circuit.layout;
    const std::size_t n = layout.n();
    const std::size_t total = layout.total();
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// n-queens solver circuit, n = " << n << "\n";
    out << detail::range_comment("system qubits, cell (r,c) -> q[r*n+c]", 0, layout.num_system());
    out << detail::range_comment("column parity ancillas", layout.first_column_ancilla(), layout.first_diagonal_ancilla());
    out << detail::range_comment("diagonal ancillas", layout.first_diagonal_ancilla(), total);
    out << "qreg q[" << total << "];\n";
    out << "creg c[" << total << "];\n";

    QasmDocument doc;
    auto line = [&](const std::string &s) {
        out << s << ";\n";
        doc.gate_line_count++;
    };
    using detail::qubit_ref;
    for (const Gate &g : circuit.gates) {
        const auto &q = g.qubits;
        switch (g.kind) {
            case GateKind::X:
                line("x " + qubit_ref(q[0]));
                break;
            case GateKind::H:
                line("h " + qubit_ref(q[0]));
                break;
            case GateKind::RY:
                line("ry(" + format_angle(g.theta) + ") " + qubit_ref(q[0]));
                break;
            case GateKind::CX:
                line("cx " + qubit_ref(q[0]) + "," + qubit_ref(q[1]));
                break;
            case GateKind::CZ:
                line("cz " + qubit_ref(q[0]) + "," + qubit_ref(q[1]));
                break;
            case GateKind::CCX:
                line("ccx " + qubit_ref(q[0]) + "," + qubit_ref(q[1]) + "," + qubit_ref(q[2]));
                break;
            case GateKind::CRY: {
                const std::string cx = "cx " + qubit_ref(q[0]) + "," + qubit_ref(q[1]);
                line("ry(" + format_angle(g.theta / 2) + ") " + qubit_ref(q[1]));
                line(cx);
                line("ry(" + format_angle(-g.theta / 2) + ") " + qubit_ref(q[1]));
                line(cx);
                break;
            }
        }
    }
    out << "measure q -> c;\n";
    doc.text = out.str();
    return doc;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

/// Smallest n whose solver register has exactly `total` qubits.
inline std::optional<std::size_t> board_size_for_register(std::size_t total) {
    for (std::size_t n = 1;; n++) {
        std::size_t t = RegisterLayout(n).total();
        if (t == total) {
            return n;
        }
        if (t > total) {
            return std::nullopt;
        }
    }
}

class QasmLineParser {
   public:
    QasmLineParser(std::string_view text, std::size_t line) : rest_(text), line_(line) {
    }

    std::string_view word() {
        skip_space();
        std::size_t k = 0;
        while (k < rest_.size() && (std::isalnum(static_cast<unsigned char>(rest_[k])) || rest_[k] == '_')) {
            k++;
        }
        if (k == 0) {
            fail("expected an identifier");
        }
        auto w = rest_.substr(0, k);
        rest_.remove_prefix(k);
        return w;
    }

    bool accept(char ch) {
        skip_space();
        if (!rest_.empty() && rest_.front() == ch) {
            rest_.remove_prefix(1);
            return true;
        }
        return false;
    }

    void expect(char ch) {
        if (!accept(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
    }

    std::size_t integer() {
        skip_space();
        std::size_t k = 0;
        std::size_t value = 0;
        while (k < rest_.size() && std::isdigit(static_cast<unsigned char>(rest_[k]))) {
            value = value * 10 + static_cast<std::size_t>(rest_[k] - '0');
            k++;
        }
        if (k == 0) {
            fail("expected an integer");
        }
        rest_.remove_prefix(k);
        return value;
    }

    double real() {
        skip_space();
        std::string buf(rest_.substr(0, std::min<std::size_t>(rest_.size(), 64)));
        char *end = nullptr;
        errno = 0;
        double v = std::strtod(buf.c_str(), &end);
        if (end == buf.c_str() || errno == ERANGE) {
            fail("expected a number");
        }
        rest_.remove_prefix(static_cast<std::size_t>(end - buf.c_str()));
        return v;
    }

    /// `name[index]` where name must match the declared register.
    QubitIndex qubit(std::string_view reg, std::size_t size) {
        auto name = word();
        if (name != reg) {
            fail("unknown register '" + std::string(name) + "'");
        }
        expect('[');
        std::size_t idx = integer();
        expect(']');
        if (idx >= size) {
            fail("qubit index " + std::to_string(idx) + " out of range");
        }
        return static_cast<QubitIndex>(idx);
    }

    void finish() {
        skip_space();
        if (!rest_.empty()) {
            fail("unexpected trailing text '" + std::string(rest_) + "'");
        }
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(line_, what);
    }

   private:
    void skip_space() {
        while (!rest_.empty() && std::isspace(static_cast<unsigned char>(rest_.front()))) {
            rest_.remove_prefix(1);
        }
    }

    std::string_view rest_;
    std::size_t line_;
};

}  // namespace detail

/// Reads back a program written by export_qasm. One statement per line;
/// `//` comments and blank lines are skipped. Anything else is a ParseError
/// carrying the 1-based line number.
inline Circuit parse_qasm_subset(std::string_view text) {
    std::optional<RegisterLayout> layout;
    std::size_t qreg_size = 0;
    bool have_header = false;
    bool have_creg = false;
    std::vector<Gate> gates;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        line_no++;

        if (auto c = raw.find("//"); c != std::string_view::npos) {
            raw = raw.substr(0, c);
        }
        std::string_view stmt = detail::trim(raw);
        if (stmt.empty()) {
            continue;
        }
        if (stmt.back() != ';') {
            throw ParseError(line_no, "statement must end with ';'");
        }
        stmt = detail::trim(stmt.substr(0, stmt.size() - 1));
        detail::QasmLineParser p(stmt, line_no);

        if (!have_header) {
            if (stmt != "OPENQASM 2.0") {
                throw ParseError(line_no, "expected 'OPENQASM 2.0;' header");
            }
            have_header = true;
            continue;
        }
        if (stmt == "include \"qelib1.inc\"") {
            continue;
        }

        auto name = p.word();
        if (name == "qreg" || name == "creg") {
            auto reg = p.word();
            p.expect('[');
            std::size_t size = p.integer();
            p.expect(']');
            p.finish();
            if (name == "qreg") {
                if (layout || reg != "q") {
                    p.fail("expected a single quantum register named q");
                }
                auto n = detail::board_size_for_register(size);
                if (!n) {
                    p.fail("register size " + std::to_string(size) + " is not a solver layout");
                }
                layout.emplace(*n);
                qreg_size = size;
            } else {
                if (have_creg || reg != "c" || size != qreg_size) {
                    p.fail("expected creg c matching the quantum register");
                }
                have_creg = true;
            }
            continue;
        }
        if (!layout) {
            p.fail("gate before qreg declaration");
        }
        if (name == "measure") {
            auto reg = p.word();
            if (reg != "q" || !p.accept('-') || !p.accept('>') || p.word() != "c") {
                p.fail("expected 'measure q -> c'");
            }
            p.finish();
            continue;
        }

        Gate g;
        if (name == "x" || name == "h") {
            QubitIndex q = p.qubit("q", qreg_size);
            g = name == "x" ? Gate::x(q) : Gate::h(q);
        } else if (name == "ry") {
            p.expect('(');
            double theta = p.real();
            p.expect(')');
            g = Gate::ry(p.qubit("q", qreg_size), theta);
        } else if (name == "cx" || name == "cz") {
            QubitIndex a = p.qubit("q", qreg_size);
            p.expect(',');
            QubitIndex b = p.qubit("q", qreg_size);
            g = name == "cx" ? Gate::cx(a, b) : Gate::cz(a, b);
        } else if (name == "ccx") {
            QubitIndex a = p.qubit("q", qreg_size);
            p.expect(',');
            QubitIndex b = p.qubit("q", qreg_size);
            p.expect(',');
            QubitIndex t = p.qubit("q", qreg_size);
            g = Gate::ccx(a, b, t);
        } else {
            p.fail("unsupported statement '" + std::string(name) + "'");
        }
        p.finish();
        try {
            validate_gate(g, qreg_size);
        } catch (const IndexError &e) {
            p.fail(e.what());
        }
        gates.push_back(g);
    }
    if (!layout) {
        throw ParseError(line_no, "missing qreg declaration");
    }
    return Circuit{*layout, std::move(gates)};
}

}  // namespace nqueens
