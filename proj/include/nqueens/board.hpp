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

// Classical side of the N-Queens problem: boards, the row/column/diagonal
// criteria, a backtracking solver used as the reference oracle, and the
// enumeration of diagonally attacking cell pairs that the quantum circuit
// turns into Toffoli gates.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nqueens/errors.hpp"

namespace nqueens {

/// One queen per row: cols[r] is the column of the queen in row r.
struct PermutationVector {
    std::vector<std::size_t> cols;

    std::size_t n() const {
        return cols.size();
    }

    auto operator<=>(const PermutationVector &) const = default;
    bool operator==(const PermutationVector &) const = default;
};

/// N x N occupancy matrix, row-major; cell (r, c) == 1 means a queen there.
class BoardConfig {
   public:
    explicit BoardConfig(std::size_t n) : n_(n), cells_(n * n, 0) {
        if (n == 0) {
            throw SizeError("board size must be at least 1");
        }
    }

    static BoardConfig from_permutation(const PermutationVector &perm) {
        BoardConfig board(perm.n());
        for (std::size_t r = 0; r < perm.n(); r++) {
            if (perm.cols[r] >= perm.n()) {
                throw IndexError("permutation column out of range in row " + std::to_string(r));
            }
            board.set(r, perm.cols[r], true);
        }
        return board;
    }

    /// Parses n lines of n '0'/'1' characters. Blank trailing lines are ignored.
    static BoardConfig from_text(std::string_view text) {
        std::vector<std::string> rows;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (!line.empty()) {
                rows.push_back(line);
            }
        }
        if (rows.empty()) {
            throw SizeError("empty board text");
        }
        BoardConfig board(rows.size());
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (rows[r].size() != rows.size()) {
                throw SizeError("board row " + std::to_string(r) + " has wrong length");
            }
            for (std::size_t c = 0; c < rows.size(); c++) {
                char ch = rows[r][c];
                if (ch != '0' && ch != '1') {
                    throw SizeError("board cell must be '0' or '1'");
                }
                board.set(r, c, ch == '1');
            }
        }
        return board;
    }

    std::size_t n() const {
        return n_;
    }

    bool at(std::size_t row, std::size_t col) const {
        return cells_[row * n_ + col] != 0;
    }

    void set(std::size_t row, std::size_t col, bool occupied) {
        cells_[row * n_ + col] = occupied ? 1 : 0;
    }

    std::size_t row_sum(std::size_t row) const {
        std::size_t s = 0;
        for (std::size_t c = 0; c < n_; c++) {
            s += cells_[row * n_ + c];
        }
        return s;
    }

    std::size_t col_sum(std::size_t col) const {
        std::size_t s = 0;
        for (std::size_t r = 0; r < n_; r++) {
            s += cells_[r * n_ + col];
        }
        return s;
    }

    /// The column of each row's queen, or nullopt if some row has != 1 queen.
    std::optional<PermutationVector> row_queens() const {
        PermutationVector perm;
        perm.cols.reserve(n_);
        for (std::size_t r = 0; r < n_; r++) {
            if (row_sum(r) != 1) {
                return std::nullopt;
            }
            for (std::size_t c = 0; c < n_; c++) {
                if (at(r, c)) {
                    perm.cols.push_back(c);
                }
            }
        }
        return perm;
    }

    /// Rotation by 180 degrees: cell (r, c) moves to (n-1-r, n-1-c).
    BoardConfig rotated_180() const {
        BoardConfig out(n_);
        std::reverse_copy(cells_.begin(), cells_.end(), out.cells_.begin());
        return out;
    }

    std::string to_text() const {
        std::string out;
        out.reserve(n_ * (n_ + 1));
        for (std::size_t r = 0; r < n_; r++) {
            for (std::size_t c = 0; c < n_; c++) {
                out.push_back(at(r, c) ? '1' : '0');
            }
            out.push_back('\n');
        }
        return out;
    }

    /// Human-facing grid: 'Q' for queens, '.' for empty cells.
    std::string to_grid() const {
        std::string out;
        for (std::size_t r = 0; r < n_; r++) {
            for (std::size_t c = 0; c < n_; c++) {
                if (c > 0) {
                    out.push_back(' ');
                }
                out.push_back(at(r, c) ? 'Q' : '.');
            }
            out.push_back('\n');
        }
        return out;
    }

    bool operator==(const BoardConfig &) const = default;

   private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

/// Whether cells (i, x) and (j, y) share a diagonal. Requires j > i.
inline bool is_diagonal(std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
    if (j <= i) {
        throw IndexError("is_diagonal requires the second row to be below the first (j > i)");
    }
    std::size_t dx = x > y ? x - y : y - x;
    return dx == j - i;
}

/// Row, column and diagonal criteria all hold.
inline bool is_valid_solution(const BoardConfig &board) {
    const std::size_t n = board.n();
    for (std::size_t k = 0; k < n; k++) {
        if (board.row_sum(k) != 1 || board.col_sum(k) != 1) {
            return false;
        }
    }
    // Diagonals indexed by r + c and r - c + (n - 1).
    std::vector<std::size_t> sums(2 * n - 1, 0);
    std::vector<std::size_t> diffs(2 * n - 1, 0);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            if (board.at(r, c)) {
                if (++sums[r + c] > 1 || ++diffs[r + n - 1 - c] > 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

inline void place_queens(std::size_t row, PermutationVector &partial, std::vector<bool> &used_cols,
                         std::vector<PermutationVector> &out) {
    const std::size_t n = used_cols.size();
    if (row == n) {
        out.push_back(partial);
        return;
    }
    for (std::size_t col = 0; col < n; col++) {
        if (used_cols[col]) {
            continue;
        }
        bool attacked = false;
        for (std::size_t prev = 0; prev < row && !attacked; prev++) {
            attacked = is_diagonal(prev, partial.cols[prev], row, col);
        }
        if (attacked) {
            continue;
        }
        used_cols[col] = true;
        partial.cols.push_back(col);
        place_queens(row + 1, partial, used_cols, out);
        partial.cols.pop_back();
        used_cols[col] = false;
    }
}

}  // namespace detail

/// Every N-Queens solution, in lexicographic order of the column vector.
/// Row-by-row backtracking; columns are tried in ascending order so the
/// output is already sorted.
inline std::vector<PermutationVector> solve_classical(std::size_t n) {
    if (n == 0) {
        throw SizeError("board size must be at least 1");
    }
    std::vector<PermutationVector> out;
    PermutationVector partial;
    partial.cols.reserve(n);
    std::vector<bool> used(n, false);
    detail::place_queens(0, partial, used, out);
    return out;
}

struct Cell {
    std::size_t row;
    std::size_t col;

    auto operator<=>(const Cell &) const = default;
};

struct CellPair {
    Cell first;
    Cell second;

    auto operator<=>(const CellPair &) const = default;
};

/// All cell pairs ((i,x),(j,y)) with j > i lying on a common diagonal,
/// ordered by i, then j, then x, then y.
inline std::vector<CellPair> diagonal_pairs(std::size_t n) {
    if (n == 0) {
        throw SizeError("board size must be at least 1");
    }
    std::vector<CellPair> out;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            const std::size_t d = j - i;
            for (std::size_t x = 0; x < n; x++) {
                // y = x - d comes before y = x + d.
                if (x >= d) {
                    out.push_back({{i, x}, {j, x - d}});
                }
                if (x + d < n) {
                    out.push_back({{i, x}, {j, x + d}});
                }
            }
        }
    }
    return out;
}

inline constexpr std::size_t kDefaultParityBound = 10;

/// Exhaustively checks that every way of writing n as an ordered sum of n
/// non-negative integers has an even number of even parts (0 is even).
/// There are C(2n-1, n-1) such compositions, so n is capped at max_n.
inline bool verify_even_parity_proposition(std::size_t n, std::size_t max_n = kDefaultParityBound) {
    if (n == 0) {
        throw SizeError("proposition is stated for n >= 1");
    }
    if (n > max_n) {
        throw SizeError("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(max_n));
    }
    // parts_left parts still to choose summing to remaining; evens counts so far.
    auto all_even = [n](auto &&self, std::size_t parts_left, std::size_t remaining, std::size_t evens) -> bool {
        if (parts_left == 1) {
            return (evens + (remaining % 2 == 0 ? 1 : 0)) % 2 == 0;
        }
        for (std::size_t part = 0; part <= remaining; part++) {
            if (!self(self, parts_left - 1, remaining - part, evens + (part % 2 == 0 ? 1 : 0))) {
                return false;
            }
        }
        return true;
    };
    return all_even(all_even, n, n, 0);
}

inline void to_json(nlohmann::json &j, const PermutationVector &p) {
    j = nlohmann::json{{"n", p.n()}, {"cols", p.cols}};
}

inline void from_json(const nlohmann::json &j, PermutationVector &p) {
    p.cols = j.at("cols").get<std::vector<std::size_t>>();
    if (j.at("n").get<std::size_t>() != p.cols.size()) {
        throw SizeError("permutation json: n does not match cols length");
    }
}

}  // namespace nqueens
