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

#include "nqueens/board.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <tuple>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace nqueens;

TEST(is_diagonal, examples) {
    EXPECT_TRUE(is_diagonal(0, 0, 1, 1));
    EXPECT_FALSE(is_diagonal(0, 0, 1, 2));
    EXPECT_TRUE(is_diagonal(1, 3, 3, 1));
}

TEST(is_diagonal, agrees_with_grid_diagonals) {
    // On a 4x4 grid, two cells share a diagonal iff r+c or r-c agree.
    const std::size_t n = 4;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            for (std::size_t x = 0; x < n; x++) {
                for (std::size_t y = 0; y < n; y++) {
                    bool anti = i + x == j + y;
                    bool main = static_cast<long>(i) - static_cast<long>(x) == static_cast<long>(j) - static_cast<long>(y);
                    EXPECT_EQ(is_diagonal(i, x, j, y), anti || main) << i << x << j << y;
                }
            }
        }
    }
}

TEST(is_diagonal, rejects_non_increasing_rows) {
    EXPECT_THROW(is_diagonal(1, 0, 1, 1), IndexError);
    EXPECT_THROW(is_diagonal(2, 0, 1, 1), IndexError);
}

TEST(is_valid_solution, examples) {
    EXPECT_FALSE(is_valid_solution(BoardConfig::from_permutation({{0, 1, 2, 3}})));
    BoardConfig one(1);
    one.set(0, 0, true);
    EXPECT_TRUE(is_valid_solution(one));
    EXPECT_TRUE(is_valid_solution(BoardConfig::from_permutation({{1, 3, 0, 2}})));
    EXPECT_FALSE(is_valid_solution(BoardConfig(3)));
}

TEST(is_valid_solution, matches_brute_force_over_all_4_by_4_row_boards) {
    const auto expected = oracle::brute_force_solutions(4);
    std::set<std::vector<std::size_t>> valid(expected.begin(), expected.end());
    ASSERT_TRUE(valid.count({1, 3, 0, 2}));
    for (std::size_t code = 0; code < 256; code++) {
        PermutationVector p{{code % 4, code / 4 % 4, code / 16 % 4, code / 64 % 4}};
        EXPECT_EQ(is_valid_solution(BoardConfig::from_permutation(p)), valid.count(p.cols) == 1);
    }
}

TEST(is_valid_solution, equivalent_to_permutation_plus_pairwise_diagonals) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; trial++) {
        std::size_t n = 1 + rng() % 7;
        PermutationVector p;
        for (std::size_t r = 0; r < n; r++) {
            p.cols.push_back(rng() % n);
        }
        std::vector<std::size_t> sorted = p.cols;
        std::sort(sorted.begin(), sorted.end());
        bool is_perm = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        bool no_diag = true;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = i + 1; j < n; j++) {
                no_diag = no_diag && !is_diagonal(i, p.cols[i], j, p.cols[j]);
            }
        }
        EXPECT_EQ(is_valid_solution(BoardConfig::from_permutation(p)), is_perm && no_diag);
    }
}

TEST(solve_classical, examples) {
    EXPECT_EQ(solve_classical(4).size(), 2u);
    EXPECT_TRUE(solve_classical(2).empty());
    EXPECT_EQ(solve_classical(5).size(), 10u);
    EXPECT_THROW(solve_classical(0), SizeError);
}

TEST(solve_classical, equals_brute_force_for_n_up_to_8) {
    const std::size_t counts[] = {1, 0, 0, 2, 10, 4, 40, 92};
    for (std::size_t n = 1; n <= 8; n++) {
        auto got = solve_classical(n);
        auto want = oracle::brute_force_solutions(n);
        ASSERT_EQ(got.size(), counts[n - 1]) << n;
        ASSERT_EQ(want.size(), counts[n - 1]) << n;
        for (std::size_t k = 0; k < got.size(); k++) {
            EXPECT_EQ(got[k].cols, want[k]);
        }
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
}

TEST(solve_classical, closed_under_180_degree_rotation) {
    for (std::size_t n = 4; n <= 8; n++) {
        std::set<PermutationVector> all;
        for (const auto &p : solve_classical(n)) {
            all.insert(p);
        }
        for (const auto &p : all) {
            auto rotated = BoardConfig::from_permutation(p).rotated_180().row_queens();
            ASSERT_TRUE(rotated.has_value());
            EXPECT_TRUE(all.count(*rotated)) << n;
        }
    }
}

TEST(diagonal_pairs, examples) {
    EXPECT_TRUE(diagonal_pairs(1).empty());
    EXPECT_EQ(diagonal_pairs(4).size(), 28u);
    auto two = diagonal_pairs(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], (CellPair{{0, 0}, {1, 1}}));
    EXPECT_EQ(two[1], (CellPair{{0, 1}, {1, 0}}));
}

TEST(diagonal_pairs, count_matches_closed_form_and_brute_force) {
    for (std::size_t n = 1; n <= 12; n++) {
        const std::size_t closed = n * n * (n - 1) - n * (n - 1) - n * (n - 1) * (n - 2) / 3;
        auto pairs = diagonal_pairs(n);
        EXPECT_EQ(pairs.size(), closed) << n;
        EXPECT_EQ(pairs.size(), oracle::brute_force_diagonal_pair_count(n)) << n;
        auto key = [](const CellPair &p) {
            return std::tuple(p.first.row, p.second.row, p.first.col, p.second.col);
        };
        EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end(),
                                   [&](const CellPair &a, const CellPair &b) { return key(a) < key(b); }))
            << n;
        for (const auto &p : pairs) {
            EXPECT_TRUE(is_diagonal(p.first.row, p.first.col, p.second.row, p.second.col));
        }
    }
}

TEST(verify_even_parity_proposition, examples) {
    EXPECT_TRUE(verify_even_parity_proposition(1));
    EXPECT_TRUE(verify_even_parity_proposition(4));
    EXPECT_TRUE(verify_even_parity_proposition(6));
}

TEST(verify_even_parity_proposition, enforces_bound) {
    EXPECT_THROW(verify_even_parity_proposition(11), SizeError);
    EXPECT_THROW(verify_even_parity_proposition(0), SizeError);
    EXPECT_TRUE(verify_even_parity_proposition(3, 3));
    // C(2n-1, n-1) compositions at the default bound stay below 1e5.
    EXPECT_EQ(oracle::binomial(19, 9), 92378u);
    EXPECT_EQ(oracle::binomial(7, 3), 35u);
    EXPECT_EQ(oracle::binomial(11, 5), 462u);
}

TEST(BoardConfig, text_round_trip) {
    auto b = BoardConfig::from_permutation({{1, 3, 0, 2}});
    EXPECT_EQ(b.to_text(), "0100\n0001\n1000\n0010\n");
    EXPECT_EQ(BoardConfig::from_text(b.to_text()), b);
    EXPECT_THROW(BoardConfig::from_text("01\n1\n"), SizeError);
    EXPECT_THROW(BoardConfig::from_text("0x\n10\n"), SizeError);
    EXPECT_THROW(BoardConfig(0), SizeError);
}

TEST(BoardConfig, row_queens_requires_single_queen_rows) {
    BoardConfig b(2);
    b.set(0, 0, true);
    EXPECT_FALSE(b.row_queens().has_value());
    b.set(1, 0, true);
    ASSERT_TRUE(b.row_queens().has_value());
    EXPECT_EQ(b.row_queens()->cols, (std::vector<std::size_t>{0, 0}));
}

TEST(PermutationVector, json_form) {
    nlohmann::json j = PermutationVector{{1, 3, 0, 2}};
    EXPECT_EQ(j.dump(), R"({"cols":[1,3,0,2],"n":4})");
    EXPECT_EQ(j.get<PermutationVector>().cols, (std::vector<std::size_t>{1, 3, 0, 2}));
    EXPECT_THROW(nlohmann::json::parse(R"({"n":3,"cols":[0]})").get<PermutationVector>(), SizeError);
}
