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

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace nqueens {

/// Fixed-capacity computational basis label; qubit q is bit q.
///
/// Ordering is lexicographic over the bitstring printed qubit-0-first, so
/// sorting labels sorts their printed forms.
template <std::size_t Words>
class BitLabel {
   public:
    static constexpr std::size_t kCapacity = Words * 64;

    constexpr BitLabel() = default;

    constexpr bool get(std::size_t q) const {
        return (words_[q / 64] >> (q % 64)) & 1u;
    }

    constexpr void set(std::size_t q, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (q % 64);
        if (value) {
            words_[q / 64] |= mask;
        } else {
            words_[q / 64] &= ~mask;
        }
    }

    constexpr void flip(std::size_t q) {
        words_[q / 64] ^= std::uint64_t{1} << (q % 64);
    }

    constexpr std::size_t popcount() const {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    constexpr const std::array<std::uint64_t, Words> &words() const {
        return words_;
    }

    /// First `width` bits, qubit 0 leftmost.
    std::string to_string(std::size_t width) const {
        std::string out(width, '0');
        for (std::size_t q = 0; q < width; q++) {
            if (get(q)) {
                out[q] = '1';
            }
        }
        return out;
    }

    static BitLabel from_string(const std::string &bits) {
        BitLabel label;
        for (std::size_t q = 0; q < bits.size(); q++) {
            label.set(q, bits[q] == '1');
        }
        return label;
    }

    constexpr bool operator==(const BitLabel &) const = default;

    constexpr std::strong_ordering operator<=>(const BitLabel &other) const {
        for (std::size_t w = 0; w < Words; w++) {
            const std::uint64_t diff = words_[w] ^ other.words_[w];
            if (diff != 0) {
                // The lowest differing bit decides; whoever holds a 0 there sorts first.
                const int bit = std::countr_zero(diff);
                return ((words_[w] >> bit) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

   private:
    std::array<std::uint64_t, Words> words_{};
};

struct BitLabelHash {
    template <std::size_t Words>
    std::size_t operator()(const BitLabel<Words> &label) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : label.words()) {
            // splitmix64 finalizer per word
            std::uint64_t z = w + h;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            h = z ^ (z >> 31);
        }
        return static_cast<std::size_t>(h);
    }
};

/// 128 qubits: enough for the solver circuit up to n = 9.
using BasisLabel = BitLabel<2>;

}  // namespace nqueens
