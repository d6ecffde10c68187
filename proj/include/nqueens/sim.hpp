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

// Sparse statevector engine.
//
// A state is the list of its nonzero basis terms, each label stored once.
// X, CX, CCX and CZ rewrite labels or negate amplitudes in place: they are
// bijections on the basis so no merging is needed and no arithmetic touches
// the amplitude magnitudes. H, RY and CRY split every affected term in two
// and the halves are merged back by label.
//
// For the solver circuit the support never exceeds 2 * n^n terms (the column
// parity sandwich doubles it transiently), which is what makes 50-76 qubit
// runs exact and cheap.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "nqueens/basis_label.hpp"
#include "nqueens/circuit.hpp"
#include "nqueens/errors.hpp"

namespace nqueens {

using Amplitude = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-12;

/// Name of the generator behind sample(); recorded in reports.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

struct Term {
    BasisLabel label;
    Amplitude amplitude;
};

namespace detail {

/// Runs fn(begin, end) over `workers` contiguous slices of [0, size).
template <typename Fn>
void for_each_slice(std::size_t size, unsigned workers, Fn &&fn) {
    if (workers <= 1 || size < 2) {
        fn(std::size_t{0}, size);
        return;
    }
    const std::size_t slices = std::min<std::size_t>(workers, size);
    std::vector<std::thread> threads;
    threads.reserve(slices);
    for (std::size_t w = 0; w < slices; w++) {
        const std::size_t begin = size * w / slices;
        const std::size_t end = size * (w + 1) / slices;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto &t : threads) {
        t.join();
    }
}

/// Real 2x2 matrix acting on one qubit: out[b'] = sum_b m[b'][b] * in[b].
struct RealMatrix2 {
    double m00, m01, m10, m11;
};

inline RealMatrix2 hadamard_matrix() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {s, s, s, -s};
}

inline RealMatrix2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {c, -s, s, c};
}

}  // namespace detail

class SparseState {
   public:
    /// |0...0> on the given register.
    explicit SparseState(RegisterLayout layout) : layout_(layout) {
        if (layout_.total() > BasisLabel::kCapacity) {
            throw SizeError("register of " + std::to_string(layout_.total()) + " qubits exceeds the " +
                            std::to_string(BasisLabel::kCapacity) + "-qubit label capacity");
        }
        terms_.push_back({BasisLabel{}, Amplitude{1.0, 0.0}});
    }

    /// Builds a state from explicit terms; repeated labels are summed and
    /// sub-threshold terms dropped. No normalization is applied.
    static SparseState from_terms(RegisterLayout layout, std::span<const Term> terms) {
        SparseState state(layout);
        state.terms_.clear();
        std::unordered_map<BasisLabel, std::size_t, BitLabelHash> index;
        for (const Term &t : terms) {
            auto [it, fresh] = index.try_emplace(t.label, state.terms_.size());
            if (fresh) {
                state.terms_.push_back(t);
            } else {
                state.terms_[it->second].amplitude += t.amplitude;
            }
        }
        state.prune();
        return state;
    }

    const RegisterLayout &layout() const {
        return layout_;
    }

    std::size_t size() const {
        return terms_.size();
    }

    /// Terms in internal order, which depends on gate history and worker count.
    std::span<const Term> terms() const {
        return terms_;
    }

    double norm_squared() const {
        double total = 0.0;
        for (const Term &t : terms_) {
            total += std::norm(t.amplitude);
        }
        return total;
    }

    /// Linear scan; zero when the label is not in the support.
    Amplitude amplitude(const BasisLabel &label) const {
        for (const Term &t : terms_) {
            if (t.label == label) {
                return t.amplitude;
            }
        }
        return {0.0, 0.0};
    }

    /// Applies the gate in place. With workers > 1 the term list is split
    /// across threads; per-label sums are accumulated in the same order as
    /// the single-threaded path, so amplitudes are bit-identical.
    void apply(const Gate &gate, unsigned workers = 1) {
        validate_gate(gate, layout_.total());
        const auto &q = gate.qubits;
        switch (gate.kind) {
            case GateKind::X:
                relabel(workers, [t = q[0]](BasisLabel &l) { l.flip(t); });
                break;
            case GateKind::CX:
                relabel(workers, [c = q[0], t = q[1]](BasisLabel &l) {
                    if (l.get(c)) {
                        l.flip(t);
                    }
                });
                break;
            case GateKind::CCX:
                relabel(workers, [c1 = q[0], c2 = q[1], t = q[2]](BasisLabel &l) {
                    if (l.get(c1) && l.get(c2)) {
                        l.flip(t);
                    }
                });
                break;
            case GateKind::CZ:
                detail::for_each_slice(terms_.size(), workers, [&](std::size_t begin, std::size_t end) {
                    for (std::size_t k = begin; k < end; k++) {
                        if (terms_[k].label.get(q[0]) && terms_[k].label.get(q[1])) {
                            terms_[k].amplitude = -terms_[k].amplitude;
                        }
                    }
                });
                break;
            case GateKind::H:
                branch(workers, detail::hadamard_matrix(), q[0], std::nullopt);
                break;
            case GateKind::RY:
                branch(workers, detail::ry_matrix(gate.theta), q[0], std::nullopt);
                break;
            case GateKind::CRY:
                branch(workers, detail::ry_matrix(gate.theta), q[1], q[0]);
                break;
        }
    }

   private:
    template <typename Fn>
    void relabel(unsigned workers, Fn fn) {
        detail::for_each_slice(terms_.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t k = begin; k < end; k++) {
                fn(terms_[k].label);
            }
        });
    }

    void branch(unsigned workers, const detail::RealMatrix2 &m, QubitIndex target, std::optional<QubitIndex> control) {
        // Each input term contributes to at most two outputs: contribution
        // slots 2k and 2k+1 belong to input term k (slot 2k+1 may stay empty).
        const std::size_t n_in = terms_.size();
        std::vector<Term> contrib(2 * n_in);
        std::vector<std::uint8_t> used(2 * n_in, 0);
        detail::for_each_slice(n_in, workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t k = begin; k < end; k++) {
                const Term &t = terms_[k];
                if (control && !t.label.get(*control)) {
                    contrib[2 * k] = t;
                    used[2 * k] = 1;
                    continue;
                }
                const bool bit = t.label.get(target);
                const double to0 = bit ? m.m01 : m.m00;
                const double to1 = bit ? m.m11 : m.m10;
                if (to0 != 0.0) {
                    Term &out = contrib[2 * k];
                    out.label = t.label;
                    out.label.set(target, false);
                    out.amplitude = to0 * t.amplitude;
                    used[2 * k] = 1;
                }
                if (to1 != 0.0) {
                    Term &out = contrib[2 * k + 1];
                    out.label = t.label;
                    out.label.set(target, true);
                    out.amplitude = to1 * t.amplitude;
                    used[2 * k + 1] = 1;
                }
            }
        });

        // Shard outputs by label hash; each shard scans contributions in
        // global order so every label's sum is formed in the same order
        // regardless of how many shards there are.
        const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(workers, n_in));
        std::vector<std::vector<Term>> shard_terms(shards);
        detail::for_each_slice(shards, static_cast<unsigned>(shards), [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; s++) {
                std::unordered_map<BasisLabel, std::size_t, BitLabelHash> index;
                index.reserve(2 * n_in / shards + 1);
                auto &out = shard_terms[s];
                BitLabelHash hasher;
                for (std::size_t k = 0; k < contrib.size(); k++) {
                    if (!used[k] || (shards > 1 && hasher(contrib[k].label) % shards != s)) {
                        continue;
                    }
                    auto [it, fresh] = index.try_emplace(contrib[k].label, out.size());
                    if (fresh) {
                        out.push_back(contrib[k]);
                    } else {
                        out[it->second].amplitude += contrib[k].amplitude;
                    }
                }
            }
        });

        terms_.clear();
        for (auto &part : shard_terms) {
            terms_.insert(terms_.end(), part.begin(), part.end());
        }
        prune();
    }

    void prune() {
        std::erase_if(terms_, [](const Term &t) { return std::abs(t.amplitude) < kPruneThreshold; });
    }

    RegisterLayout layout_;
    std::vector<Term> terms_;
};

inline SparseState init_state(const RegisterLayout &layout) {
    return SparseState(layout);
}

inline SparseState apply_gate(SparseState state, const Gate &gate, unsigned workers = 1) {
    state.apply(gate, workers);
    return state;
}

inline SparseState run(const Circuit &circuit, unsigned workers = 1) {
    SparseState state(circuit.layout);
    for (const Gate &g : circuit.gates) {
        state.apply(g, workers);
    }
    return state;
}

/// Every term with |amplitude| >= the prune threshold, sorted by label.
inline std::vector<Term> readout(const SparseState &state) {
    std::vector<Term> out;
    out.reserve(state.size());
    for (const Term &t : state.terms()) {
        if (std::abs(t.amplitude) >= kPruneThreshold) {
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const Term &a, const Term &b) { return a.label < b.label; });
    return out;
}

/// `<bitstring> <re> <im>` per term, qubit 0 first, in readout order.
inline void dump_readout(const SparseState &state, std::ostream &out) {
    const std::size_t width = state.layout().total();
    char buf[96];
    for (const Term &t : readout(state)) {
        // + 0.0 turns -0.0 into 0.0 so the dump does not depend on sign-of-zero.
        std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", t.amplitude.real() + 0.0, t.amplitude.imag() + 0.0);
        out << t.label.to_string(width) << buf;
    }
}

struct Shot {
    BasisLabel label;
};

/// Independent draws with probability |amplitude|^2, by inverse CDF over
/// the readout order. Reproducible across platforms for a given seed: the
/// mt19937_64 sequence is fixed by the standard and the uniform variate is
/// built from its top 53 bits directly.
inline std::vector<Shot> sample(const SparseState &state, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const double norm = state.norm_squared();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw StateError("cannot sample from a state with squared norm " + std::to_string(norm));
    }
    const auto terms = readout(state);
    std::vector<double> cumulative(terms.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < terms.size(); k++) {
        acc += std::norm(terms[k].amplitude);
        cumulative[k] = acc;
    }
    std::mt19937_64 rng(seed);
    std::vector<Shot> out;
    out.reserve(shots);
    for (std::size_t s = 0; s < shots; s++) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u * acc);
        std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), terms.size() - 1);
        out.push_back({terms[k].label});
    }
    return out;
}

}  // namespace nqueens
