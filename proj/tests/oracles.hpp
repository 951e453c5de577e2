// Copyright 2026 The cedist Authors
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

// Brute-force reference implementations used only by tests. Everything here
// stays independent of the library code paths it checks: commutation is
// counted letter by letter on explicit windows, minimum-weight decoding is
// exhaustive search, and symplectic ranks come from plain Gaussian
// elimination on the Gram matrix.

#ifndef CEDIST_TESTS_ORACLES_HPP
#define CEDIST_TESTS_ORACLES_HPP

#include <optional>
#include <random>
#include <vector>

#include "cedist/block_ea.hpp"
#include "cedist/pauli.hpp"
#include "cedist/sim.hpp"

namespace testing {

inline cedist::LaurentPoly random_poly(std::mt19937_64& rng, int min_exp, int max_exp,
                                       double density = 0.4) {
    cedist::LaurentPoly r;
    for (int e = min_exp; e <= max_exp; e++)
        if ((rng() >> 11) * 0x1.0p-53 < density) r += cedist::LaurentPoly::monomial(e);
    return r;
}

inline cedist::PauliVec random_pauli_vec(std::mt19937_64& rng, size_t n, int min_exp = -3,
                                         int max_exp = 3) {
    std::vector<cedist::LaurentPoly> z, x;
    for (size_t q = 0; q < n; q++) {
        z.push_back(random_poly(rng, min_exp, max_exp));
        x.push_back(random_poly(rng, min_exp, max_exp));
    }
    return cedist::PauliVec(std::move(z), std::move(x));
}

inline cedist::PauliVec random_nonzero_pauli_vec(std::mt19937_64& rng, size_t n, int min_exp = -3,
                                                 int max_exp = 3) {
    while (true) {
        cedist::PauliVec v = random_pauli_vec(rng, n, min_exp, max_exp);
        if (!v.is_identity()) return v;
    }
}

/// True when N(v) and the i-frame right shift of N(u) anticommute, counted
/// letter by letter over an explicit window covering both supports.
inline bool window_anticommute_oracle(const cedist::PauliVec& u, const cedist::PauliVec& v, int i) {
    int lo = -64, hi = 64;
    int count = 0;
    for (int f = lo; f <= hi; f++) {
        for (size_t q = 0; q < u.frame_size(); q++) {
            cedist::Pauli a = u.letter(q, f - i);  // u shifted right by i frames
            cedist::Pauli b = v.letter(q, f);
            count += cedist::pauli_anticommute(a, b);
        }
    }
    return count % 2 == 1;
}

/// Minimum weight over every error sequence with per-frame weight <= w_max
/// whose syndrome stream equals `target`, by iterative-deepening exhaustive
/// search. Returns nullopt when no sequence up to `weight_cap` matches.
inline std::optional<int> exhaustive_min_weight(const cedist::GeneratorSet& g,
                                                const cedist::SyndromeStream& target, long frames,
                                                int w_max, int weight_cap) {
    using namespace cedist;
    std::vector<std::vector<Pauli>> frame_patterns;
    std::vector<Pauli> pattern(g.n_total(), Pauli::I);
    auto rec = [&](auto&& self, size_t q, int left) -> void {
        if (q == g.n_noisy) {
            frame_patterns.push_back(pattern);
            return;
        }
        for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y}) {
            if (p != Pauli::I && left == 0) continue;
            pattern[q] = p;
            self(self, q + 1, left - (p != Pauli::I));
        }
        pattern[q] = Pauli::I;
    };
    rec(rec, 0, w_max);

    ErrorFrameSeq err = ErrorFrameSeq::identity(g.n_total(), static_cast<size_t>(frames));
    auto weight_of = [](const std::vector<Pauli>& f) {
        int w = 0;
        for (Pauli p : f) w += p != Pauli::I;
        return w;
    };
    // Exact-budget passes: the smallest budget admitting a match is the minimum.
    auto exact = [&](auto&& self, long t, int left) -> bool {
        if (t == frames) return left == 0 && syndromes(err, g) == target;
        for (const auto& f : frame_patterns) {
            int fw = weight_of(f);
            if (fw > left) continue;
            err.frames[static_cast<size_t>(t)] = f;
            if (self(self, t + 1, left - fw)) return true;
        }
        err.frames[static_cast<size_t>(t)].assign(g.n_total(), Pauli::I);
        return false;
    };
    for (int w = 0; w <= weight_cap; w++) {
        err = ErrorFrameSeq::identity(g.n_total(), static_cast<size_t>(frames));
        if (exact(exact, 0, w)) return w;
    }
    return std::nullopt;
}

/// Bounded-window fraction-field membership: true when some nonzero
/// polynomial combination of `row`'s shifts equals a combination of the
/// basis rows' shifts, with every support kept inside a `frames`-wide
/// window. Plain GF(2) elimination on exploded coefficient vectors.
inline bool windowed_fraction_membership(const std::vector<cedist::PauliVec>& basis_rows,
                                         const cedist::PauliVec& row, size_t n, long frames) {
    using namespace cedist;
    auto explode = [&](const PauliVec& v, int shift) {
        std::vector<std::uint8_t> bits(static_cast<size_t>(frames) * n * 2, 0);
        PauliVec s = v.shifted(shift);
        for (long f = 0; f < frames; f++)
            for (size_t q = 0; q < n; q++) {
                bits[(static_cast<size_t>(f) * n + q) * 2] = s.z[q].coeff(static_cast<int>(f));
                bits[(static_cast<size_t>(f) * n + q) * 2 + 1] = s.x[q].coeff(static_cast<int>(f));
            }
        return bits;
    };
    std::vector<std::vector<std::uint8_t>> mat;
    auto add_shifts = [&](const PauliVec& v) {
        if (v.is_identity()) return;
        int span = v.degree() - v.delay();
        for (int j = 0; j + span < frames; j++) mat.push_back(explode(v, j - v.delay()));
    };
    auto rank_of = [&](const std::vector<std::vector<std::uint8_t>>& rows_in) {
        auto m = rows_in;
        size_t rank = 0;
        size_t cols = m.empty() ? 0 : m[0].size();
        for (size_t col = 0; col < cols && rank < m.size(); col++) {
            size_t pivot = m.size();
            for (size_t r = rank; r < m.size(); r++)
                if (m[r][col]) {
                    pivot = r;
                    break;
                }
            if (pivot == m.size()) continue;
            std::swap(m[rank], m[pivot]);
            for (size_t r = 0; r < m.size(); r++)
                if (r != rank && m[r][col])
                    for (size_t c2 = col; c2 < cols; c2++) m[r][c2] ^= m[rank][c2];
            rank++;
        }
        return rank;
    };
    for (const auto& b : basis_rows) add_shifts(b);
    size_t basis_rank = rank_of(mat);
    size_t before = mat.size();
    add_shifts(row);
    size_t family = mat.size() - before;
    size_t total_rank = rank_of(mat);
    // Shifts of a nonzero row are independent among themselves, so any rank
    // drop means a combination of them lies in the basis span.
    return total_rank < basis_rank + family;
}

/// 2c equals the GF(2) rank of the antisymmetric Gram matrix of pairwise
/// symplectic products, computed independently of decompose().
inline size_t gram_rank_oracle(const cedist::SymplecticMatrix& m) {
    size_t p = m.rows;
    std::vector<std::vector<std::uint8_t>> gram(p, std::vector<std::uint8_t>(p, 0));
    for (size_t i = 0; i < p; i++)
        for (size_t j = 0; j < p; j++) gram[i][j] = static_cast<std::uint8_t>(m.symplectic_product(i, j));
    size_t rank = 0;
    size_t col = 0;
    for (; col < p && rank < p; col++) {
        size_t pivot = p;
        for (size_t r = rank; r < p; r++)
            if (gram[r][col]) {
                pivot = r;
                break;
            }
        if (pivot == p) continue;
        std::swap(gram[rank], gram[pivot]);
        for (size_t r = 0; r < p; r++) {
            if (r != rank && gram[r][col])
                for (size_t c2 = 0; c2 < p; c2++) gram[r][c2] ^= gram[rank][c2];
        }
        rank++;
    }
    return rank;
}

}  // namespace testing

#endif
