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

#ifndef CEDIST_GENERATOR_SET_HPP
#define CEDIST_GENERATOR_SET_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cedist/pauli.hpp"

namespace cedist {

/// Error for inputs that are structurally valid but violate a construction
/// precondition (non-commuting where commuting is required, mixed CSS rows,
/// dependent generators, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

/// How a generator set was produced. Determines the catalytic-ebit count
/// and is re-inferred from the column layout when a set is read from disk.
enum class Construction { Raw, Single, Multi, Css };

/// A convolutional stabilizer: m basic generators over frames of
/// n_noisy + ebit columns. The stabilizer itself is the set of all
/// frame shifts of these generators; ebit columns (always the trailing
/// columns of each frame) are catalytic and noiseless.
struct GeneratorSet {
    size_t n_noisy = 0;
    size_t ebit_cols = 0;
    std::vector<PauliVec> gens;
    Construction construction = Construction::Raw;

    GeneratorSet() = default;
    /// Validates frame sizes and rejects all-identity generators.
    GeneratorSet(size_t n_noisy, size_t ebit_cols, std::vector<PauliVec> gens,
                 Construction construction = Construction::Raw);

    size_t n_total() const { return n_noisy + ebit_cols; }
    size_t generator_count() const { return gens.size(); }

    /// Maximum generator degree after delay normalization.
    int constraint_length() const;

    /// Shifts every generator so its first non-identity frame is frame 0.
    /// A semantic no-op for the shift-closed stabilizer.
    GeneratorSet delay_normalized() const;
};

/// True when every pair of generators (including each with itself) has an
/// identically-zero shifted symplectic product, i.e. all shifts commute.
bool check_commuting(const GeneratorSet& g);

/// Single-generator augmentation: appends one column carrying the positive
/// part of (u (.) u) in the Z part and 1 in the X part. The result commutes
/// with all of its shifts.
GeneratorSet augment_single(const PauliVec& u);

enum class AugmentVariant { Upper, Lower };

/// Multi-generator augmentation: appends m columns whose Z part is the
/// (upper or lower) triangular matrix of shifted symplectic products and
/// whose X part is the identity. Pairwise products of the result vanish.
GeneratorSet augment_multi(const std::vector<PauliVec>& gens,
                           AugmentVariant variant = AugmentVariant::Lower);

/// A quaternary convolutional generator. Each position holds one polynomial
/// over F4 = {0, 1, w, W}, stored in the basis {w, W} (so 1 = w + W).
struct GF4Generator {
    struct Entry {
        LaurentPoly omega;      // coefficient of w
        LaurentPoly omega_bar;  // coefficient of W
    };
    std::vector<Entry> entries;
    size_t size() const { return entries.size(); }
};

/// Imports a quaternary code: returns the two Pauli generators N(W . g) and
/// N(w . g) under the map 0 -> I, w -> X, 1 -> Y, W -> Z.
std::array<PauliVec, 2> import_gf4(const GF4Generator& g);

/// Output of the CSS orthogonalization: symplectic pairs with their product
/// polynomials, plus the leftover isotropic rows.
struct CssDecomposition {
    struct Pair {
        PauliVec u;  // purely-Z row
        PauliVec v;  // purely-X row
        LaurentPoly f;  // (u (.) v)(D), nonzero
    };
    std::vector<Pair> pairs;
    std::vector<PauliVec> isotropic;
    size_t frame_size = 0;
};

/// Gram-Schmidt pairing with respect to the shifted symplectic product on
/// rows drawn from a purely-Z family and a purely-X family. Rows that end up
/// orthogonal to everything are returned as isotropic. Updated rows are
/// divided by their entrywise greatest common factor. Throws DomainError on
/// rows mixing Z and X components.
CssDecomposition css_gram_schmidt(std::vector<PauliVec> rows);

/// Stacks u_1..u_c, v_1..v_c, isotropic rows, and appends c ebit columns:
/// f_i(D^-1) on the Z side of u_i and 1 on the X side of v_i. With no pairs
/// the rows are returned unchanged and no column is added.
GeneratorSet css_augment(const CssDecomposition& d);

/// True when each generator's entries share only a power of D as a common
/// divisor, so a finite-depth (noncatastrophic) decoding circuit exists.
bool noncatastrophic_check(const GeneratorSet& g);

struct YieldInfo {
    Rational yield;              // (n - m) / n
    long long catalytic_ebits;   // startup requirement, n*nu or (n+m)*nu
};

YieldInfo protocol_yield(const GeneratorSet& g);

}  // namespace cedist

#endif
