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

#ifndef CEDIST_PAULI_HPP
#define CEDIST_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cedist/laurent.hpp"

namespace cedist {

// Phase-free Pauli letter. Bit 0 is the X component, bit 1 the Z component,
// so the letterwise product is XOR and Y = (z=1, x=1).
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline Pauli pauli_from_bits(bool z, bool x) {
    return static_cast<Pauli>((z ? 2 : 0) | (x ? 1 : 0));
}
inline bool pauli_z_bit(Pauli p) { return static_cast<std::uint8_t>(p) & 2; }
inline bool pauli_x_bit(Pauli p) { return static_cast<std::uint8_t>(p) & 1; }
inline Pauli pauli_mul(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool pauli_anticommute(Pauli a, Pauli b) {
    return a != Pauli::I && b != Pauli::I && a != b;
}
char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// One basic generator (or any doubly infinite Pauli sequence of finite
/// support) as a length-2n vector of binary Laurent polynomials, split into
/// a Z part and an X part. Frame t, qubit q carries the letter determined by
/// (z[q] coefficient at D^t, x[q] coefficient at D^t).
struct PauliVec {
    std::vector<LaurentPoly> z;
    std::vector<LaurentPoly> x;

    PauliVec() = default;
    PauliVec(std::vector<LaurentPoly> z_part, std::vector<LaurentPoly> x_part);

    size_t frame_size() const { return z.size(); }
    bool is_identity() const;

    Pauli letter(size_t qubit, int frame) const;

    /// Smallest frame holding a non-identity letter; 0 for the identity.
    int delay() const;
    /// Largest frame holding a non-identity letter; 0 for the identity.
    int degree() const;
    /// Number of non-identity letters.
    int weight() const;

    PauliVec operator+(const PauliVec& other) const;
    bool operator==(const PauliVec& other) const = default;

    /// Shift by k frames (multiply every entry by D^k).
    PauliVec shifted(int k) const;
    /// Scalar multiplication by a polynomial f, entrywise.
    PauliVec scaled(const LaurentPoly& f) const;
};

/// Explicit window of a Pauli sequence: `frames[t]` holds the n letters of
/// frame `start_frame + t`. Phases are not tracked.
struct PauliWindow {
    size_t n = 0;
    int start_frame = 0;
    std::vector<std::vector<Pauli>> frames;

    /// Bar-separated letter string, e.g. "ZZX|IXZ|XZZ|ZII".
    std::string str() const;
    static PauliWindow parse(std::string_view text, int start_frame = 0);

    /// Letterwise phase-free product; windows must agree in n, start, length.
    PauliWindow operator*(const PauliWindow& other) const;
    bool operator==(const PauliWindow& other) const = default;
};

/// Materializes frames first_frame..last_frame (inclusive) of N(u).
PauliWindow to_pauli_window(const PauliVec& u, int first_frame, int last_frame);

/// Reads a window back into polynomial form.
PauliVec pauli_vec_from_window(const PauliWindow& w);

/// The shifted symplectic product
///   (u (.) v)(D) = z(D^-1) . x'(D) + x(D^-1) . z'(D),
/// whose coefficient at D^i is 1 exactly when N(v) anticommutes with the
/// i-frame right shift of N(u). Throws on frame-size mismatch.
LaurentPoly shifted_symplectic(const PauliVec& u, const PauliVec& v);

/// True when coefficient (u (.) v)_i vanishes.
bool commutes_at_shift(const PauliVec& u, const PauliVec& v, int i);

}  // namespace cedist

#endif
