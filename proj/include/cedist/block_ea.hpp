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

#ifndef CEDIST_BLOCK_EA_HPP
#define CEDIST_BLOCK_EA_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cedist/generator_set.hpp"
#include "cedist/pauli.hpp"

namespace cedist {

/// A p x 2q binary matrix (Z block | X block) whose rows are phase-free
/// Pauli operators on q qubits.
struct SymplecticMatrix {
    size_t rows = 0;
    size_t qubits = 0;
    std::vector<std::vector<std::uint8_t>> zbits;  // rows x qubits
    std::vector<std::vector<std::uint8_t>> xbits;

    SymplecticMatrix() = default;
    SymplecticMatrix(size_t rows, size_t qubits);

    /// Builds from Pauli-letter rows such as {"ZXZI", "ZZIZ"}.
    static SymplecticMatrix from_pauli_rows(const std::vector<std::string>& rows);
    /// Accepts either Pauli-letter lines or "zbits|xbits" lines.
    static SymplecticMatrix parse(std::string_view text);

    Pauli letter(size_t row, size_t qubit) const;
    std::string pauli_row(size_t row) const;
    std::string str() const;

    /// Standard (not shifted) symplectic product of two rows.
    int symplectic_product(size_t row_a, size_t row_b) const;
    bool is_abelian() const;
    bool row_is_zero(size_t row) const;

    // Clifford column semantics: CNOT i->j adds X column i to X column j and
    // Z column j to Z column i; H swaps the Z and X columns of one qubit;
    // P adds the X column into the Z column; SWAP exchanges both columns.
    void apply_cnot(size_t ctrl, size_t tgt);
    void apply_hadamard(size_t qubit);
    void apply_phase(size_t qubit);
    void apply_swap(size_t a, size_t b);

    void row_add(size_t src, size_t dst);  // dst += src
    void row_swap(size_t a, size_t b);

    bool operator==(const SymplecticMatrix& other) const = default;
};

struct CliffordOp {
    enum class Kind { Cnot, H, P, Swap, RowAdd, RowSwap };
    Kind kind;
    size_t a = 0;
    size_t b = 0;
    bool is_gate() const { return kind != Kind::RowAdd && kind != Kind::RowSwap; }
    std::string str() const;
};

/// Ordered record of the gates and row operations performed by decompose().
/// Row operations are bookkeeping, not gates; the script prints them as
/// comments.
struct CliffordCircuit {
    std::vector<CliffordOp> ops;
    size_t gate_count() const;
    std::string script() const;
};

/// Applies one op to a matrix (gates touch columns, row ops touch rows).
void apply_op(SymplecticMatrix& m, const CliffordOp& op);

/// Raised by decompose() when a generator is a product of the others.
struct DependentRowError : DomainError {
    size_t row;  // zero-based
    explicit DependentRowError(size_t r)
        : DomainError("dependent generator at row " + std::to_string(r + 1)), row(r) {}
};

struct EADecomposition {
    size_t ebits = 0;     // c
    size_t ancillas = 0;  // s
    size_t logicals = 0;  // k = q - s - c
    CliffordCircuit circuit;
    SymplecticMatrix canonical;
};

/// Reduces a generator matrix to canonical form (a Z/X pair per ebit, then a
/// single Z row per ancilla, on consecutive qubits) by symplectic row pairing
/// and Clifford column operations, recording the circuit. The ebit count is
/// minimal. Throws DependentRowError on rank-deficient input.
EADecomposition decompose(const SymplecticMatrix& input);

/// Intermediate matrix states produced while re-applying a decomposition's
/// ops to `input`; snapshot k is the state after op k. Used to audit the
/// recorded circuit against a known reduction sequence.
std::vector<SymplecticMatrix> replay_snapshots(const SymplecticMatrix& input,
                                               const CliffordCircuit& circuit);

/// Appends the receiver-side ebit columns to the canonical matrix (X and Z
/// on the partner of each symplectic pair) and conjugates back through
/// the recorded gates. The result commutes under the standard symplectic
/// product extended over sender plus receiver qubits.
SymplecticMatrix encoded_stabilizer(const EADecomposition& d);

}  // namespace cedist

#endif
