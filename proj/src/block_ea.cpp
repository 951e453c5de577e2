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

#include "cedist/block_ea.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cedist {

SymplecticMatrix::SymplecticMatrix(size_t rows_, size_t qubits_)
    : rows(rows_),
      qubits(qubits_),
      zbits(rows_, std::vector<std::uint8_t>(qubits_, 0)),
      xbits(rows_, std::vector<std::uint8_t>(qubits_, 0)) {}

SymplecticMatrix SymplecticMatrix::from_pauli_rows(const std::vector<std::string>& pauli_rows) {
    if (pauli_rows.empty()) throw ParseError("empty Pauli matrix");
    SymplecticMatrix m(pauli_rows.size(), pauli_rows[0].size());
    for (size_t r = 0; r < m.rows; r++) {
        if (pauli_rows[r].size() != m.qubits) throw ParseError("ragged Pauli matrix");
        for (size_t q = 0; q < m.qubits; q++) {
            Pauli p = pauli_from_char(pauli_rows[r][q]);
            m.zbits[r][q] = pauli_z_bit(p);
            m.xbits[r][q] = pauli_x_bit(p);
        }
    }
    return m;
}

SymplecticMatrix SymplecticMatrix::parse(std::string_view text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream is{std::string(text)};
    while (std::getline(is, line)) {
        std::string t;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
        if (t.empty() || t[0] == '#') continue;
        lines.push_back(t);
    }
    if (lines.empty()) throw ParseError("empty Pauli matrix");

    if (lines[0].find('|') == std::string::npos) return from_pauli_rows(lines);

    SymplecticMatrix m(lines.size(), (lines[0].size() - 1) / 2);
    for (size_t r = 0; r < lines.size(); r++) {
        size_t bar = lines[r].find('|');
        if (bar == std::string::npos || bar != m.qubits || lines[r].size() != 2 * m.qubits + 1)
            throw ParseError("bad [Z|X] bit row '" + lines[r] + "'");
        for (size_t q = 0; q < m.qubits; q++) {
            char zc = lines[r][q];
            char xc = lines[r][bar + 1 + q];
            if ((zc != '0' && zc != '1') || (xc != '0' && xc != '1'))
                throw ParseError("bad [Z|X] bit row '" + lines[r] + "'");
            m.zbits[r][q] = zc == '1';
            m.xbits[r][q] = xc == '1';
        }
    }
    return m;
}

Pauli SymplecticMatrix::letter(size_t row, size_t qubit) const {
    return pauli_from_bits(zbits[row][qubit], xbits[row][qubit]);
}

std::string SymplecticMatrix::pauli_row(size_t row) const {
    std::string s(qubits, 'I');
    for (size_t q = 0; q < qubits; q++) s[q] = pauli_char(letter(row, q));
    return s;
}

std::string SymplecticMatrix::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows; r++) os << pauli_row(r) << '\n';
    return os.str();
}

int SymplecticMatrix::symplectic_product(size_t row_a, size_t row_b) const {
    int acc = 0;
    for (size_t q = 0; q < qubits; q++)
        acc ^= (zbits[row_a][q] & xbits[row_b][q]) ^ (xbits[row_a][q] & zbits[row_b][q]);
    return acc;
}

bool SymplecticMatrix::is_abelian() const {
    for (size_t i = 0; i < rows; i++)
        for (size_t j = i + 1; j < rows; j++)
            if (symplectic_product(i, j)) return false;
    return true;
}

bool SymplecticMatrix::row_is_zero(size_t row) const {
    for (size_t q = 0; q < qubits; q++)
        if (zbits[row][q] || xbits[row][q]) return false;
    return true;
}

void SymplecticMatrix::apply_cnot(size_t ctrl, size_t tgt) {
    if (ctrl == tgt || ctrl >= qubits || tgt >= qubits)
        throw std::out_of_range("apply_cnot: bad qubit index");
    for (size_t r = 0; r < rows; r++) {
        xbits[r][tgt] ^= xbits[r][ctrl];
        zbits[r][ctrl] ^= zbits[r][tgt];
    }
}

void SymplecticMatrix::apply_hadamard(size_t qubit) {
    if (qubit >= qubits) throw std::out_of_range("apply_hadamard: bad qubit index");
    for (size_t r = 0; r < rows; r++) std::swap(zbits[r][qubit], xbits[r][qubit]);
}

void SymplecticMatrix::apply_phase(size_t qubit) {
    if (qubit >= qubits) throw std::out_of_range("apply_phase: bad qubit index");
    for (size_t r = 0; r < rows; r++) zbits[r][qubit] ^= xbits[r][qubit];
}

void SymplecticMatrix::apply_swap(size_t a, size_t b) {
    if (a == b || a >= qubits || b >= qubits) throw std::out_of_range("apply_swap: bad qubit index");
    for (size_t r = 0; r < rows; r++) {
        std::swap(zbits[r][a], zbits[r][b]);
        std::swap(xbits[r][a], xbits[r][b]);
    }
}

void SymplecticMatrix::row_add(size_t src, size_t dst) {
    for (size_t q = 0; q < qubits; q++) {
        zbits[dst][q] ^= zbits[src][q];
        xbits[dst][q] ^= xbits[src][q];
    }
}

void SymplecticMatrix::row_swap(size_t a, size_t b) {
    std::swap(zbits[a], zbits[b]);
    std::swap(xbits[a], xbits[b]);
}

std::string CliffordOp::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Cnot: os << "CNOT " << a << ' ' << b; break;
        case Kind::H: os << "H " << a; break;
        case Kind::P: os << "P " << a; break;
        case Kind::Swap: os << "SWAP " << a << ' ' << b; break;
        case Kind::RowAdd: os << "# ROWADD " << a << ' ' << b; break;
        case Kind::RowSwap: os << "# ROWSWAP " << a << ' ' << b; break;
    }
    return os.str();
}

size_t CliffordCircuit::gate_count() const {
    size_t n = 0;
    for (const auto& op : ops) n += op.is_gate();
    return n;
}

std::string CliffordCircuit::script() const {
    std::ostringstream os;
    for (const auto& op : ops) os << op.str() << '\n';
    return os.str();
}

void apply_op(SymplecticMatrix& m, const CliffordOp& op) {
    switch (op.kind) {
        case CliffordOp::Kind::Cnot: m.apply_cnot(op.a, op.b); break;
        case CliffordOp::Kind::H: m.apply_hadamard(op.a); break;
        case CliffordOp::Kind::P: m.apply_phase(op.a); break;
        case CliffordOp::Kind::Swap: m.apply_swap(op.a, op.b); break;
        case CliffordOp::Kind::RowAdd: m.row_add(op.a, op.b); break;
        case CliffordOp::Kind::RowSwap: m.row_swap(op.a, op.b); break;
    }
}

namespace {

// Working state for decompose: the matrix plus the op log.
struct Reduction {
    SymplecticMatrix m;
    CliffordCircuit circuit;

    void gate(CliffordOp::Kind kind, size_t a, size_t b = 0) {
        CliffordOp op{kind, a, b};
        apply_op(m, op);
        circuit.ops.push_back(op);
    }

    bool row_pure_x_at(size_t row, size_t qc) const {
        for (size_t q = 0; q < m.qubits; q++) {
            if (m.zbits[row][q]) return false;
            if (m.xbits[row][q] != (q == qc ? 1 : 0)) return false;
        }
        return true;
    }

    bool row_pure_z_single(size_t row, size_t* where) const {
        size_t hits = 0;
        for (size_t q = 0; q < m.qubits; q++) {
            if (m.xbits[row][q]) return false;
            if (m.zbits[row][q]) {
                *where = q;
                hits++;
            }
        }
        return hits == 1;
    }

    // Reduces row i to the single letter X on qubit qc. `partner_mode` rows
    // start with a Hadamard on qc (a Z entry there is guaranteed by the
    // nonzero symplectic product with the completed X row, and a swap or a
    // CNOT out of qc would disturb that completed row; the Hadamard flips it
    // to a Z row, which the remaining gates leave alone).
    void sweep_row_to_x(size_t i, size_t qc, bool partner_mode, bool prefer_h_at_qc) {
        if (m.row_is_zero(i)) throw DependentRowError(i);
        if (partner_mode) gate(CliffordOp::Kind::H, qc);
        if (!partner_mode && !m.xbits[i][qc]) {
            if (prefer_h_at_qc && m.zbits[i][qc]) {
                // handled by the Hadamard batch below
            } else {
                size_t j = qc;
                for (size_t q = qc + 1; q < m.qubits; q++)
                    if (m.xbits[i][q]) {
                        j = q;
                        break;
                    }
                if (j != qc) {
                    gate(CliffordOp::Kind::Swap, qc, j);
                } else if (!m.zbits[i][qc]) {
                    for (size_t q = qc + 1; q < m.qubits; q++)
                        if (m.zbits[i][q]) {
                            j = q;
                            break;
                        }
                    if (j == qc) throw DependentRowError(i);
                    gate(CliffordOp::Kind::Swap, qc, j);
                }
            }
        }
        while (true) {
            // Hadamards turn pure-Z entries into X entries (including qc),
            // then CNOTs from qc clear every other X entry, then a phase
            // gate clears any Z that the CNOTs folded back onto qc.
            std::vector<size_t> hs;
            if (m.zbits[i][qc] && !m.xbits[i][qc]) hs.push_back(qc);
            for (size_t q = qc + 1; q < m.qubits; q++)
                if (m.zbits[i][q] && !m.xbits[i][q]) hs.push_back(q);
            for (size_t q : hs) gate(CliffordOp::Kind::H, q);
            for (size_t q = qc + 1; q < m.qubits; q++)
                if (m.xbits[i][q]) gate(CliffordOp::Kind::Cnot, qc, q);
            if (m.zbits[i][qc]) gate(CliffordOp::Kind::P, qc);
            if (row_pure_x_at(i, qc)) return;
            if (m.row_is_zero(i)) throw DependentRowError(i);
        }
    }
};

}  // namespace

EADecomposition decompose(const SymplecticMatrix& input) {
    for (size_t r = 0; r < input.rows; r++)
        if (input.row_is_zero(r)) throw DependentRowError(r);

    Reduction red{input, {}};
    SymplecticMatrix& m = red.m;
    size_t c = 0, s = 0;
    size_t qc = 0;
    size_t i = 0;
    while (i < m.rows) {
        if (qc >= m.qubits) throw DependentRowError(i);
        size_t partner = m.rows;
        for (size_t r = i + 1; r < m.rows; r++)
            if (m.symplectic_product(i, r)) {
                partner = r;
                break;
            }
        if (partner != m.rows) {
            if (partner != i + 1) {
                m.row_swap(i + 1, partner);
                red.circuit.ops.push_back({CliffordOp::Kind::RowSwap, i + 1, partner});
            }
            red.sweep_row_to_x(i, qc, false, false);
            red.sweep_row_to_x(i + 1, qc, true, false);
            // Rows (i, i+1) must end ordered as (Z on qc, X on qc); the
            // partner sweep's leading Hadamard normally flips row i already.
            if (m.xbits[i][qc]) red.gate(CliffordOp::Kind::H, qc);
            for (size_t r = i + 2; r < m.rows; r++)
                if (m.zbits[r][qc]) {
                    m.row_add(i, r);
                    red.circuit.ops.push_back({CliffordOp::Kind::RowAdd, i, r});
                }
            for (size_t r = i + 2; r < m.rows; r++)
                if (m.xbits[r][qc]) {
                    m.row_add(i + 1, r);
                    red.circuit.ops.push_back({CliffordOp::Kind::RowAdd, i + 1, r});
                }
            c++;
            i += 2;
        } else {
            size_t where = 0;
            if (red.row_pure_z_single(i, &where)) {
                // Already a single Z letter; reposition it, then clear the
                // consumed column from the remaining rows. (Their X bits are
                // zero there already by symplectic orthogonality with this
                // row.)
                if (where != qc) red.gate(CliffordOp::Kind::Swap, qc, where);
                for (size_t r = i + 1; r < m.rows; r++)
                    if (m.zbits[r][qc]) {
                        m.row_add(i, r);
                        red.circuit.ops.push_back({CliffordOp::Kind::RowAdd, i, r});
                    }
            } else {
                red.sweep_row_to_x(i, qc, false, true);
                for (size_t r = i + 1; r < m.rows; r++)
                    if (m.xbits[r][qc]) {
                        m.row_add(i, r);
                        red.circuit.ops.push_back({CliffordOp::Kind::RowAdd, i, r});
                    }
                red.gate(CliffordOp::Kind::H, qc);
            }
            s++;
            i += 1;
        }
        qc++;
    }

    EADecomposition out;
    out.ebits = c;
    out.ancillas = s;
    out.logicals = m.qubits - s - c;
    out.circuit = std::move(red.circuit);
    out.canonical = std::move(red.m);
    return out;
}

std::vector<SymplecticMatrix> replay_snapshots(const SymplecticMatrix& input,
                                               const CliffordCircuit& circuit) {
    std::vector<SymplecticMatrix> snaps;
    SymplecticMatrix m = input;
    snaps.push_back(m);
    for (const auto& op : circuit.ops) {
        apply_op(m, op);
        snaps.push_back(m);
    }
    return snaps;
}

SymplecticMatrix encoded_stabilizer(const EADecomposition& d) {
    const SymplecticMatrix& canon = d.canonical;
    SymplecticMatrix m(canon.rows, canon.qubits + d.ebits);
    for (size_t r = 0; r < canon.rows; r++) {
        std::copy(canon.zbits[r].begin(), canon.zbits[r].end(), m.zbits[r].begin());
        std::copy(canon.xbits[r].begin(), canon.xbits[r].end(), m.xbits[r].begin());
    }
    // The pairs occupy consecutive rows in completion order; pair k is the
    // rows whose canonical form is Z/X on the same qubit. Receiver column k
    // carries X on the pair's Z row and Z on its X row, matching the
    // reference reduction; the resulting operators commute either way.
    size_t k = 0;
    for (size_t r = 0; r + 1 < canon.rows && k < d.ebits; r++) {
        size_t q = 0;
        bool zrow = false, xrow = false;
        for (; q < canon.qubits; q++) {
            if (canon.zbits[r][q] || canon.xbits[r][q]) {
                zrow = canon.zbits[r][q] && !canon.xbits[r][q];
                xrow = canon.xbits[r + 1][q] && !canon.zbits[r + 1][q];
                break;
            }
        }
        if (zrow && xrow) {
            m.xbits[r][canon.qubits + k] = 1;
            m.zbits[r + 1][canon.qubits + k] = 1;
            k++;
            r++;
        }
    }
    // Undo the gates in reverse; every gate is an involution on the bit
    // matrices, so the same op list applies. Row ops are not replayed: the
    // encoded stabilizer is generated row-space-wise either way, and the
    // recorded row ops describe the multiplication pattern separately.
    for (auto it = d.circuit.ops.rbegin(); it != d.circuit.ops.rend(); ++it)
        if (it->is_gate()) apply_op(m, *it);
    return m;
}

}  // namespace cedist
