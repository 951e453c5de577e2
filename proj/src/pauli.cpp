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

#include "cedist/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cedist {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Z: return 'Z';
        case Pauli::Y: return 'Y';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Z': return Pauli::Z;
        case 'Y': return Pauli::Y;
        default: throw ParseError(std::string("bad Pauli letter '") + c + "'");
    }
}

PauliVec::PauliVec(std::vector<LaurentPoly> z_part, std::vector<LaurentPoly> x_part)
    : z(std::move(z_part)), x(std::move(x_part)) {
    if (z.size() != x.size())
        throw std::invalid_argument("PauliVec: z and x parts differ in length");
}

bool PauliVec::is_identity() const {
    for (const auto& p : z)
        if (!p.is_zero()) return false;
    for (const auto& p : x)
        if (!p.is_zero()) return false;
    return true;
}

Pauli PauliVec::letter(size_t qubit, int frame) const {
    return pauli_from_bits(z[qubit].coeff(frame), x[qubit].coeff(frame));
}

int PauliVec::delay() const {
    bool any = false;
    int d = 0;
    auto visit = [&](const LaurentPoly& p) {
        if (p.is_zero()) return;
        d = any ? std::min(d, p.delay()) : p.delay();
        any = true;
    };
    for (const auto& p : z) visit(p);
    for (const auto& p : x) visit(p);
    return any ? d : 0;
}

int PauliVec::degree() const {
    bool any = false;
    int d = 0;
    auto visit = [&](const LaurentPoly& p) {
        if (p.is_zero()) return;
        d = any ? std::max(d, p.degree()) : p.degree();
        any = true;
    };
    for (const auto& p : z) visit(p);
    for (const auto& p : x) visit(p);
    return any ? d : 0;
}

int PauliVec::weight() const {
    if (is_identity()) return 0;
    int w = 0;
    for (int f = delay(); f <= degree(); f++)
        for (size_t q = 0; q < frame_size(); q++)
            if (letter(q, f) != Pauli::I) w++;
    return w;
}

PauliVec PauliVec::operator+(const PauliVec& other) const {
    if (frame_size() != other.frame_size())
        throw std::invalid_argument("PauliVec: frame-size mismatch");
    PauliVec r = *this;
    for (size_t q = 0; q < frame_size(); q++) {
        r.z[q] += other.z[q];
        r.x[q] += other.x[q];
    }
    return r;
}

PauliVec PauliVec::shifted(int k) const {
    PauliVec r = *this;
    for (auto& p : r.z) p = p.shifted(k);
    for (auto& p : r.x) p = p.shifted(k);
    return r;
}

PauliVec PauliVec::scaled(const LaurentPoly& f) const {
    PauliVec r = *this;
    for (auto& p : r.z) p = f * p;
    for (auto& p : r.x) p = f * p;
    return r;
}

PauliWindow to_pauli_window(const PauliVec& u, int first_frame, int last_frame) {
    if (first_frame > last_frame)
        throw std::invalid_argument("to_pauli_window: first_frame > last_frame");
    PauliWindow w;
    w.n = u.frame_size();
    w.start_frame = first_frame;
    w.frames.reserve(static_cast<size_t>(last_frame - first_frame + 1));
    for (int f = first_frame; f <= last_frame; f++) {
        std::vector<Pauli> frame(w.n);
        for (size_t q = 0; q < w.n; q++) frame[q] = u.letter(q, f);
        w.frames.push_back(std::move(frame));
    }
    return w;
}

PauliVec pauli_vec_from_window(const PauliWindow& w) {
    std::vector<LaurentPoly> z(w.n), x(w.n);
    for (size_t t = 0; t < w.frames.size(); t++) {
        int f = w.start_frame + static_cast<int>(t);
        for (size_t q = 0; q < w.n; q++) {
            Pauli p = w.frames[t][q];
            if (pauli_z_bit(p)) z[q] += LaurentPoly::monomial(f);
            if (pauli_x_bit(p)) x[q] += LaurentPoly::monomial(f);
        }
    }
    return PauliVec(std::move(z), std::move(x));
}

std::string PauliWindow::str() const {
    std::ostringstream os;
    for (size_t t = 0; t < frames.size(); t++) {
        if (t) os << '|';
        for (Pauli p : frames[t]) os << pauli_char(p);
    }
    return os.str();
}

PauliWindow PauliWindow::parse(std::string_view text, int start_frame) {
    PauliWindow w;
    w.start_frame = start_frame;
    std::vector<Pauli> frame;
    for (char c : text) {
        if (c == '|') {
            w.frames.push_back(frame);
            frame.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            frame.push_back(pauli_from_char(c));
        }
    }
    w.frames.push_back(frame);
    if (w.frames.empty() || w.frames[0].empty()) throw ParseError("empty Pauli window");
    w.n = w.frames[0].size();
    for (const auto& f : w.frames)
        if (f.size() != w.n) throw ParseError("ragged Pauli window");
    return w;
}

PauliWindow PauliWindow::operator*(const PauliWindow& other) const {
    if (n != other.n || start_frame != other.start_frame || frames.size() != other.frames.size())
        throw std::invalid_argument("PauliWindow product: shape mismatch");
    PauliWindow r = *this;
    for (size_t t = 0; t < frames.size(); t++)
        for (size_t q = 0; q < n; q++) r.frames[t][q] = pauli_mul(frames[t][q], other.frames[t][q]);
    return r;
}

LaurentPoly shifted_symplectic(const PauliVec& u, const PauliVec& v) {
    if (u.frame_size() != v.frame_size())
        throw std::invalid_argument("shifted_symplectic: frame-size mismatch");
    LaurentPoly acc;
    for (size_t q = 0; q < u.frame_size(); q++) {
        acc += u.z[q].time_reversed() * v.x[q];
        acc += u.x[q].time_reversed() * v.z[q];
    }
    return acc;
}

bool commutes_at_shift(const PauliVec& u, const PauliVec& v, int i) {
    return !shifted_symplectic(u, v).coeff(i);
}

}  // namespace cedist
