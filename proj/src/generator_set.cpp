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

#include "cedist/generator_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cedist {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
}

GeneratorSet::GeneratorSet(size_t n_noisy_, size_t ebit_cols_, std::vector<PauliVec> gens_,
                           Construction construction_)
    : n_noisy(n_noisy_), ebit_cols(ebit_cols_), gens(std::move(gens_)), construction(construction_) {
    for (size_t i = 0; i < gens.size(); i++) {
        if (gens[i].frame_size() != n_total())
            throw std::invalid_argument("GeneratorSet: generator frame size does not match n + ebit columns");
        if (gens[i].is_identity())
            throw DomainError("GeneratorSet: generator " + std::to_string(i + 1) + " is the identity");
    }
}

int GeneratorSet::constraint_length() const {
    int nu = 0;
    for (const auto& g : gens) nu = std::max(nu, g.degree() - g.delay());
    return nu;
}

GeneratorSet GeneratorSet::delay_normalized() const {
    GeneratorSet r = *this;
    for (auto& g : r.gens) g = g.shifted(-g.delay());
    return r;
}

bool check_commuting(const GeneratorSet& g) {
    for (size_t i = 0; i < g.gens.size(); i++)
        for (size_t j = i; j < g.gens.size(); j++)
            if (!shifted_symplectic(g.gens[i], g.gens[j]).is_zero()) return false;
    return true;
}

GeneratorSet augment_single(const PauliVec& u) {
    PauliVec a = u;
    a.z.push_back(shifted_symplectic(u, u).positive_part());
    a.x.push_back(LaurentPoly::one());
    return GeneratorSet(u.frame_size(), 1, {std::move(a)}, Construction::Single);
}

GeneratorSet augment_multi(const std::vector<PauliVec>& gens, AugmentVariant variant) {
    if (gens.empty()) throw std::invalid_argument("augment_multi: no generators");
    size_t m = gens.size();
    size_t n = gens[0].frame_size();
    for (const auto& g : gens)
        if (g.frame_size() != n) throw std::invalid_argument("augment_multi: mixed frame sizes");

    std::vector<PauliVec> out;
    out.reserve(m);
    for (size_t i = 0; i < m; i++) {
        PauliVec row = gens[i];
        for (size_t j = 0; j < m; j++) {
            LaurentPoly zcol;
            if (j == i) {
                zcol = shifted_symplectic(gens[i], gens[i]).positive_part();
            } else if ((variant == AugmentVariant::Upper && j > i) ||
                       (variant == AugmentVariant::Lower && j < i)) {
                zcol = shifted_symplectic(gens[j], gens[i]);
            }
            row.z.push_back(std::move(zcol));
            row.x.push_back(j == i ? LaurentPoly::one() : LaurentPoly::zero());
        }
        out.push_back(std::move(row));
    }
    return GeneratorSet(n, m, std::move(out),
                        m == 1 ? Construction::Single : Construction::Multi);
}

namespace {

// F4 arithmetic in the {w, W} basis: w*w = W, w*W = 1 = w + W, W*W = w.
GF4Generator::Entry f4_mul_omega(const GF4Generator::Entry& e) {
    return {e.omega_bar, e.omega + e.omega_bar};
}
GF4Generator::Entry f4_mul_omega_bar(const GF4Generator::Entry& e) {
    return {e.omega + e.omega_bar, e.omega};
}

// The map 0 -> I, w -> X, 1 -> Y, W -> Z reads the W coordinate as the Z bit
// and the w coordinate as the X bit.
void push_pauli(PauliVec& vec, const GF4Generator::Entry& e) {
    vec.z.push_back(e.omega_bar);
    vec.x.push_back(e.omega);
}

}  // namespace

std::array<PauliVec, 2> import_gf4(const GF4Generator& g) {
    PauliVec u1, u2;
    for (const auto& e : g.entries) {
        push_pauli(u1, f4_mul_omega_bar(e));
        push_pauli(u2, f4_mul_omega(e));
    }
    return {std::move(u1), std::move(u2)};
}

namespace {

bool purely_z(const PauliVec& v) {
    return std::all_of(v.x.begin(), v.x.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}
bool purely_x(const PauliVec& v) {
    return std::all_of(v.z.begin(), v.z.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

// Divides every entry of the row by the entrywise GCF (D-power included)
// when that factor is not 1.
void divide_out_gcf(PauliVec& row) {
    std::optional<LaurentPoly::Gcd> acc;
    auto fold = [&](const LaurentPoly& p) {
        if (p.is_zero()) return;
        acc = acc ? LaurentPoly::gcd(acc->combined(), p) : LaurentPoly::gcd(p, p);
    };
    for (const auto& p : row.z) fold(p);
    for (const auto& p : row.x) fold(p);
    if (!acc) return;
    LaurentPoly factor = acc->combined();
    if (factor.is_one()) return;
    for (auto& p : row.z) p = p.divided_by(factor);
    for (auto& p : row.x) p = p.divided_by(factor);
}

}  // namespace

CssDecomposition css_gram_schmidt(std::vector<PauliVec> rows) {
    CssDecomposition out;
    if (rows.empty()) return out;
    out.frame_size = rows[0].frame_size();
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].frame_size() != out.frame_size)
            throw std::invalid_argument("css_gram_schmidt: mixed frame sizes");
        if (!purely_z(rows[i]) && !purely_x(rows[i]))
            throw DomainError("css_gram_schmidt: row " + std::to_string(i + 1) +
                              " mixes Z and X components");
    }

    size_t m = rows.size();
    size_t c = 0, l = 0;
    std::vector<std::pair<size_t, size_t>> pair_pos;
    std::vector<size_t> iso_pos;

    while (2 * c + l < m) {
        size_t front = 2 * c + l;
        size_t partner = m;
        for (size_t j = front + 1; j < m; j++) {
            if (!shifted_symplectic(rows[front], rows[j]).is_zero()) {
                partner = j;
                break;
            }
        }
        if (partner == m) {
            iso_pos.push_back(front);
            l++;
            continue;
        }
        std::swap(rows[front + 1], rows[partner]);

        // The update rules keep updated rows inside their own family, so the
        // scalar multiples are taken from the matching member of the pair.
        size_t zi = purely_z(rows[front]) ? front : front + 1;
        size_t xi = zi == front ? front + 1 : front;
        for (size_t r = front + 2; r < m; r++) {
            if (rows[r].is_identity()) continue;
            if (purely_z(rows[r])) {
                rows[r] = rows[r].scaled(shifted_symplectic(rows[xi], rows[zi])) +
                          rows[zi].scaled(shifted_symplectic(rows[r], rows[xi]).time_reversed());
            } else {
                rows[r] = rows[r].scaled(shifted_symplectic(rows[zi], rows[xi])) +
                          rows[xi].scaled(shifted_symplectic(rows[r], rows[zi]).time_reversed());
            }
            divide_out_gcf(rows[r]);
        }
        pair_pos.emplace_back(zi, xi);
        c++;
    }

    for (auto [zi, xi] : pair_pos) {
        CssDecomposition::Pair p;
        p.u = rows[zi];
        p.v = rows[xi];
        p.f = shifted_symplectic(p.u, p.v);
        out.pairs.push_back(std::move(p));
    }
    // Rows the updates reduced to zero were linear combinations of earlier
    // rows; they carry no generator and are dropped.
    for (size_t i : iso_pos)
        if (!rows[i].is_identity()) out.isotropic.push_back(rows[i]);
    return out;
}

GeneratorSet css_augment(const CssDecomposition& d) {
    size_t c = d.pairs.size();
    std::vector<PauliVec> gens;
    auto widen = [&](const PauliVec& row) {
        PauliVec r = row;
        for (size_t k = 0; k < c; k++) {
            r.z.push_back(LaurentPoly::zero());
            r.x.push_back(LaurentPoly::zero());
        }
        return r;
    };
    for (size_t k = 0; k < c; k++) {
        PauliVec u = widen(d.pairs[k].u);
        u.z[d.frame_size + k] = d.pairs[k].f.time_reversed();
        gens.push_back(std::move(u));
    }
    for (size_t k = 0; k < c; k++) {
        PauliVec v = widen(d.pairs[k].v);
        v.x[d.frame_size + k] = LaurentPoly::one();
        gens.push_back(std::move(v));
    }
    for (const auto& iso : d.isotropic) gens.push_back(widen(iso));
    return GeneratorSet(d.frame_size, c, std::move(gens), Construction::Css);
}

bool noncatastrophic_check(const GeneratorSet& g) {
    for (const auto& gen : g.gens) {
        std::optional<LaurentPoly::Gcd> acc;
        auto fold = [&](const LaurentPoly& p) {
            if (p.is_zero()) return;
            acc = acc ? LaurentPoly::gcd(acc->combined(), p) : LaurentPoly::gcd(p, p);
        };
        for (const auto& p : gen.z) fold(p);
        for (const auto& p : gen.x) fold(p);
        if (acc && !acc->poly.is_one()) return false;
    }
    return true;
}

YieldInfo protocol_yield(const GeneratorSet& g) {
    long long n = static_cast<long long>(g.n_noisy);
    long long m = static_cast<long long>(g.generator_count());
    if (n == 0) throw std::invalid_argument("protocol_yield: empty frame");
    YieldInfo info;
    info.yield = Rational(n - m, n);
    long long nu = g.constraint_length();
    switch (g.construction) {
        case Construction::Raw: info.catalytic_ebits = 0; break;
        case Construction::Single: info.catalytic_ebits = n * nu; break;
        default: info.catalytic_ebits = (n + static_cast<long long>(g.ebit_cols)) * nu; break;
    }
    return info;
}

}  // namespace cedist
