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

#include "cedist/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cedist {

LaurentPoly::LaurentPoly(int min_exp, std::vector<std::uint8_t> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
}

void LaurentPoly::normalize() {
    size_t first = 0;
    while (first < coeffs_.size() && !coeffs_[first]) first++;
    size_t last = coeffs_.size();
    while (last > first && !coeffs_[last - 1]) last--;
    if (first == last) {
        min_exp_ = 0;
        coeffs_.clear();
        return;
    }
    min_exp_ += static_cast<int>(first);
    coeffs_.erase(coeffs_.begin() + static_cast<long>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
}

LaurentPoly LaurentPoly::monomial(int exp) { return LaurentPoly(exp, {1}); }

LaurentPoly LaurentPoly::from_exponents(std::initializer_list<int> exps) {
    return from_exponents(std::vector<int>(exps));
}

LaurentPoly LaurentPoly::from_exponents(const std::vector<int>& exps) {
    LaurentPoly r;
    for (int e : exps) r += monomial(e);
    return r;
}

int LaurentPoly::delay() const {
    if (is_zero()) throw std::domain_error("delay of the zero polynomial");
    return min_exp_;
}

int LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::weight() const {
    int w = 0;
    for (auto c : coeffs_) w += c;
    return w;
}

bool LaurentPoly::coeff(int exp) const {
    if (exp < min_exp_) return false;
    size_t i = static_cast<size_t>(exp - min_exp_);
    return i < coeffs_.size() && coeffs_[i];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    r += other;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
        *this = other;
        return *this;
    }
    int lo = std::min(min_exp_, other.min_exp_);
    int hi = std::max(min_exp_ + static_cast<int>(coeffs_.size()),
                      other.min_exp_ + static_cast<int>(other.coeffs_.size()));
    std::vector<std::uint8_t> out(static_cast<size_t>(hi - lo), 0);
    for (size_t i = 0; i < coeffs_.size(); i++)
        out[static_cast<size_t>(min_exp_ - lo) + i] ^= coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); i++)
        out[static_cast<size_t>(other.min_exp_ - lo) + i] ^= other.coeffs_[i];
    *this = LaurentPoly(lo, std::move(out));
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<std::uint8_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (!coeffs_[i]) continue;
        for (size_t j = 0; j < other.coeffs_.size(); j++) out[i + j] ^= other.coeffs_[j];
    }
    return LaurentPoly(min_exp_ + other.min_exp_, std::move(out));
}

LaurentPoly LaurentPoly::time_reversed() const {
    if (is_zero()) return zero();
    std::vector<std::uint8_t> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-degree(), std::move(rev));
}

LaurentPoly LaurentPoly::positive_part() const {
    LaurentPoly r;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        int e = min_exp_ + static_cast<int>(i);
        if (e > 0 && coeffs_[i]) r += monomial(e);
    }
    return r;
}

LaurentPoly LaurentPoly::negative_part() const {
    LaurentPoly r;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        int e = min_exp_ + static_cast<int>(i);
        if (e < 0 && coeffs_[i]) r += monomial(e);
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero()) return zero();
    return LaurentPoly(min_exp_ + k, coeffs_);
}

namespace {

// Ordinary-polynomial Euclid over Z2[D] on coefficient vectors with
// nonzero constant term guaranteed by the caller.
std::vector<std::uint8_t> poly_mod(std::vector<std::uint8_t> a, const std::vector<std::uint8_t>& b) {
    auto deg = [](const std::vector<std::uint8_t>& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i]) return static_cast<long>(i);
        return -1L;
    };
    long db = deg(b);
    long da = deg(a);
    while (da >= db && da >= 0) {
        size_t shift = static_cast<size_t>(da - db);
        for (long i = 0; i <= db; i++) a[shift + static_cast<size_t>(i)] ^= b[static_cast<size_t>(i)];
        da = deg(a);
    }
    a.resize(static_cast<size_t>(da + 1));
    return a;
}

}  // namespace

LaurentPoly::Gcd LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    if (a.is_zero()) return {b.delay(), b.shifted(-b.delay())};
    if (b.is_zero()) return {a.delay(), a.shifted(-a.delay())};
    int d_power = std::min(a.delay(), b.delay());
    std::vector<std::uint8_t> x = a.shifted(-a.delay()).coeffs_;
    std::vector<std::uint8_t> y = b.shifted(-b.delay()).coeffs_;
    while (!y.empty()) {
        auto r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return {d_power, LaurentPoly(0, std::move(x))};
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return zero();
    int shift = delay() - divisor.delay();
    std::vector<std::uint8_t> rem = shifted(-delay()).coeffs_;
    const std::vector<std::uint8_t>& den = divisor.shifted(-divisor.delay()).coeffs_;
    if (rem.size() < den.size()) throw std::domain_error("inexact polynomial division");
    std::vector<std::uint8_t> quot(rem.size() - den.size() + 1, 0);
    for (size_t i = rem.size(); i-- >= den.size();) {
        if (!rem[i]) {
            if (i == 0) break;
            continue;
        }
        size_t q = i - (den.size() - 1);
        quot[q] = 1;
        for (size_t j = 0; j < den.size(); j++) rem[q + j] ^= den[j];
        if (i == 0) break;
    }
    for (auto c : rem)
        if (c) throw std::domain_error("inexact polynomial division");
    return LaurentPoly(shift, std::move(quot));
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ParseError("empty polynomial");
    if (compact == "0") return zero();

    std::set<int> seen;
    LaurentPoly r;
    size_t pos = 0;
    while (pos < compact.size()) {
        size_t next = compact.find('+', pos);
        std::string term = compact.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? compact.size() : next + 1;
        int exp;
        if (term == "1") {
            exp = 0;
        } else if (term == "D") {
            exp = 1;
        } else if (term.size() > 2 && term[0] == 'D' && term[1] == '^') {
            size_t used = 0;
            try {
                exp = std::stoi(term.substr(2), &used);
            } catch (const std::exception&) {
                throw ParseError("bad polynomial term '" + term + "'");
            }
            if (used != term.size() - 2) throw ParseError("bad polynomial term '" + term + "'");
        } else {
            throw ParseError("bad polynomial term '" + term + "'");
        }
        if (!seen.insert(exp).second) throw ParseError("duplicate exponent in polynomial term '" + term + "'");
        r += monomial(exp);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (!coeffs_[i]) continue;
        if (!first) os << '+';
        first = false;
        int e = min_exp_ + static_cast<int>(i);
        if (e == 0)
            os << '1';
        else if (e == 1)
            os << 'D';
        else
            os << "D^" << e;
    }
    return os.str();
}

}  // namespace cedist
