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

#include <random>

#include "doctest.h"

using cedist::LaurentPoly;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

LaurentPoly random_poly(std::mt19937_64& rng, int min_exp = -4, int max_exp = 4, double density = 0.4) {
    LaurentPoly r;
    for (int e = min_exp; e <= max_exp; e++)
        if ((rng() >> 11) * 0x1.0p-53 < density) r += LaurentPoly::monomial(e);
    return r;
}

}  // namespace

TEST_CASE("laurent addition") {
    CHECK(P("1+D") + P("1+D") == LaurentPoly::zero());
    CHECK(P("D") + P("D^3") + P("D") == P("D^3"));
    CHECK(P("1+D^-1") + P("D^-1+D") == P("1+D"));
}

TEST_CASE("laurent multiplication") {
    CHECK(P("1+D") * P("1+D") == P("1+D^2"));
    CHECK(P("1+D^-1") * P("D") == P("D+1"));
    // Brute-force convolution oracle for (1+D^-3) * D^2.
    LaurentPoly expect;
    for (int i : {-3, 0})
        for (int j : {2}) expect += LaurentPoly::monomial(i + j);
    CHECK(P("1+D^-3") * P("D^2") == expect);
    CHECK(expect == P("D^2+D^-1"));
}

TEST_CASE("laurent time reversal") {
    CHECK(P("D+D^3").time_reversed() == P("D^-1+D^-3"));
    CHECK(P("1").time_reversed() == P("1"));
    CHECK(P("D^-2+D^-1+D+D^2").time_reversed() == P("D^-2+D^-1+D+D^2"));
}

TEST_CASE("laurent positive and negative parts") {
    LaurentPoly p = P("D^-2+D^-1+D+D^2");
    CHECK(p.positive_part() == P("D+D^2"));
    CHECK(p.negative_part() == P("D^-2+D^-1"));
    CHECK(LaurentPoly::zero().positive_part() == LaurentPoly::zero());
}

TEST_CASE("laurent gcd") {
    auto g = LaurentPoly::gcd(P("D+D^2"), P("D"));
    CHECK(g.d_power == 1);
    CHECK(g.poly == LaurentPoly::one());
    CHECK(g.combined() == P("D"));

    // Euclid oracle: 1+D^2 = (1+D)^2 over Z2.
    auto g2 = LaurentPoly::gcd(P("1+D^2"), P("1+D"));
    CHECK(g2.d_power == 0);
    CHECK(g2.poly == P("1+D"));

    auto g3 = LaurentPoly::gcd(P("1"), P("D^2+D^5"));
    CHECK(g3.combined() == LaurentPoly::one());

    // The D power is the smaller of the two delays, so entries with negative
    // exponents report a negative power: D^-3+D^5 = D^-3 (1+D)^8.
    auto g4 = LaurentPoly::gcd(P("D^-3+D^5"), P("1+D"));
    CHECK(g4.d_power == -3);
    CHECK(g4.poly == P("1+D"));

    CHECK_THROWS_AS(LaurentPoly::gcd(LaurentPoly::zero(), LaurentPoly::zero()), std::domain_error);
    CHECK(LaurentPoly::gcd(LaurentPoly::zero(), P("D^2+D^3")).combined() == P("D^2+D^3"));
}

TEST_CASE("laurent exact division") {
    CHECK(P("1+D^2").divided_by(P("1+D")) == P("1+D"));
    CHECK(P("D^-1+D").divided_by(P("D^-1")) == P("1+D^2"));
    CHECK_THROWS_AS(P("1+D").divided_by(P("1+D^2")), std::domain_error);
    CHECK_THROWS_AS(P("1").divided_by(LaurentPoly::zero()), std::domain_error);
}

TEST_CASE("laurent parser") {
    CHECK(P(" 1 + D^3 ") == LaurentPoly::from_exponents({0, 3}));
    CHECK(P("D^-1+D") == LaurentPoly::from_exponents({-1, 1}));
    CHECK(P("D^3+1") == P("1+D^3"));
    CHECK(P("0") == LaurentPoly::zero());
    CHECK_THROWS_AS(P("D+D"), cedist::ParseError);
    CHECK_THROWS_AS(P("2"), cedist::ParseError);
    CHECK_THROWS_AS(P(""), cedist::ParseError);
    CHECK_THROWS_AS(P("D^"), cedist::ParseError);
}

TEST_CASE("laurent printing") {
    CHECK(P("D^2+1+D^-2").str() == "D^-2+1+D^2");
    CHECK(LaurentPoly::zero().str() == "0");
    CHECK(P("D").str() == "D");
}

TEST_CASE("laurent algebra properties") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 300; it++) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        LaurentPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + a == LaurentPoly::zero());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.time_reversed() * b.time_reversed() == (a * b).time_reversed());
        // Tripartition is exact: positive + negative + constant = a.
        LaurentPoly constant = a.coeff(0) ? LaurentPoly::one() : LaurentPoly::zero();
        CHECK(a.positive_part() + a.negative_part() + constant == a);
        // Round trip through text.
        CHECK(LaurentPoly::parse(a.str()) == a);
        if (!a.is_zero() && !b.is_zero()) {
            auto g = LaurentPoly::gcd(a, b);
            CHECK(!g.poly.coeff(-1));
            CHECK(g.poly.coeff(0));  // g(0) = 1 after the D power is split off
            CHECK(a.divided_by(g.combined()) * g.combined() == a);
            CHECK(b.divided_by(g.combined()) * g.combined() == b);
        }
    }
}
