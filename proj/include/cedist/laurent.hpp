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

#ifndef CEDIST_LAURENT_HPP
#define CEDIST_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cedist {

/// Error raised by the text parsers (polynomials, windows, code files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finitely supported Laurent polynomial over Z2 in the delay variable D.
///
/// Representation is an offset plus a dense coefficient array; the array is
/// kept tight (first and last coefficient are 1) so equality is structural.
/// The zero polynomial is canonically (min_exp = 0, empty coefficients).
/// Values are immutable after construction apart from assignment.
class LaurentPoly {
  public:
    LaurentPoly() = default;  // zero

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int exp);
    static LaurentPoly from_exponents(std::initializer_list<int> exps);
    static LaurentPoly from_exponents(const std::vector<int>& exps);

    /// Parses "1+D^3", "D^-1+D", "0", ... Terms may appear in any order;
    /// duplicate exponents are rejected. Whitespace is ignored.
    static LaurentPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && min_exp_ == 0; }

    /// Smallest exponent with coefficient 1. Requires a nonzero polynomial.
    int delay() const;
    /// Largest exponent with coefficient 1. Requires a nonzero polynomial.
    int degree() const;
    /// Number of nonzero coefficients.
    int weight() const;

    bool coeff(int exp) const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly& operator+=(const LaurentPoly& other);

    /// Substitutes D -> D^-1.
    LaurentPoly time_reversed() const;
    /// Keeps the strictly positive exponents.
    LaurentPoly positive_part() const;
    /// Keeps the strictly negative exponents.
    LaurentPoly negative_part() const;
    /// Multiplies by D^k.
    LaurentPoly shifted(int k) const;

    bool operator==(const LaurentPoly& other) const = default;

    /// GCD of two Laurent polynomials, split as a power of D times an
    /// ordinary polynomial g with g(0) = 1. Throws if both inputs are zero.
    struct Gcd;
    static Gcd gcd(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact division; throws std::domain_error when the division leaves a
    /// remainder or the divisor is zero.
    LaurentPoly divided_by(const LaurentPoly& divisor) const;

    std::string str() const;

  private:
    int min_exp_ = 0;
    std::vector<std::uint8_t> coeffs_;  // coeffs_[i] is the coefficient of D^(min_exp_+i)

    LaurentPoly(int min_exp, std::vector<std::uint8_t> coeffs);
    void normalize();
};

struct LaurentPoly::Gcd {
    int d_power = 0;
    LaurentPoly poly;
    LaurentPoly combined() const { return poly.shifted(d_power); }
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace cedist

#include <ostream>

namespace cedist {
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }
}  // namespace cedist

#endif
