/*
   Copyright 2026 the gqc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GQC_POLY_HPP
#define GQC_POLY_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gqc/field.hpp"

namespace gqc {

struct PolyDivMod;

/**
 * Dense univariate polynomial over GF(q), ascending coefficients with no
 * trailing zeros.  Values are immutable; all operations are pure.
 *
 * The zero polynomial has an empty coefficient list and degree kNegInf,
 * a sentinel smaller than every integer so that degree guards compose.
 */
class Poly {
   public:
    static constexpr int kNegInf = std::numeric_limits<int>::min();

    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, std::vector<Fe> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return monomial(f, 0); }
    static Poly monomial(const Field& f, int exponent, Fe coeff = 1);
    /// t^l - 1, the modulus of a length-l cyclic orbit.
    static Poly cyclic_modulus(const Field& f, int l);

    const Field& field() const { return field_; }
    const std::vector<Fe>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInf : static_cast<int>(coeffs_.size()) - 1; }
    Fe coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(coeffs_.size())) ? 0 : coeffs_[static_cast<std::size_t>(i)];
    }
    Fe lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return lead() == 1; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Poly negated() const;
    Poly scaled(Fe c) const;            // c * this
    Poly shifted(int e) const;          // t^e * this, e >= 0
    Poly monic() const;                 // divide by the leading coefficient

    /// Euclidean division; throws on zero divisor.
    PolyDivMod divmod(const Poly& divisor) const;

    /// Canonical representative mod t^l - 1 (exponents folded onto e mod l).
    Poly cyclic_mod(int l) const;

    /**
     * The polynomial of the transposed l x l circulant matrix:
     * a_0 + a_{l-1} t + ... + a_1 t^{l-1}.  Inputs of degree >= l are
     * first reduced mod t^l - 1.
     */
    Poly circulant_transpose(int l) const;

    /// Formal reciprocal t^deg * a(1/t); zero maps to zero.
    Poly reciprocal() const;

    /// "[c0 c1 ... cd]"; the zero polynomial prints as "[]".
    std::string to_string() const;

   private:
    Field field_;
    std::vector<Fe> coeffs_;

    void trim();
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// Product folded into GF(q)[t]/(t^l - 1); same operation count as a plain
/// multiply, with no separate reduction pass.
Poly mul_cyclic(const Poly& a, const Poly& b, int l);

struct PolyGcd {
    Poly gcd;                    // monic
    std::vector<Poly> cofactors; // sum cofactors[i] * input[i] == gcd
};

/// Extended gcd of a list of polynomials; at least one must be nonzero.
PolyGcd extended_gcd(std::span<const Poly> polys);

}  // namespace gqc

#endif
