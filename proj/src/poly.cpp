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

#include "gqc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gqc {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly::Poly(const Field& f, std::vector<Fe> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    for (Fe c : coeffs_)
        if (c >= field_.order()) throw std::invalid_argument("coefficient out of field range");
    trim();
}

Poly Poly::monomial(const Field& f, int exponent, Fe coeff) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Poly out(f);
    if (coeff != 0) {
        out.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, 0);
        out.coeffs_.back() = coeff;
    }
    return out;
}

Poly Poly::cyclic_modulus(const Field& f, int l) {
    if (l < 1) throw std::invalid_argument("orbit length must be positive");
    Poly out(f);
    out.coeffs_.assign(static_cast<std::size_t>(l) + 1, 0);
    out.coeffs_[0] = f.sub(0, 1);  // -1
    out.coeffs_.back() = 1;
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    const Field& f = field_;
    Poly out(f);
    out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        Fe a = i < coeffs_.size() ? coeffs_[i] : 0;
        Fe b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0;
        if (a && b)
            out.coeffs_[i] = f.add(a, b);
        else
            out.coeffs_[i] = a ? a : b;
    }
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    const Field& f = field_;
    Poly out(f);
    out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        Fe a = i < coeffs_.size() ? coeffs_[i] : 0;
        Fe b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0;
        if (b)
            out.coeffs_[i] = f.sub(a, b);
        else
            out.coeffs_[i] = a;
    }
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    const Field& f = field_;
    Poly out(f);
    if (is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (!rhs.coeffs_[j]) continue;
            out.coeffs_[i + j] = f.add(out.coeffs_[i + j], f.mul(coeffs_[i], rhs.coeffs_[j]));
        }
    }
    out.trim();
    return out;
}

bool Poly::operator==(const Poly& rhs) const { return field_ == rhs.field_ && coeffs_ == rhs.coeffs_; }

Poly Poly::negated() const {
    Poly out(field_);
    out.coeffs_ = coeffs_;
    for (Fe& c : out.coeffs_)
        if (c) c = field_.neg(c);
    return out;
}

Poly Poly::scaled(Fe c) const {
    Poly out(field_);
    if (c == 0 || is_zero()) return out;
    out.coeffs_ = coeffs_;
    for (Fe& x : out.coeffs_)
        if (x) x = field_.mul(c, x);
    out.trim();
    return out;
}

Poly Poly::shifted(int e) const {
    if (e < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    Poly out(field_);
    out.coeffs_.assign(static_cast<std::size_t>(e), 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no monic form");
    if (lead() == 1) return *this;
    Poly out(field_);
    out.coeffs_ = coeffs_;
    Fe l = lead();
    for (Fe& c : out.coeffs_)
        if (c) c = field_.div(c, l);
    return out;
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = field_;
    Poly q(f);
    Poly r = *this;
    if (degree() < divisor.degree()) return {q, r};
    q.coeffs_.assign(static_cast<std::size_t>(degree() - divisor.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        int e = r.degree() - divisor.degree();
        Fe c = f.div(r.lead(), divisor.lead());
        q.coeffs_[static_cast<std::size_t>(e)] = c;
        // r -= c * t^e * divisor
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
            if (!divisor.coeffs_[i]) continue;
            std::size_t k = i + static_cast<std::size_t>(e);
            r.coeffs_[k] = f.sub(r.coeffs_[k], f.mul(c, divisor.coeffs_[i]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::cyclic_mod(int l) const {
    if (l < 1) throw std::invalid_argument("orbit length must be positive");
    if (degree() < l) return *this;
    const Field& f = field_;
    Poly out(f);
    out.coeffs_.assign(static_cast<std::size_t>(l), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        std::size_t k = i % static_cast<std::size_t>(l);
        out.coeffs_[k] = out.coeffs_[k] ? f.add(out.coeffs_[k], coeffs_[i]) : coeffs_[i];
    }
    out.trim();
    return out;
}

Poly Poly::circulant_transpose(int l) const {
    if (l < 1) throw std::invalid_argument("orbit length must be positive");
    Poly a = cyclic_mod(l);
    Poly out(field_);
    if (a.is_zero()) return out;
    out.coeffs_.assign(static_cast<std::size_t>(l), 0);
    out.coeffs_[0] = a.coeff(0);
    for (int i = 1; i < l; ++i) out.coeffs_[static_cast<std::size_t>(l - i)] = a.coeff(i);
    out.trim();
    return out;
}

Poly Poly::reciprocal() const {
    Poly out(field_);
    out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    out.trim();
    return out;
}

std::string Poly::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(coeffs_[i]);
    }
    s += ']';
    return s;
}

Poly mul_cyclic(const Poly& a, const Poly& b, int l) {
    if (l < 1) throw std::invalid_argument("orbit length must be positive");
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<Fe> acc(static_cast<std::size_t>(l), 0);
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!ca[i]) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (!cb[j]) continue;
            std::size_t k = (i + j) % static_cast<std::size_t>(l);
            Fe term = f.mul(ca[i], cb[j]);
            acc[k] = acc[k] ? f.add(acc[k], term) : term;
        }
    }
    return Poly(f, std::move(acc));
}

PolyGcd extended_gcd(std::span<const Poly> polys) {
    if (polys.empty()) throw std::invalid_argument("extended_gcd of empty list");
    const Field& f = polys.front().field();
    Poly g = Poly::zero(f);
    std::vector<Poly> cof(polys.size(), Poly::zero(f));
    for (std::size_t idx = 0; idx < polys.size(); ++idx) {
        const Poly& a = polys[idx];
        if (a.is_zero()) continue;
        if (g.is_zero()) {
            g = a;
            cof[idx] = Poly::one(f);
            continue;
        }
        // Pairwise extended Euclid: d = u*g + v*a.
        Poly r0 = g, r1 = a;
        Poly s0 = Poly::one(f), s1 = Poly::zero(f);
        Poly t0 = Poly::zero(f), t1 = Poly::one(f);
        while (!r1.is_zero()) {
            auto qr = r0.divmod(r1);
            r0 = r1;
            r1 = qr.remainder;
            Poly s2 = s0 - qr.quotient * s1;
            s0 = s1;
            s1 = s2;
            Poly t2 = t0 - qr.quotient * t1;
            t0 = t1;
            t1 = t2;
        }
        for (std::size_t j = 0; j <= idx; ++j)
            if (!cof[j].is_zero()) cof[j] = cof[j] * s0;
        cof[idx] = t0;
        g = r0;
    }
    if (g.is_zero()) throw std::invalid_argument("extended_gcd of all-zero list");
    Fe l = g.lead();
    if (l != 1) {
        Fe li = f.inv(l);
        g = g.scaled(li);
        for (Poly& c : cof)
            if (!c.is_zero()) c = c.scaled(li);
    }
    return {std::move(g), std::move(cof)};
}

}  // namespace gqc
