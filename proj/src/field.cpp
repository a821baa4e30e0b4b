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

#include "gqc/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gqc {

namespace detail {

namespace {
thread_local OpCounter* g_counter = nullptr;

inline void tick_add() {
    if (g_counter) ++g_counter->adds;
}
inline void tick_sub() {
    if (g_counter) ++g_counter->subs;
}
inline void tick_mul() {
    if (g_counter) ++g_counter->muls;
}
inline void tick_div() {
    if (g_counter) ++g_counter->divs;
}
}  // namespace

OpCounter* active_counter() noexcept { return g_counter; }
void set_active_counter(OpCounter* c) noexcept { g_counter = c; }

}  // namespace detail

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Coefficient-vector arithmetic over GF(p), used before the field tables
// exist (modulus validation, irreducibility search).
using PolyP = std::vector<unsigned>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic-scaled b over GF(p).
PolyP mod_p(PolyP a, const PolyP& b, unsigned p) {
    trim(a);
    // inverse of the leading coefficient of b mod p
    unsigned lead = b.back();
    unsigned lead_inv = 1;
    for (unsigned x = 1; x < p; ++x)
        if (x * lead % p == 1) {
            lead_inv = x;
            break;
        }
    while (a.size() >= b.size()) {
        unsigned c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned sub = c * b[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

bool divides_p(const PolyP& d, const PolyP& a, unsigned p) { return mod_p(a, d, p).empty(); }

// Exhaustive factor search: f (monic, degree s >= 2) is reducible iff some
// monic polynomial of degree 1 .. s/2 divides it.
bool is_irreducible(const PolyP& f, unsigned p) {
    unsigned s = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; 2 * d <= s; ++d) {
        // enumerate monic degree-d candidates by counting in base p
        std::vector<unsigned> cand(d + 1, 0);
        cand[d] = 1;
        while (true) {
            if (divides_p(cand, f, p)) return false;
            std::size_t i = 0;
            while (i < d && cand[i] == p - 1) cand[i++] = 0;
            if (i == d) break;
            ++cand[i];
        }
    }
    return true;
}

// Default irreducible polynomials over GF(2), bit i = coefficient of t^i.
constexpr std::uint32_t kGf2Modulus[17] = {0,      0,      0x7,    0xb,    0x13,  0x25,
                                           0x43,   0x89,   0x11d,  0x211,  0x409, 0x805,
                                           0x1053, 0x201b, 0x4443, 0x8003, 0x1100b};

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Field::Field(unsigned p, unsigned s) { build(p, s, {}, false); }

Field::Field(unsigned p, unsigned s, const std::vector<Fe>& modulus) { build(p, s, modulus, true); }

void Field::build(unsigned p, unsigned s, std::vector<Fe> modulus, bool modulus_given) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (s < 1) throw std::invalid_argument("extension degree must be >= 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field order exceeds 2^16");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->s = s;
    t->q = static_cast<unsigned>(q);

    if (s == 1) {
        modulus.clear();  // ignored for prime fields
    } else {
        if (!modulus_given || modulus.empty()) {
            if (p != 2) throw std::invalid_argument("no default modulus for characteristic " + std::to_string(p) + "; supply one");
            modulus.assign(s + 1, 0);
            for (unsigned i = 0; i <= s; ++i) modulus[i] = (kGf2Modulus[s] >> i) & 1u;
        }
        if (modulus.size() != s + 1 || modulus.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree " + std::to_string(s));
        for (Fe c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        PolyP f(modulus.begin(), modulus.end());
        if (!is_irreducible(f, p)) throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
        t->modulus = modulus;
    }

    t_ = std::move(t);

    // Find a generator of the multiplicative group and build the tables.
    auto* tab = const_cast<Tables*>(t_.get());
    unsigned qq = tab->q;
    auto pow_raw = [&](Fe base, unsigned e) {
        Fe r = 1;
        Fe b = base;
        while (e) {
            if (e & 1) r = raw_mul(r, b);
            b = raw_mul(b, b);
            e >>= 1;
        }
        return r;
    };
    const auto factors = prime_factors(qq - 1);
    Fe gen = 1;
    for (Fe c = qq > 2 ? 2u : 1u; c < qq; ++c) {
        bool ok = true;
        for (unsigned f : factors)
            if (pow_raw(c, (qq - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = c;
            break;
        }
    }
    tab->exp.assign(qq - 1, 1);
    tab->log.assign(qq, 0);
    Fe cur = 1;
    for (unsigned i = 0; i + 1 < qq; ++i) {
        tab->exp[i] = cur;
        tab->log[cur] = i;
        cur = raw_mul(cur, gen);
    }
}

// Polynomial-basis multiply without tables.  Only used while building them.
Fe Field::raw_mul(Fe a, Fe b) const {
    const unsigned p = t_->p;
    if (t_->s == 1) return static_cast<Fe>(static_cast<std::uint64_t>(a) * b % p);
    // expand to digit vectors, convolve, reduce by the modulus
    const unsigned s = t_->s;
    unsigned da[17], db[17];
    for (unsigned i = 0; i < s; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    unsigned prod[33] = {0};
    for (unsigned i = 0; i < s; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    const auto& m = t_->modulus;
    for (int d = 2 * static_cast<int>(s) - 2; d >= static_cast<int>(s); --d) {
        unsigned c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < s; ++i) prod[d - s + i] = (prod[d - s + i] + c * (p - m[i])) % p;
    }
    Fe out = 0;
    for (unsigned i = s; i-- > 0;) out = out * p + prod[i];
    return out;
}

Fe Field::add(Fe a, Fe b) const {
    detail::tick_add();
    const unsigned p = t_->p;
    if (p == 2) return a ^ b;
    if (t_->s == 1) return (a + b) % p;
    Fe out = 0, mult = 1;
    for (unsigned i = 0; i < t_->s; ++i) {
        out += (a % p + b % p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

Fe Field::sub(Fe a, Fe b) const {
    detail::tick_sub();
    const unsigned p = t_->p;
    if (p == 2) return a ^ b;
    if (t_->s == 1) return (a + p - b) % p;
    Fe out = 0, mult = 1;
    for (unsigned i = 0; i < t_->s; ++i) {
        out += (a % p + p - b % p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

Fe Field::mul(Fe a, Fe b) const {
    detail::tick_mul();
    if (a == 0 || b == 0) return 0;
    const unsigned n = t_->q - 1;
    return t_->exp[(t_->log[a] + t_->log[b]) % n];
}

Fe Field::div(Fe a, Fe b) const {
    detail::tick_div();
    if (b == 0) throw std::domain_error("field division by zero");
    if (a == 0) return 0;
    const unsigned n = t_->q - 1;
    return t_->exp[(t_->log[a] + n - t_->log[b]) % n];
}

bool Field::operator==(const Field& other) const {
    return t_ == other.t_ ||
           (t_->p == other.t_->p && t_->s == other.t_->s && t_->modulus == other.t_->modulus);
}

}  // namespace gqc
