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

#ifndef GQC_FIELD_HPP
#define GQC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace gqc {

/// A field element in [0, q).  For GF(p^s) the value encodes the base-p
/// digits of the polynomial representation: value = sum d_i * p^i.
using Fe = unsigned;

/// Tally of field operations performed while a CountingScope is active.
struct OpCounter {
    std::uint64_t adds = 0;
    std::uint64_t subs = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;

    std::uint64_t total() const { return adds + subs + muls + divs; }
};

namespace detail {
OpCounter* active_counter() noexcept;
void set_active_counter(OpCounter* c) noexcept;
}  // namespace detail

/// Routes every field operation on the current thread into the given
/// counter for the lifetime of the scope.  Scopes nest; the innermost wins.
class CountingScope {
   public:
    explicit CountingScope(OpCounter& counter) noexcept : previous_(detail::active_counter()) {
        detail::set_active_counter(&counter);
    }
    ~CountingScope() { detail::set_active_counter(previous_); }

    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

   private:
    OpCounter* previous_;
};

/**
 * Arithmetic in GF(p^s), p prime, s >= 1, p^s <= 2^16.
 *
 * Multiplication and division go through log/antilog tables built from a
 * generator of the multiplicative group; addition is digit-wise mod p
 * (a plain XOR in characteristic 2).  Instances are immutable and cheap
 * to copy (shared table storage), so they can be freely embedded in
 * polynomials and matrices.
 *
 * Default irreducible moduli are shipped for p = 2, s <= 16.  All other
 * extension fields require an explicit monic irreducible modulus, given
 * as ascending coefficients c_0 .. c_s.  Irreducibility is verified at
 * construction by brute-force factor search.
 */
class Field {
   public:
    Field(unsigned p, unsigned s = 1);
    Field(unsigned p, unsigned s, const std::vector<Fe>& modulus);

    unsigned characteristic() const { return t_->p; }
    unsigned extension_degree() const { return t_->s; }
    unsigned order() const { return t_->q; }
    /// Modulus coefficients c_0 .. c_s (empty for prime fields).
    const std::vector<Fe>& modulus() const { return t_->modulus; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe mul(Fe a, Fe b) const;
    Fe div(Fe a, Fe b) const;  // throws on b == 0

    Fe neg(Fe a) const { return sub(0, a); }
    Fe inv(Fe a) const { return div(1, a); }

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

   private:
    struct Tables {
        unsigned p = 0, s = 0, q = 0;
        std::vector<Fe> modulus;  // ascending, size s+1; empty when s == 1
        std::vector<Fe> exp;      // exp[i] = g^i, i in [0, q-1)
        std::vector<unsigned> log;  // log[exp[i]] = i
    };

    std::shared_ptr<const Tables> t_;

    void build(unsigned p, unsigned s, std::vector<Fe> modulus, bool modulus_given);
    Fe raw_mul(Fe a, Fe b) const;  // table-free multiply, used during setup
};

}  // namespace gqc

#endif
