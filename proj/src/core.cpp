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

#include "gqc/core.hpp"

#include <numeric>
#include <stdexcept>

namespace gqc {

OrbitProfile::OrbitProfile(const Field& f, std::vector<int> lengths)
    : field_(f), lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw std::invalid_argument("profile needs at least one orbit");
    offsets_.reserve(lengths_.size());
    n_ = 0;
    for (int l : lengths_) {
        if (l < 1) throw std::invalid_argument("orbit lengths must be positive");
        offsets_.push_back(n_);
        n_ += l;
    }
}

OrbitProfile OrbitProfile::reversed() const {
    std::vector<int> rev(lengths_.rbegin(), lengths_.rend());
    return OrbitProfile(field_, std::move(rev));
}

bool OrbitProfile::operator==(const OrbitProfile& other) const {
    return field_ == other.field_ && lengths_ == other.lengths_;
}

PolyVec::PolyVec(const OrbitProfile& profile) : profile_(profile) {
    parts_.assign(static_cast<std::size_t>(profile.orbit_count()), Poly::zero(profile.field()));
}

PolyVec::PolyVec(const OrbitProfile& profile, std::vector<Poly> parts)
    : profile_(profile), parts_(std::move(parts)) {
    if (parts_.size() != static_cast<std::size_t>(profile.orbit_count()))
        throw std::invalid_argument("component count does not match profile");
}

PolyVec PolyVec::from_coords(std::span<const Fe> row, const OrbitProfile& profile) {
    if (row.size() != static_cast<std::size_t>(profile.length()))
        throw std::invalid_argument("coordinate vector length does not match profile");
    PolyVec out(profile);
    for (int i = 0; i < profile.orbit_count(); ++i) {
        int off = profile.orbit_offset(i);
        int l = profile.orbit_length(i);
        std::vector<Fe> coeffs(row.begin() + off, row.begin() + off + l);
        out.parts_[static_cast<std::size_t>(i)] = Poly(profile.field(), std::move(coeffs));
    }
    return out;
}

PolyVec PolyVec::orbit_relation(const OrbitProfile& profile, int i) {
    if (i < 0 || i >= profile.orbit_count()) throw std::invalid_argument("orbit index out of range");
    PolyVec out(profile);
    out.parts_[static_cast<std::size_t>(i)] = Poly::cyclic_modulus(profile.field(), profile.orbit_length(i));
    return out;
}

void PolyVec::set_part(int i, Poly p) { parts_[static_cast<std::size_t>(i)] = std::move(p); }

bool PolyVec::is_zero() const {
    for (const Poly& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyVec::in_module() const {
    for (int i = 0; i < orbit_count(); ++i)
        if (parts_[static_cast<std::size_t>(i)].degree() >= profile_.orbit_length(i)) return false;
    return true;
}

std::vector<Fe> PolyVec::to_coords() const {
    if (!in_module()) throw std::invalid_argument("component degree reaches its orbit length");
    std::vector<Fe> out(static_cast<std::size_t>(profile_.length()), 0);
    for (int i = 0; i < orbit_count(); ++i) {
        int off = profile_.orbit_offset(i);
        const auto& c = parts_[static_cast<std::size_t>(i)].coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) out[static_cast<std::size_t>(off) + j] = c[j];
    }
    return out;
}

PolyVec PolyVec::reduced() const {
    PolyVec out(profile_);
    for (int i = 0; i < orbit_count(); ++i)
        out.parts_[static_cast<std::size_t>(i)] =
            parts_[static_cast<std::size_t>(i)].cyclic_mod(profile_.orbit_length(i));
    return out;
}

PolyVec PolyVec::cyclic_shift() const {
    Poly t = Poly::monomial(profile_.field(), 1);
    return scaled_cyclic(t);
}

PolyVec PolyVec::scaled_cyclic(const Poly& c) const {
    PolyVec out(profile_);
    for (int i = 0; i < orbit_count(); ++i)
        out.parts_[static_cast<std::size_t>(i)] =
            mul_cyclic(parts_[static_cast<std::size_t>(i)], c, profile_.orbit_length(i));
    return out;
}

PolyVec PolyVec::operator+(const PolyVec& rhs) const {
    if (profile_ != rhs.profile_) throw std::invalid_argument("profile mismatch");
    PolyVec out(profile_);
    for (std::size_t i = 0; i < parts_.size(); ++i) out.parts_[i] = parts_[i] + rhs.parts_[i];
    return out;
}

PolyVec PolyVec::operator-(const PolyVec& rhs) const {
    if (profile_ != rhs.profile_) throw std::invalid_argument("profile mismatch");
    PolyVec out(profile_);
    for (std::size_t i = 0; i < parts_.size(); ++i) out.parts_[i] = parts_[i] - rhs.parts_[i];
    return out;
}

bool PolyVec::operator==(const PolyVec& rhs) const {
    return profile_ == rhs.profile_ && parts_ == rhs.parts_;
}

PolyVec PolyVec::reversed() const {
    std::vector<Poly> rev(parts_.rbegin(), parts_.rend());
    return PolyVec(profile_.reversed(), std::move(rev));
}

namespace {

// Reversal convention for scalar products: a component of degree exactly
// l enters through its formal reciprocal instead of being folded to zero.
Poly transpose_component(const Poly& p, int l) {
    if (p.degree() == l) return p.reciprocal();
    return p.circulant_transpose(l);
}

}  // namespace

ScalarProduct scalar_product(const PolyVec& u, const PolyVec& v) {
    if (u.profile() != v.profile()) throw std::invalid_argument("profile mismatch");
    const OrbitProfile& profile = u.profile();
    const Field& f = profile.field();

    long long l = 1;
    bool any = false;
    for (int i = 0; i < profile.orbit_count(); ++i) {
        if (u.part(i).is_zero() || v.part(i).is_zero()) continue;
        any = true;
        l = std::lcm(l, static_cast<long long>(profile.orbit_length(i)));
    }
    if (!any) return {Poly::zero(f), Poly::zero(f), 1};
    const int L = static_cast<int>(l);

    Poly exact = Poly::zero(f);
    for (int i = 0; i < profile.orbit_count(); ++i) {
        if (u.part(i).is_zero() || v.part(i).is_zero()) continue;
        const int li = profile.orbit_length(i);
        Poly term = u.part(i) * transpose_component(v.part(i), li);
        // replicate by 1 + t^{l_i} + ... up to the support lcm
        std::vector<Fe> rep(static_cast<std::size_t>(L - li) + 1, 0);
        for (int k = 0; k * li <= L - li; ++k) rep[static_cast<std::size_t>(k * li)] = 1;
        exact = exact + term * Poly(f, std::move(rep));
    }
    return {exact.cyclic_mod(L), std::move(exact), L};
}

MatrixFq shift_matrix(const PolyVec& v) {
    const OrbitProfile& profile = v.profile();
    long long l = 1;
    for (int i = 0; i < profile.orbit_count(); ++i)
        if (!v.part(i).is_zero()) l = std::lcm(l, static_cast<long long>(profile.orbit_length(i)));
    MatrixFq out(profile.field(), static_cast<std::size_t>(l), static_cast<std::size_t>(profile.length()));
    PolyVec cur = v.reduced();
    for (long long k = 0; k < l; ++k) {
        auto coords = cur.to_coords();
        for (std::size_t c = 0; c < coords.size(); ++c) out.at(static_cast<std::size_t>(k), c) = coords[c];
        cur = cur.cyclic_shift();
    }
    return out;
}

bool is_gqc(const MatrixFq& H, const OrbitProfile& profile) {
    if (H.cols() != static_cast<std::size_t>(profile.length()))
        throw std::invalid_argument("column count does not match profile");
    if (H.rows() == 0) return true;
    EchelonForm e = gauss_echelon(H);
    const Field& f = profile.field();
    // Reduce each shifted row against the echelon form; any nonzero
    // residue would enlarge the rank.
    for (std::size_t r = 0; r < H.rows(); ++r) {
        PolyVec row = PolyVec::from_coords(H.row(r), profile);
        std::vector<Fe> shifted = row.cyclic_shift().to_coords();
        for (std::size_t p = 0; p < e.pivots.size(); ++p) {
            Fe factor = shifted[e.pivots[p]];
            if (!factor) continue;
            for (std::size_t c = e.pivots[p]; c < shifted.size(); ++c) {
                Fe src = e.matrix.at(p, c);
                if (src) shifted[c] = f.sub(shifted[c], f.mul(factor, src));
            }
        }
        for (Fe x : shifted)
            if (x) return false;
    }
    return true;
}

}  // namespace gqc
