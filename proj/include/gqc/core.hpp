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

#ifndef GQC_CORE_HPP
#define GQC_CORE_HPP

#include <span>
#include <vector>

#include "gqc/field.hpp"
#include "gqc/matrix.hpp"
#include "gqc/poly.hpp"

namespace gqc {

/**
 * The orbit structure of a generalized quasi-cyclic code: a field and the
 * cycle lengths (l_1, ..., l_m) of the simultaneous local shift sigma.
 * Coordinates 0 .. n-1 split into consecutive blocks of those lengths.
 */
class OrbitProfile {
   public:
    OrbitProfile(const Field& f, std::vector<int> lengths);

    const Field& field() const { return field_; }
    int orbit_count() const { return static_cast<int>(lengths_.size()); }  // m
    int length() const { return n_; }                                      // n
    int orbit_length(int i) const { return lengths_[static_cast<std::size_t>(i)]; }
    int orbit_offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& lengths() const { return lengths_; }

    /// Profile with the orbit order reversed (used to mirror orderings).
    OrbitProfile reversed() const;

    bool operator==(const OrbitProfile& other) const;
    bool operator!=(const OrbitProfile& other) const { return !(*this == other); }

   private:
    Field field_;
    std::vector<int> lengths_;
    std::vector<int> offsets_;
    int n_;
};

/**
 * An m-tuple of polynomials: an element of GF(q)[t]^m, or of the module
 * M = (+) GF(q)[t]/(t^{l_i} - 1) when every component degree is below its
 * orbit length (in_module() reports which).  Basis vectors may carry a
 * component equal to t^{l_i} - 1, so membership in M is not enforced.
 */
class PolyVec {
   public:
    explicit PolyVec(const OrbitProfile& profile);
    PolyVec(const OrbitProfile& profile, std::vector<Poly> parts);

    static PolyVec zero(const OrbitProfile& profile) { return PolyVec(profile); }

    /// Coordinate row -> polynomial tuple, component i collecting the
    /// coefficients of orbit i in ascending powers.
    static PolyVec from_coords(std::span<const Fe> row, const OrbitProfile& profile);

    /// (t^{l_i} - 1) e_i, the relation vector of orbit i (0-based index).
    static PolyVec orbit_relation(const OrbitProfile& profile, int i);

    const OrbitProfile& profile() const { return profile_; }
    const Poly& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    void set_part(int i, Poly p);
    int orbit_count() const { return profile_.orbit_count(); }

    bool is_zero() const;
    bool in_module() const;

    /// Inverse of from_coords; every component degree must be < l_i.
    std::vector<Fe> to_coords() const;

    /// Componentwise reduction mod t^{l_i} - 1.
    PolyVec reduced() const;

    /// Multiplication by t in M: one simultaneous local cyclic shift.
    PolyVec cyclic_shift() const;

    /// Multiplication by c(t) in M (componentwise, folded).
    PolyVec scaled_cyclic(const Poly& c) const;

    PolyVec operator+(const PolyVec& rhs) const;
    PolyVec operator-(const PolyVec& rhs) const;
    bool operator==(const PolyVec& rhs) const;
    bool operator!=(const PolyVec& rhs) const { return !(*this == rhs); }

    /// Components in reversed orbit order, over the reversed profile.
    PolyVec reversed() const;

   private:
    OrbitProfile profile_;
    std::vector<Poly> parts_;
};

/**
 * Scalar product of polynomial vectors.  `lcm_length` is the lcm of the
 * orbit lengths on the joint support (indices where both components are
 * nonzero); it is 1 when the support is empty.  `value` is the canonical
 * representative mod t^lcm - 1; `exact` is the same sum before that final
 * reduction, which is what exact orthogonality statements refer to.
 * Components of degree exactly l_i enter through their formal reciprocal.
 */
struct ScalarProduct {
    Poly value;
    Poly exact;
    int lcm_length = 1;
};

ScalarProduct scalar_product(const PolyVec& u, const PolyVec& v);

/// The matrix whose row k is the coordinate vector of t^k * v, for
/// k = 0 .. l-1 with l the lcm of orbit lengths on the support of v.
/// The zero vector yields a single zero row.
MatrixFq shift_matrix(const PolyVec& v);

/// True iff the row space of H is invariant under the local cyclic shift,
/// i.e. H is a parity-check matrix of a GQC code for this profile.
bool is_gqc(const MatrixFq& H, const OrbitProfile& profile);

}  // namespace gqc

#endif
