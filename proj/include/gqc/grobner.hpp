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

#ifndef GQC_GROBNER_HPP
#define GQC_GROBNER_HPP

#include <span>
#include <vector>

#include "gqc/core.hpp"

namespace gqc {

/// Position-over-term orderings.  POT ranks earlier orbits higher and
/// yields upper-triangular bases; RPOT is the mirror image.
enum class Ordering { POT, RPOT };

/// t^exponent e_orbit, with 0 <= exponent < l_orbit.
struct Monomial {
    int orbit;
    int exponent;

    bool operator==(const Monomial&) const = default;
};

/**
 * Triangular module basis of the submodule generated by a set of vectors
 * together with every orbit relation X_i.  For POT, vector i has zero
 * components before orbit i and a nonzero diagonal dividing t^{l_i} - 1;
 * in the reduced form diagonals are monic and every off-diagonal degree
 * is below the matching diagonal degree.
 */
struct GrobnerBasis {
    std::vector<PolyVec> vectors;
    Ordering ordering = Ordering::POT;
    bool reduced = false;
    OrbitProfile profile;

    const Poly& entry(int i, int j) const { return vectors[static_cast<std::size_t>(i)].part(j); }
    const Poly& diagonal(int i) const { return entry(i, i); }
};

/**
 * Buchberger's algorithm for submodules of GF(q)[t]^m.  Column gcds are
 * carried out by whole-row Euclidean reduction with the orbit relation
 * X_j appended to the working rows, so every diagonal divides t^{l_j}-1
 * and columns not represented in the input fall back to g_j = X_j.
 * Intermediate components stay reduced mod t^{l_i} - 1 throughout.
 */
GrobnerBasis buchberger(std::span<const PolyVec> rows, const OrbitProfile& profile, Ordering ordering);

/// Inter-reduce a triangular basis: monic diagonals, off-diagonal degrees
/// below the matching diagonal degree.  The result is the unique reduced
/// basis of the module.
GrobnerBasis reduce_basis(const GrobnerBasis& basis);

struct DivisionResult {
    std::vector<Poly> quotients;  // one per basis vector
    PolyVec remainder;            // component i has degree < deg g_ii
};

/**
 * Division of u by a POT basis: u = sum Q_i g_i + remainder in M, with the
 * remainder supported on redundant monomials only.  The remainder is zero
 * exactly when u lies in the module.
 */
DivisionResult divide(const PolyVec& u, const GrobnerBasis& basis);

struct MonomialSplit {
    std::vector<Monomial> redundant;    // t^j e_i with j < deg g_ii
    std::vector<Monomial> information;  // t^j e_i with deg g_ii <= j < l_i
};

/// Monomial classification for a POT basis, in orbit-major,
/// exponent-ascending order.  |information| equals the code dimension.
MonomialSplit classify_monomials(const GrobnerBasis& basis);

/// Code dimension k = sum_i (l_i - deg g_ii).
int basis_dimension(const GrobnerBasis& basis);

}  // namespace gqc

#endif
