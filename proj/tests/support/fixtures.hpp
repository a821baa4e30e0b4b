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

// Hand-checked reference codes used across the test suites:
//
//   * c7  : a (7, 3) binary 3-orbit code with profile (3, 3, 1), given by a
//           generator matrix; its module basis is ((1, 1+t, 1), X_2, X_3).
//   * c15 : a (15, 9) binary 3-orbit code with profile (6, 6, 3), given by
//           a 6-row parity-check matrix.
//   * c16 : a (16, 8) binary 3-orbit code with profile (6, 6, 4), given by
//           an 8-row parity-check matrix.

#ifndef GQC_TESTS_FIXTURES_HPP
#define GQC_TESTS_FIXTURES_HPP

#include <vector>

#include "gqc/core.hpp"
#include "gqc/grobner.hpp"
#include "gqc/matrix.hpp"

namespace gqc::test {

inline Field gf2() { return Field(2); }

inline Poly poly(const Field& f, std::vector<Fe> coeffs) { return Poly(f, std::move(coeffs)); }

inline PolyVec pv(const OrbitProfile& profile, std::vector<std::vector<Fe>> parts) {
    std::vector<Poly> p;
    for (auto& c : parts) p.push_back(Poly(profile.field(), std::move(c)));
    return PolyVec(profile, std::move(p));
}

// ---------------------------------------------------------------- c7 ----

inline OrbitProfile c7_profile() { return OrbitProfile(gf2(), {3, 3, 1}); }

inline MatrixFq c7_generator() {
    return MatrixFq::from_rows(gf2(), {{1, 1, 1, 0, 0, 0, 1},
                                       {1, 1, 0, 1, 0, 1, 0},
                                       {0, 1, 1, 1, 1, 0, 0},
                                       {1, 0, 1, 0, 1, 1, 0}});
}

/// Parity-check matrix of c7 (annihilates every generator row).
inline MatrixFq c7_parity() {
    return MatrixFq::from_rows(gf2(), {{1, 0, 1, 1, 0, 0, 0},
                                       {1, 1, 0, 0, 1, 0, 0},
                                       {0, 1, 1, 0, 0, 1, 0},
                                       {1, 1, 1, 0, 0, 0, 1}});
}

/// Reduced POT basis of c7: ((1, 1+t, 1), (0, 1+t^3, 0), (0, 0, 1+t)).
inline GrobnerBasis c7_expected_basis() {
    OrbitProfile profile = c7_profile();
    std::vector<PolyVec> v;
    v.push_back(pv(profile, {{1}, {1, 1}, {1}}));
    v.push_back(pv(profile, {{}, {1, 0, 0, 1}, {}}));
    v.push_back(pv(profile, {{}, {}, {1, 1}}));
    return {std::move(v), Ordering::POT, true, profile};
}

// --------------------------------------------------------------- c15 ----

inline OrbitProfile c15_profile() { return OrbitProfile(gf2(), {6, 6, 3}); }

inline MatrixFq c15_parity() {
    return MatrixFq::from_rows(gf2(), {{1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0},
                                       {0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1},
                                       {1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 0, 1},
                                       {1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 0},
                                       {0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 1},
                                       {1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1}});
}

/// Row-reduced echelon form of c15_parity (rank 6, pivots 0 1 6 7 8 9).
inline MatrixFq c15_expected_echelon() {
    return MatrixFq::from_rows(gf2(), {{1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1},
                                       {0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1},
                                       {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0}});
}

inline std::vector<std::size_t> c15_expected_tau_sources() {
    return {0, 1, 6, 7, 8, 9, 2, 3, 4, 5, 10, 11, 12, 13, 14};
}

/// Generator matrix read off the standard form of c15's echelon form.
inline MatrixFq c15_expected_generator() {
    return MatrixFq::from_rows(gf2(), {{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                       {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0},
                                       {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                                       {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                                       {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
}

/// Reduced POT basis: ((1, 0, 1), (0, 1+t+t^3+t^4, 1+t), (0, 0, 1+t+t^2)).
inline GrobnerBasis c15_expected_basis() {
    OrbitProfile profile = c15_profile();
    std::vector<PolyVec> v;
    v.push_back(pv(profile, {{1}, {}, {1}}));
    v.push_back(pv(profile, {{}, {1, 1, 0, 1, 1}, {1, 1}}));
    v.push_back(pv(profile, {{}, {}, {1, 1, 1}}));
    return {std::move(v), Ordering::POT, true, profile};
}

// --------------------------------------------------------------- c16 ----

inline OrbitProfile c16_profile() { return OrbitProfile(gf2(), {6, 6, 4}); }

inline MatrixFq c16_parity() {
    return MatrixFq::from_rows(gf2(), {{0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                                       {1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0},
                                       {0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0},
                                       {1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                                       {0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
                                       {1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},
                                       {1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}});
}

/// Reduced RPOT basis of the dual of c16:
/// ((1+t^6, 0, 0), (t+t^2+t^4+t^5, 1+t^2, 0), (1+t+t^3+t^4, 1, 1)).
inline GrobnerBasis c16_expected_dual_basis() {
    OrbitProfile profile = c16_profile();
    std::vector<PolyVec> v;
    v.push_back(pv(profile, {{1, 0, 0, 0, 0, 0, 1}, {}, {}}));
    v.push_back(pv(profile, {{0, 1, 1, 0, 1, 1}, {1, 0, 1}, {}}));
    v.push_back(pv(profile, {{1, 1, 0, 1, 1}, {1}, {1}}));
    return {std::move(v), Ordering::RPOT, true, profile};
}

/// Relation matrix of the dual basis:
/// ((1, 0, 0), (t+t^2+t^3, 1+t^2+t^4, 0), (1+t^2, 1+t^2, 1+t^4)).
inline std::vector<std::vector<std::vector<Fe>>> c16_expected_relation_entries() {
    return {{{1}, {}, {}},
            {{0, 1, 1, 1}, {1, 0, 1, 0, 1}, {}},
            {{1, 0, 1}, {1, 0, 1}, {1, 0, 0, 0, 1}}};
}

/// Reversal transpose of the relation matrix:
/// ((1, t^3+t^4+t^5, 1+t^2), (0, 1+t^2+t^4, 1+t^2), (0, 0, 1+t^4)).
inline std::vector<std::vector<std::vector<Fe>>> c16_expected_reversal_entries() {
    return {{{1}, {0, 0, 0, 1, 1, 1}, {1, 0, 1}},
            {{}, {1, 0, 1, 0, 1}, {1, 0, 1}},
            {{}, {}, {1, 0, 0, 0, 1}}};
}

/// Reduced POT basis:
/// ((1, 1+t+t^2, t+t^3), (0, 1+t^2+t^4, 1+t^2), (0, 0, 1+t^4)).
inline GrobnerBasis c16_expected_basis() {
    OrbitProfile profile = c16_profile();
    std::vector<PolyVec> v;
    v.push_back(pv(profile, {{1}, {1, 1, 1}, {0, 1, 0, 1}}));
    v.push_back(pv(profile, {{}, {1, 0, 1, 0, 1}, {1, 0, 1}}));
    v.push_back(pv(profile, {{}, {}, {1, 0, 0, 0, 1}}));
    return {std::move(v), Ordering::POT, true, profile};
}

inline MatrixFq c16_expected_generator() {
    return MatrixFq::from_rows(gf2(), {{1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 1},
                                       {0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 0},
                                       {0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1},
                                       {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0},
                                       {0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1},
                                       {0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0},
                                       {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
                                       {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}});
}

/// The reduced TOP-ordered basis of the same module (leads t^3 e_2,
/// t^3 e_3, t^2 e_1), used as an extra orthogonality fixture.  Derived by
/// enumerating the 256 codewords and inter-reducing the minimal leads.
inline std::vector<PolyVec> c16_top_basis() {
    OrbitProfile profile = c16_profile();
    std::vector<PolyVec> v;
    v.push_back(pv(profile, {{0, 1}, {0, 1, 1, 1}, {1, 0, 1}}));
    v.push_back(pv(profile, {{1}, {1, 1, 1}, {0, 1, 0, 1}}));
    v.push_back(pv(profile, {{1, 1, 1}, {}, {}}));
    return v;
}

// ------------------------------------------------- scalar demo ----------

/// Mixed-length profile (5, 4, 3) with a worked scalar product:
/// <(1+t, 0, 1+t^2), (1+t+t^3, 1+t, 1+t)> = 1+t^2+t^8+t^10+t^11+t^14
/// mod t^15 - 1.
inline OrbitProfile scalar_demo_profile() { return OrbitProfile(gf2(), {5, 4, 3}); }

inline PolyVec scalar_demo_u() { return pv(scalar_demo_profile(), {{1, 1}, {}, {1, 0, 1}}); }
inline PolyVec scalar_demo_v() { return pv(scalar_demo_profile(), {{1, 1, 0, 1}, {1, 1}, {1, 1}}); }

inline Poly scalar_demo_value() {
    return poly(gf2(), {1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1});
}

// ------------------------------------------------- echelon demo ---------

/// 5 x 8 row-reduction example with a known canonical form.
inline MatrixFq echelon_demo_input() {
    return MatrixFq::from_rows(gf2(), {{1, 0, 1, 1, 1, 1, 0, 0},
                                       {0, 1, 1, 0, 0, 1, 0, 0},
                                       {1, 0, 1, 0, 1, 1, 1, 0},
                                       {1, 1, 0, 1, 0, 1, 0, 0},
                                       {0, 1, 1, 0, 0, 1, 1, 1}});
}

inline MatrixFq echelon_demo_expected() {
    return MatrixFq::from_rows(gf2(), {{1, 0, 1, 0, 0, 0, 0, 1},
                                       {0, 1, 1, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 1, 0, 0, 0, 1},
                                       {0, 0, 0, 0, 1, 1, 0, 0},
                                       {0, 0, 0, 0, 0, 0, 1, 1}});
}

}  // namespace gqc::test

#endif
