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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gqc/echelon.hpp"
#include "gqc/transpose.hpp"
#include "support/fixtures.hpp"
#include "support/random_gqc.hpp"

using namespace gqc;
using namespace gqc::test;

TEST_CASE("standard form of the c15 echelon form") {
    EchelonForm e = gauss_echelon(c15_parity());
    CHECK(e.matrix == c15_expected_echelon());
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 6, 7, 8, 9});

    StandardForm sf = standard_form(e);
    CHECK(sf.tau.sources() == c15_expected_tau_sources());

    // tau(E) must be [I | A]
    MatrixFq permuted = sf.tau.apply_to_columns(e.matrix);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) CHECK(permuted.at(r, c) == (r == c ? 1u : 0u));

    MatrixFq G = dual_generator(sf.right, sf.tau, 15);
    CHECK(G == c15_expected_generator());
    CHECK((G * c15_parity().transposed()).is_zero());
}

TEST_CASE("standard form edge cases") {
    Field f = gf2();
    SUBCASE("already in standard form") {
        MatrixFq e = MatrixFq::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
        StandardForm sf = standard_form(gauss_echelon(e));
        CHECK(sf.tau == Permutation::identity(3));
        CHECK(sf.right.cols() == 1);
    }
    SUBCASE("identity matrix leaves an empty right block") {
        StandardForm sf = standard_form(gauss_echelon(MatrixFq::identity(f, 4)));
        CHECK(sf.tau == Permutation::identity(4));
        CHECK(sf.right.cols() == 0);
    }
}

TEST_CASE("dual generator over a ternary field") {
    std::mt19937 rng(61);
    Field f3(3);
    for (int trial = 0; trial < 30; ++trial) {
        MatrixFq H(f3, 3, 7);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 7; ++c) H.at(r, c) = rng() % 3;
        EchelonForm e = gauss_echelon(H);
        if (e.pivots.empty() || e.pivots.size() == 7) continue;
        StandardForm sf = standard_form(e);
        MatrixFq G = dual_generator(sf.right, sf.tau, 7);
        CHECK((G * H.transposed()).is_zero());
        CHECK(G.rows() == 7 - e.pivots.size());
    }
}

TEST_CASE("echelon route on the c15 fixture") {
    GrobnerBasis basis = grobner_via_echelon(c15_parity(), c15_profile());
    CHECK(basis.reduced);
    CHECK(basis.vectors == c15_expected_basis().vectors);
    CHECK(basis_dimension(basis) == 9);
}

TEST_CASE("echelon route on the c16 fixture matches the transpose route") {
    GrobnerBasis via_e = grobner_via_echelon(c16_parity(), c16_profile());
    GrobnerBasis via_t = grobner_via_transpose(c16_parity(), c16_profile());
    CHECK(via_e.vectors == c16_expected_basis().vectors);
    CHECK(via_t.vectors == c16_expected_basis().vectors);
}

TEST_CASE("echelon route degenerate inputs") {
    OrbitProfile profile(gf2(), {3, 4});
    SUBCASE("identity parity-check means the zero code") {
        GrobnerBasis b = grobner_via_echelon(MatrixFq::identity(gf2(), 7), profile);
        for (int i = 0; i < 2; ++i)
            CHECK(b.vectors[static_cast<std::size_t>(i)] == PolyVec::orbit_relation(profile, i));
    }
    SUBCASE("all-zero parity-check means the full code") {
        MatrixFq zero(gf2(), 2, 7);
        GrobnerBasis b = grobner_via_echelon(zero, profile);
        CHECK(basis_dimension(b) == 7);
        for (int i = 0; i < 2; ++i) CHECK(b.diagonal(i) == Poly::one(gf2()));
    }
}

TEST_CASE("relation matrix of the c16 dual basis") {
    PolyMatrix A = relation_matrix(c16_expected_dual_basis());
    auto expected = c16_expected_relation_entries();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(A.at(i, j) == Poly(gf2(), expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    // reduced input keeps off-diagonal degrees below the diagonal degree
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j) CHECK(A.at(i, j).degree() < A.at(i, i).degree());
}

TEST_CASE("relation matrix special shapes") {
    Field f = gf2();
    SUBCASE("single orbit with relation diagonal") {
        OrbitProfile p(f, {5});
        std::vector<PolyVec> v{PolyVec::orbit_relation(p, 0)};
        GrobnerBasis dual{v, Ordering::RPOT, true, p};
        PolyMatrix A = relation_matrix(dual);
        CHECK(A.at(0, 0) == Poly::one(f));
    }
    SUBCASE("diagonal dual basis gives a diagonal relation matrix") {
        OrbitProfile p(f, {4, 6});
        std::vector<PolyVec> v;
        v.push_back(pv(p, {{1, 1}, {}}));          // h11 = 1+t divides t^4-1
        v.push_back(pv(p, {{}, {1, 1, 1}}));       // h22 = 1+t+t^2 divides t^6-1
        GrobnerBasis dual{v, Ordering::RPOT, true, p};
        PolyMatrix A = relation_matrix(dual);
        CHECK(A.at(1, 0).is_zero());
        CHECK(A.at(0, 0) == Poly::cyclic_modulus(f, 4).divmod(pv(p, {{1, 1}, {}}).part(0)).quotient);
    }
    SUBCASE("invalid dual input raises the exactness error") {
        OrbitProfile p(f, {4});
        std::vector<PolyVec> v{pv(p, {{1, 1, 1}})};  // 1+t+t^2 does not divide t^4-1
        GrobnerBasis dual{v, Ordering::RPOT, true, p};
        CHECK_THROWS_AS(relation_matrix(dual), InternalError);
    }
}

TEST_CASE("reversal transpose of the relation matrix") {
    PolyMatrix A = relation_matrix(c16_expected_dual_basis());
    PolyMatrix B = reversal_transpose(A);
    auto expected = c16_expected_reversal_entries();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(B.at(i, j) == Poly(gf2(), expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));

    SUBCASE("palindromic diagonals are fixed") {
        OrbitProfile p(gf2(), {6});
        PolyMatrix D(p);
        D.set(0, 0, poly(gf2(), {1, 0, 1, 0, 1}));
        PolyMatrix DT = reversal_transpose(D);
        CHECK(DT.at(0, 0) == D.at(0, 0));
    }
}

TEST_CASE("exact pairing between dual basis and reversal rows") {
    GrobnerBasis dual = c16_expected_dual_basis();
    PolyMatrix B = reversal_transpose(relation_matrix(dual));
    CHECK(pairing_check(dual, B));

    SUBCASE("a single perturbed coefficient breaks the pairing") {
        PolyMatrix bad = B;
        bad.set(0, 1, bad.at(0, 1) + Poly::one(gf2()));
        CHECK_FALSE(pairing_check(dual, bad));
    }
    SUBCASE("single-orbit pairing gives the orbit modulus") {
        OrbitProfile p(gf2(), {7});
        std::vector<PolyVec> v{pv(p, {{1, 1, 0, 1}})};  // 1+t+t^3 divides t^7-1
        GrobnerBasis d{v, Ordering::RPOT, true, p};
        PolyMatrix b = reversal_transpose(relation_matrix(d));
        CHECK(pairing_check(d, b));
    }
}

TEST_CASE("transpose route reproduces the c16 basis") {
    GrobnerBasis reduced = grobner_via_transpose(c16_parity(), c16_profile());
    CHECK(reduced.vectors == c16_expected_basis().vectors);

    SUBCASE("the unreduced image differs only in the first row") {
        GrobnerBasis raw = grobner_via_transpose(c16_parity(), c16_profile(), false);
        CHECK_FALSE(raw.reduced);
        OrbitProfile p = c16_profile();
        CHECK(raw.vectors[0] == pv(p, {{1}, {0, 0, 0, 1, 1, 1}, {1, 0, 1}}));
        CHECK(raw.vectors[1] == c16_expected_basis().vectors[1]);
        CHECK(raw.vectors[2] == c16_expected_basis().vectors[2]);
    }
}

TEST_CASE("transpose route on a single-orbit code uses the reciprocal") {
    // parity-check rows generate the dual of a length-7 cyclic code with
    // dual generator 1+t+t^3
    Field f = gf2();
    OrbitProfile p(f, {7});
    PolyVec h = pv(p, {{1, 1, 0, 1}});
    MatrixFq H = shift_matrix(h);
    GrobnerBasis basis = grobner_via_transpose(H, p);

    Poly quotient = Poly::cyclic_modulus(f, 7).divmod(poly(f, {1, 1, 0, 1})).quotient;
    Poly expected = quotient.reciprocal().monic();
    CHECK(basis.diagonal(0) == expected);
    CHECK(grobner_via_echelon(H, p).vectors == basis.vectors);
}

TEST_CASE("both routes agree on random instances") {
    std::mt19937 rng(67);
    for (unsigned q : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Instance inst = random_instance(rng, q, 32);
            GrobnerBasis a = grobner_via_echelon(inst.H, inst.profile);
            GrobnerBasis b = grobner_via_transpose(inst.H, inst.profile);
            REQUIRE(a.vectors.size() == b.vectors.size());
            CHECK(a.vectors == b.vectors);
            // dimension identity: sum of (l_i - deg g_ii) = n - rank(H)
            CHECK(basis_dimension(a) ==
                  inst.profile.length() - static_cast<int>(rank_of(inst.H)));
            CHECK(static_cast<int>(generator_matrix(a).rows()) == basis_dimension(a));
        }
    }
}

TEST_CASE("basis vectors and all their shifts are codewords") {
    GrobnerBasis basis = grobner_via_echelon(c16_parity(), c16_profile());
    for (const PolyVec& g : basis.vectors) {
        MatrixFq shifts = shift_matrix(g.reduced());
        CHECK((c16_parity() * shifts.transposed()).is_zero());
    }
}

TEST_CASE("generator matrix from the reduced basis") {
    GrobnerBasis basis = grobner_via_transpose(c16_parity(), c16_profile());
    MatrixFq G = generator_matrix(basis);
    CHECK(G == c16_expected_generator());
    CHECK((G * c16_parity().transposed()).is_zero());
    CHECK(rank_of(G) == 8);

    SUBCASE("c7 generator matrix spans the original row space") {
        GrobnerBasis b7 = reduce_basis(buchberger(
            std::vector<PolyVec>{PolyVec::from_coords(c7_generator().row(0), c7_profile()),
                                 PolyVec::from_coords(c7_generator().row(1), c7_profile()),
                                 PolyVec::from_coords(c7_generator().row(2), c7_profile()),
                                 PolyVec::from_coords(c7_generator().row(3), c7_profile())},
            c7_profile(), Ordering::POT));
        MatrixFq G7 = generator_matrix(b7);
        CHECK(G7.rows() == 3);
        MatrixFq stacked = c7_generator();
        for (std::size_t r = 0; r < G7.rows(); ++r) stacked.append_row(G7.row(r));
        CHECK(rank_of(stacked) == 3);
    }
    SUBCASE("zero code yields an empty generator matrix") {
        OrbitProfile p(gf2(), {3, 4});
        GrobnerBasis zero = grobner_via_echelon(MatrixFq::identity(gf2(), 7), p);
        CHECK(generator_matrix(zero).rows() == 0);
    }
}

TEST_CASE("orthogonality between the basis and the dual basis") {
    // the computed POT basis of the code pairs to zero with the computed
    // RPOT basis of the dual, for every fixture and a TOP-ordered variant
    auto check_pairs = [](const GrobnerBasis& g, const GrobnerBasis& h) {
        for (const PolyVec& gi : g.vectors)
            for (const PolyVec& hj : h.vectors) {
                CHECK(scalar_product(gi, hj).value.is_zero());
                CHECK(scalar_product(hj, gi).value.is_zero());
            }
    };
    check_pairs(grobner_via_echelon(c15_parity(), c15_profile()),
                dual_basis_of(c15_parity(), c15_profile()));
    check_pairs(grobner_via_echelon(c16_parity(), c16_profile()),
                dual_basis_of(c16_parity(), c16_profile()));
    check_pairs(grobner_via_echelon(c7_parity(), c7_profile()),
                dual_basis_of(c7_parity(), c7_profile()));

    GrobnerBasis dual16 = dual_basis_of(c16_parity(), c16_profile());
    for (const PolyVec& gi : c16_top_basis())
        for (const PolyVec& hj : dual16.vectors) CHECK(scalar_product(gi, hj).value.is_zero());
}
