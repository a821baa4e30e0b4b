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

#include "gqc/transpose.hpp"

#include <stdexcept>
#include <string>

namespace gqc {

PolyMatrix::PolyMatrix(const OrbitProfile& profile) : profile_(profile) {
    const std::size_t m = static_cast<std::size_t>(profile.orbit_count());
    e_.assign(m * m, Poly::zero(profile.field()));
}

PolyMatrix relation_matrix(const GrobnerBasis& dual_basis) {
    if (dual_basis.ordering != Ordering::RPOT || !dual_basis.reduced)
        throw std::invalid_argument("relation matrix needs a reduced RPOT basis");
    const OrbitProfile& profile = dual_basis.profile;
    const Field& f = profile.field();
    const int m = profile.orbit_count();

    PolyMatrix A(profile);
    for (int i = 0; i < m; ++i) {
        auto qr = Poly::cyclic_modulus(f, profile.orbit_length(i)).divmod(dual_basis.diagonal(i));
        if (!qr.remainder.is_zero())
            throw InternalError("diagonal " + std::to_string(i) + " does not divide its orbit modulus");
        A.set(i, i, std::move(qr.quotient));
        for (int j = i - 1; j >= 0; --j) {
            Poly sum = Poly::zero(f);
            for (int d = j + 1; d <= i; ++d) sum = sum + A.at(i, d) * dual_basis.entry(d, j);
            auto div = sum.divmod(dual_basis.diagonal(j));
            if (!div.remainder.is_zero())
                throw InternalError("inexact division at entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") of the relation matrix");
            A.set(i, j, div.quotient.negated());
        }
    }

    // A times the dual basis must equal diag(t^{l_i} - 1) exactly.
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m; ++c) {
            Poly acc = Poly::zero(f);
            for (int j = 0; j < m; ++j) acc = acc + A.at(i, j) * dual_basis.entry(j, c);
            Poly want = i == c ? Poly::cyclic_modulus(f, profile.orbit_length(i)) : Poly::zero(f);
            if (acc != want)
                throw InternalError("relation identity fails at (" + std::to_string(i) + ", " +
                                    std::to_string(c) + ")");
        }
    return A;
}

PolyMatrix reversal_transpose(const PolyMatrix& A) {
    const OrbitProfile& profile = A.profile();
    const int m = A.size();
    PolyMatrix B(profile);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            // entry (i, j) comes from a_ji; the modulus follows A's row index
            const Poly& a = A.at(j, i);
            const int l = profile.orbit_length(j);
            B.set(i, j, a.degree() == l ? a.reciprocal() : a.circulant_transpose(l));
        }
    return B;
}

PolyVec matrix_row(const PolyMatrix& M, int i) {
    std::vector<Poly> parts;
    parts.reserve(static_cast<std::size_t>(M.size()));
    for (int c = 0; c < M.size(); ++c) parts.push_back(M.at(i, c));
    return PolyVec(M.profile(), std::move(parts));
}

bool pairing_check(const GrobnerBasis& dual_basis, const PolyMatrix& B) {
    if (dual_basis.profile != B.profile()) throw std::invalid_argument("profile mismatch");
    const OrbitProfile& profile = dual_basis.profile;
    const int m = profile.orbit_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ScalarProduct sp = scalar_product(dual_basis.vectors[static_cast<std::size_t>(i)],
                                              matrix_row(B, j));
            if (i == j) {
                if (sp.exact != Poly::cyclic_modulus(profile.field(), profile.orbit_length(i)))
                    return false;
            } else if (!sp.exact.is_zero()) {
                return false;
            }
        }
    return true;
}

GrobnerBasis grobner_via_transpose(const MatrixFq& H, const OrbitProfile& profile, bool reduce) {
    if (H.cols() != static_cast<std::size_t>(profile.length()))
        throw std::invalid_argument("column count does not match profile");
    const Field& f = profile.field();
    const int m = profile.orbit_count();

    GrobnerBasis dual = [&] {
        if (H.rows() == 0) {
            // Zero dual: the relations alone form its reduced RPOT basis.
            std::vector<PolyVec> v;
            for (int i = 0; i < m; ++i) v.push_back(PolyVec::orbit_relation(profile, i));
            return GrobnerBasis{std::move(v), Ordering::RPOT, true, profile};
        }
        std::vector<PolyVec> rows;
        rows.reserve(H.rows());
        for (std::size_t r = 0; r < H.rows(); ++r) rows.push_back(PolyVec::from_coords(H.row(r), profile));
        return reduce_basis(buchberger(rows, profile, Ordering::RPOT));
    }();

    PolyMatrix A = relation_matrix(dual);

    std::vector<PolyVec> vectors;
    vectors.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        PolyVec g(profile);
        const int d = A.at(i, i).degree();
        for (int j = i; j < m; ++j) {
            const int lj = profile.orbit_length(j);
            if (i == j && d == profile.orbit_length(i)) {
                // fully redundant orbit: the reciprocal is the orbit modulus
                g.set_part(j, Poly::cyclic_modulus(f, lj));
                continue;
            }
            // t^{deg a_ii} a_ji(1/t) mod t^{l_j} - 1, with 1/t = t^{l_j - 1}
            const Poly& a = A.at(j, i);
            if (a.is_zero()) continue;
            std::vector<Fe> folded(static_cast<std::size_t>(lj), 0);
            for (int e = 0; e <= a.degree(); ++e) {
                Fe c = a.coeff(e);
                if (!c) continue;
                std::size_t k = static_cast<std::size_t>(((d - e) % lj + lj) % lj);
                folded[k] = folded[k] ? f.add(folded[k], c) : c;
            }
            g.set_part(j, Poly(f, std::move(folded)));
        }
        vectors.push_back(std::move(g));
    }
    GrobnerBasis basis{std::move(vectors), Ordering::POT, false, profile};
    return reduce ? reduce_basis(basis) : basis;
}

MatrixFq generator_matrix(const GrobnerBasis& basis) {
    if (basis.ordering != Ordering::POT || !basis.reduced)
        throw std::invalid_argument("generator matrix needs a reduced POT basis");
    const OrbitProfile& profile = basis.profile;
    const Field& f = profile.field();
    MatrixFq G(f, 0, static_cast<std::size_t>(profile.length()));
    for (int i = 0; i < profile.orbit_count(); ++i) {
        const int reps = profile.orbit_length(i) - basis.diagonal(i).degree();
        for (int j = 0; j < reps; ++j) {
            PolyVec row = basis.vectors[static_cast<std::size_t>(i)].scaled_cyclic(Poly::monomial(f, j));
            auto coords = row.to_coords();
            G.append_row(coords);
        }
    }
    return G;
}

}  // namespace gqc
