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

#ifndef GQC_TRANSPOSE_HPP
#define GQC_TRANSPOSE_HPP

#include "gqc/grobner.hpp"
#include "gqc/matrix.hpp"

namespace gqc {

/// Square matrix of polynomials attached to an orbit profile.
class PolyMatrix {
   public:
    PolyMatrix(const OrbitProfile& profile);

    const OrbitProfile& profile() const { return profile_; }
    int size() const { return profile_.orbit_count(); }
    const Poly& at(int r, int c) const { return e_[index(r, c)]; }
    void set(int r, int c, Poly p) { e_[index(r, c)] = std::move(p); }

    bool operator==(const PolyMatrix& rhs) const { return profile_ == rhs.profile_ && e_ == rhs.e_; }

   private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(c);
    }
    OrbitProfile profile_;
    std::vector<Poly> e_;
};

/**
 * The lower-triangular matrix A expressing each orbit relation in a
 * reduced RPOT dual basis: row i satisfies sum_j a_ij h_j = (t^{l_i}-1) e_i.
 * Every division in the recursion must be exact; a nonzero remainder means
 * the input is not a valid reduced RPOT basis and raises InternalError.
 */
PolyMatrix relation_matrix(const GrobnerBasis& dual_basis);

/**
 * Transpose of A under the circulant correspondence: entry (i, j) is the
 * reversal of a_ji taken with length l_j (the row index of A picks the
 * modulus).  Diagonal entries of degree l_j use the formal reciprocal.
 * Row i of the result is the vector b_i.
 */
PolyMatrix reversal_transpose(const PolyMatrix& A);

/// Row i of a PolyMatrix as a polynomial vector.
PolyVec matrix_row(const PolyMatrix& M, int i);

/**
 * Exact pairing between a dual basis and the rows of B: true iff
 * <h_i, b_i> = t^{l_i} - 1 and <h_i, b_j> = 0 for i != j, as exact
 * polynomial identities (no final cyclic reduction).
 */
bool pairing_check(const GrobnerBasis& dual_basis, const PolyMatrix& B);

/**
 * Gröbner basis from a parity-check matrix via the transpose route:
 * compute the reduced RPOT basis of the dual from the rows of H, build
 * the relation matrix A, and map it to a POT basis of the code by
 * g_ij = t^{deg a_ii} a_ji(1/t) reduced mod t^{l_j} - 1 (with the formal
 * reciprocal on fully redundant diagonals).
 */
GrobnerBasis grobner_via_transpose(const MatrixFq& H, const OrbitProfile& profile, bool reduce = true);

/// The k x n generator matrix whose rows are t^j g_i for
/// 0 <= j <= l_i - deg g_ii - 1, from a reduced POT basis.
MatrixFq generator_matrix(const GrobnerBasis& basis);

/// Raised when an internal exactness invariant fails (e.g. an inexact
/// division in the relation-matrix recursion, indicating corrupt input).
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gqc

#endif
