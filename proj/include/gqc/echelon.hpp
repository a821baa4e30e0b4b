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

#ifndef GQC_ECHELON_HPP
#define GQC_ECHELON_HPP

#include "gqc/grobner.hpp"
#include "gqc/matrix.hpp"

namespace gqc {

/// Column permutation, stored as the list of source columns: column i of
/// the permuted matrix is column source(i) of the original.
class Permutation {
   public:
    static Permutation identity(std::size_t n);
    explicit Permutation(std::vector<std::size_t> sources);

    std::size_t size() const { return sources_.size(); }
    std::size_t source(std::size_t i) const { return sources_[i]; }
    const std::vector<std::size_t>& sources() const { return sources_; }

    Permutation inverse() const;
    MatrixFq apply_to_columns(const MatrixFq& m) const;

    bool operator==(const Permutation&) const = default;

   private:
    std::vector<std::size_t> sources_;
};

struct StandardForm {
    MatrixFq right;   // the A of [I | A]
    Permutation tau;  // pivot columns first, non-pivots in stable order
};

/// Move the pivot columns of an echelon form to the front: tau(E) = [I | A].
StandardForm standard_form(const EchelonForm& echelon);

/// G = tau^{-1}([-A^T | I]), a generator matrix of the null space of the
/// matrix that produced A: G * H^T = 0.
MatrixFq dual_generator(const MatrixFq& A, const Permutation& tau, std::size_t n);

/**
 * Gröbner basis from a parity-check matrix via the echelon route:
 * row-reduce H, permute to standard form, read off the dual generator
 * matrix, then run Buchberger (POT) on its rows.  Pass reduce = false to
 * obtain the basis before inter-reduction.
 */
GrobnerBasis grobner_via_echelon(const MatrixFq& H, const OrbitProfile& profile, bool reduce = true);

}  // namespace gqc

#endif
