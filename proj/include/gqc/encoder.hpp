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

#ifndef GQC_ENCODER_HPP
#define GQC_ENCODER_HPP

#include "gqc/grobner.hpp"
#include "gqc/matrix.hpp"

namespace gqc {

/**
 * Everything systematic encoding needs: a reduced POT basis, the code
 * dimension, and the information monomials in their canonical order
 * (orbit-major, exponent ascending).  Message symbol j is the coefficient
 * of information monomial j.
 */
class CodeSpec {
   public:
    /// Accepts a POT basis; an unreduced one is inter-reduced first.
    static CodeSpec from_basis(const GrobnerBasis& basis);

    const OrbitProfile& profile() const { return basis_.profile; }
    const GrobnerBasis& basis() const { return basis_; }
    int dimension() const { return k_; }
    const std::vector<Monomial>& information_monomials() const { return info_; }

   private:
    explicit CodeSpec(GrobnerBasis basis);

    GrobnerBasis basis_;
    int k_;
    std::vector<Monomial> info_;
};

/**
 * Systematic encoding: place the message symbols on the information
 * monomials, divide by the basis, and subtract the remainder.  The
 * codeword carries the message untouched at the information positions
 * and is annihilated by every parity check of the code.
 */
std::vector<Fe> encode(std::span<const Fe> message, const CodeSpec& spec);

/// True iff H c^T = 0.
bool verify_codeword(std::span<const Fe> codeword, const MatrixFq& H);

}  // namespace gqc

#endif
