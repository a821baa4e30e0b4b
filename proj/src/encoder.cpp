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

#include "gqc/encoder.hpp"

#include <stdexcept>

namespace gqc {

CodeSpec::CodeSpec(GrobnerBasis basis) : basis_(std::move(basis)), k_(0) {
    MonomialSplit split = classify_monomials(basis_);
    info_ = std::move(split.information);
    k_ = static_cast<int>(info_.size());
}

CodeSpec CodeSpec::from_basis(const GrobnerBasis& basis) {
    if (basis.ordering != Ordering::POT) throw std::invalid_argument("encoding requires a POT basis");
    return CodeSpec(basis.reduced ? basis : reduce_basis(basis));
}

std::vector<Fe> encode(std::span<const Fe> message, const CodeSpec& spec) {
    if (message.size() != static_cast<std::size_t>(spec.dimension()))
        throw std::invalid_argument("message length does not match code dimension");
    const OrbitProfile& profile = spec.profile();
    const Field& f = profile.field();

    PolyVec u(profile);
    for (std::size_t j = 0; j < message.size(); ++j) {
        if (message[j] >= f.order()) throw std::invalid_argument("message symbol out of field range");
        if (!message[j]) continue;
        const Monomial& mono = spec.information_monomials()[j];
        u.set_part(mono.orbit,
                   u.part(mono.orbit) + Poly::monomial(f, mono.exponent, message[j]));
    }
    DivisionResult div = divide(u, spec.basis());
    return (u - div.remainder).to_coords();
}

bool verify_codeword(std::span<const Fe> codeword, const MatrixFq& H) {
    if (codeword.size() != H.cols()) throw std::invalid_argument("codeword length does not match H");
    const Field& f = H.field();
    for (std::size_t r = 0; r < H.rows(); ++r) {
        Fe acc = 0;
        for (std::size_t c = 0; c < H.cols(); ++c) {
            Fe h = H.at(r, c);
            if (h && codeword[c]) acc = f.add(acc, f.mul(h, codeword[c]));
        }
        if (acc) return false;
    }
    return true;
}

}  // namespace gqc
