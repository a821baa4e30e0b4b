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

#include "gqc/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gqc {

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    return Permutation(std::move(s));
}

Permutation::Permutation(std::vector<std::size_t> sources) : sources_(std::move(sources)) {
    std::vector<bool> seen(sources_.size(), false);
    for (std::size_t s : sources_) {
        if (s >= sources_.size() || seen[s]) throw std::invalid_argument("not a permutation");
        seen[s] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) inv[sources_[i]] = i;
    return Permutation(std::move(inv));
}

MatrixFq Permutation::apply_to_columns(const MatrixFq& m) const {
    if (m.cols() != sources_.size()) throw std::invalid_argument("permutation size mismatch");
    MatrixFq out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, sources_[c]);
    return out;
}

StandardForm standard_form(const EchelonForm& echelon) {
    const MatrixFq& E = echelon.matrix;
    const auto& pivots = echelon.pivots;
    if (pivots.size() != E.rows()) throw std::invalid_argument("echelon form has zero rows");

    std::vector<std::size_t> order(pivots.begin(), pivots.end());
    std::vector<bool> is_pivot(E.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < E.cols(); ++c)
        if (!is_pivot[c]) order.push_back(c);
    Permutation tau(std::move(order));

    MatrixFq A(E.field(), E.rows(), E.cols() - pivots.size());
    for (std::size_t r = 0; r < E.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) A.at(r, c) = E.at(r, tau.source(pivots.size() + c));
    return {std::move(A), std::move(tau)};
}

MatrixFq dual_generator(const MatrixFq& A, const Permutation& tau, std::size_t n) {
    const std::size_t r = A.rows();
    if (r + A.cols() != n || tau.size() != n) throw std::invalid_argument("dimension mismatch");
    const Field& f = A.field();
    const std::size_t k = n - r;

    // [-A^T | I] in the permuted coordinates, mapped back through tau^{-1}.
    MatrixFq permuted(f, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Fe a = A.at(j, i);
            if (a) permuted.at(i, j) = f.neg(a);
        }
        permuted.at(i, r + i) = 1;
    }
    return tau.inverse().apply_to_columns(permuted);
}

GrobnerBasis grobner_via_echelon(const MatrixFq& H, const OrbitProfile& profile, bool reduce) {
    if (H.cols() != static_cast<std::size_t>(profile.length()))
        throw std::invalid_argument("column count does not match profile");

    EchelonForm e = gauss_echelon(H);
    const std::size_t n = H.cols();
    const std::size_t r = e.pivots.size();

    if (r == n) {
        // Zero code: the module is generated by the orbit relations alone.
        std::vector<PolyVec> v;
        for (int i = 0; i < profile.orbit_count(); ++i) v.push_back(PolyVec::orbit_relation(profile, i));
        return {std::move(v), Ordering::POT, true, profile};
    }

    MatrixFq G(profile.field(), 0, n);
    if (r == 0) {
        G = MatrixFq::identity(profile.field(), n);
    } else {
        StandardForm sf = standard_form(e);
        G = dual_generator(sf.right, sf.tau, n);
    }

    std::vector<PolyVec> rows;
    rows.reserve(G.rows());
    for (std::size_t i = 0; i < G.rows(); ++i) rows.push_back(PolyVec::from_coords(G.row(i), profile));
    GrobnerBasis basis = buchberger(rows, profile, Ordering::POT);
    return reduce ? reduce_basis(basis) : basis;
}

}  // namespace gqc
