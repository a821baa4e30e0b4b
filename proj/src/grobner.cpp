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

#include "gqc/grobner.hpp"

#include <stdexcept>

namespace gqc {

namespace {

// Scale a whole row so that its column-j entry becomes monic.
void make_row_monic(PolyVec& row, int j) {
    Fe lead = row.part(j).lead();
    if (lead == 1) return;
    const Field& f = row.profile().field();
    for (int c = 0; c < row.orbit_count(); ++c) {
        if (row.part(c).is_zero()) continue;
        std::vector<Fe> coeffs = row.part(c).coeffs();
        for (Fe& x : coeffs)
            if (x) x = f.div(x, lead);
        row.set_part(c, Poly(f, std::move(coeffs)));
    }
}

// row -= q * other on components j .. m-1, folding everything after
// column j into M.  Column j itself is set to the exact remainder.
void eliminate_column(PolyVec& row, const PolyVec& other, int j, const Poly& quotient,
                      const Poly& remainder) {
    row.set_part(j, remainder);
    if (quotient.is_zero()) return;
    const OrbitProfile& profile = row.profile();
    for (int c = j + 1; c < row.orbit_count(); ++c) {
        if (other.part(c).is_zero()) continue;
        row.set_part(c, row.part(c) - mul_cyclic(quotient, other.part(c), profile.orbit_length(c)));
    }
}

// Core of Buchberger's algorithm in the POT ordering: process columns left
// to right, computing each column gcd by whole-row Euclidean reduction.
std::vector<PolyVec> buchberger_pot(std::vector<PolyVec> work, const OrbitProfile& profile) {
    const int m = profile.orbit_count();
    std::vector<PolyVec> basis;
    basis.reserve(static_cast<std::size_t>(m));

    for (auto& row : work) row = row.reduced();

    for (int j = 0; j < m; ++j) {
        work.push_back(PolyVec::orbit_relation(profile, j));
        while (true) {
            int lo = -1;
            int active = 0;
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (work[i].part(j).is_zero()) continue;
                ++active;
                if (lo < 0 || work[i].part(j).degree() < work[static_cast<std::size_t>(lo)].part(j).degree())
                    lo = static_cast<int>(i);
            }
            if (active <= 1) break;
            const PolyVec pivot = work[static_cast<std::size_t>(lo)];
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (static_cast<int>(i) == lo || work[i].part(j).is_zero()) continue;
                auto qr = work[i].part(j).divmod(pivot.part(j));
                eliminate_column(work[i], pivot, j, qr.quotient, qr.remainder);
            }
        }
        std::size_t found = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (!work[i].part(j).is_zero()) {
                found = i;
                break;
            }
        // The orbit relation keeps every column populated.
        PolyVec g = work[found];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(found));
        make_row_monic(g, j);
        basis.push_back(std::move(g));
        std::erase_if(work, [](const PolyVec& r) { return r.is_zero(); });
    }
    return basis;
}

GrobnerBasis reverse_of(const GrobnerBasis& b, bool reduced_flag) {
    const int m = b.profile.orbit_count();
    std::vector<PolyVec> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) out.push_back(b.vectors[static_cast<std::size_t>(i)].reversed());
    Ordering ord = b.ordering == Ordering::POT ? Ordering::RPOT : Ordering::POT;
    return {std::move(out), ord, reduced_flag, b.profile.reversed()};
}

void require_triangular(const GrobnerBasis& b) {
    const int m = b.profile.orbit_count();
    if (static_cast<int>(b.vectors.size()) != m) throw std::invalid_argument("basis size does not match profile");
    for (int i = 0; i < m; ++i) {
        if (b.diagonal(i).is_zero()) throw std::invalid_argument("zero diagonal in basis");
        for (int jj = 0; jj < m; ++jj) {
            bool must_vanish = b.ordering == Ordering::POT ? jj < i : jj > i;
            if (must_vanish && !b.entry(i, jj).is_zero())
                throw std::invalid_argument("basis is not triangular for its ordering");
        }
    }
}

}  // namespace

GrobnerBasis buchberger(std::span<const PolyVec> rows, const OrbitProfile& profile, Ordering ordering) {
    if (rows.empty()) throw std::invalid_argument("empty generating set");
    for (const PolyVec& r : rows)
        if (r.profile() != profile) throw std::invalid_argument("row profile mismatch");

    if (ordering == Ordering::RPOT) {
        std::vector<PolyVec> rev;
        rev.reserve(rows.size());
        for (const PolyVec& r : rows) rev.push_back(r.reversed());
        GrobnerBasis mirrored{buchberger_pot(std::move(rev), profile.reversed()), Ordering::POT, false,
                              profile.reversed()};
        return reverse_of(mirrored, false);
    }
    std::vector<PolyVec> work(rows.begin(), rows.end());
    return {buchberger_pot(std::move(work), profile), Ordering::POT, false, profile};
}

GrobnerBasis reduce_basis(const GrobnerBasis& basis) {
    require_triangular(basis);
    if (basis.ordering == Ordering::RPOT) return reverse_of(reduce_basis(reverse_of(basis, false)), true);

    const OrbitProfile& profile = basis.profile;
    const int m = profile.orbit_count();
    std::vector<PolyVec> v = basis.vectors;
    for (int j = 0; j < m; ++j) make_row_monic(v[static_cast<std::size_t>(j)], j);
    for (int j = 1; j < m; ++j) {
        const PolyVec pivot = v[static_cast<std::size_t>(j)];
        for (int i = 0; i < j; ++i) {
            auto qr = v[static_cast<std::size_t>(i)].part(j).divmod(pivot.part(j));
            eliminate_column(v[static_cast<std::size_t>(i)], pivot, j, qr.quotient, qr.remainder);
        }
    }
    return {std::move(v), Ordering::POT, true, profile};
}

DivisionResult divide(const PolyVec& u, const GrobnerBasis& basis) {
    if (basis.ordering != Ordering::POT) throw std::invalid_argument("division requires a POT basis");
    require_triangular(basis);
    if (u.profile() != basis.profile) throw std::invalid_argument("profile mismatch");

    const int m = basis.profile.orbit_count();
    PolyVec cur = u.reduced();
    std::vector<Poly> quotients;
    quotients.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto qr = cur.part(i).divmod(basis.diagonal(i));
        eliminate_column(cur, basis.vectors[static_cast<std::size_t>(i)], i, qr.quotient, qr.remainder);
        quotients.push_back(std::move(qr.quotient));
    }
    return {std::move(quotients), std::move(cur)};
}

MonomialSplit classify_monomials(const GrobnerBasis& basis) {
    if (basis.ordering != Ordering::POT) throw std::invalid_argument("classification requires a POT basis");
    require_triangular(basis);
    MonomialSplit out;
    for (int i = 0; i < basis.profile.orbit_count(); ++i) {
        const int d = basis.diagonal(i).degree();
        const int l = basis.profile.orbit_length(i);
        for (int j = 0; j < l; ++j)
            (j < d ? out.redundant : out.information).push_back(Monomial{i, j});
    }
    return out;
}

int basis_dimension(const GrobnerBasis& basis) {
    require_triangular(basis);
    int k = 0;
    for (int i = 0; i < basis.profile.orbit_count(); ++i)
        k += basis.profile.orbit_length(i) - basis.diagonal(i).degree();
    return k;
}

}  // namespace gqc
