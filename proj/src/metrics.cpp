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

#include "gqc/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "gqc/echelon.hpp"
#include "gqc/transpose.hpp"

namespace gqc {

ComplexityEstimate estimate_complexity(int n, int k, int m) {
    if (k < 0 || k > n || m < 1 || m > n) throw std::invalid_argument("invalid code parameters");
    const double nn = n, kk = k, mm = m, r = n - k;
    ComplexityEstimate e;
    e.n = n;
    e.k = k;
    e.m = m;
    e.echelon = static_cast<std::uint64_t>(std::llround(r * r * r / 3.0 + kk * r * r + nn * kk * kk));
    e.transpose = static_cast<std::uint64_t>(std::llround(nn * r * r + mm * nn * kk + mm * kk * r));
    return e;
}

OpCounter measure_ops(const MatrixFq& H, const OrbitProfile& profile, BasisAlgorithm algorithm) {
    OpCounter counter;
    CountingScope scope(counter);
    if (algorithm == BasisAlgorithm::Echelon)
        grobner_via_echelon(H, profile);
    else
        grobner_via_transpose(H, profile);
    return counter;
}

CircuitReport circuit_bounds(const GrobnerBasis& basis) {
    if (basis.ordering != Ordering::POT) throw std::invalid_argument("circuit bounds need a POT basis");
    const OrbitProfile& profile = basis.profile;
    const int m = profile.orbit_count();
    for (int i = 0; i < m; ++i)
        if (basis.diagonal(i).is_zero()) throw std::invalid_argument("zero diagonal in basis");

    CircuitReport rep;
    const int n = profile.length();
    const int k = basis_dimension(basis);
    rep.adder_bound = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n - k);
    rep.memory_bound = rep.adder_bound + static_cast<std::uint64_t>(k);

    std::int64_t diag_degrees = 0;
    std::int64_t off_adders = 0;
    std::int64_t off_memory = 0;
    for (int i = 0; i < m; ++i) {
        diag_degrees += basis.diagonal(i).degree();
        for (int j = i + 1; j < m; ++j) {
            const Poly& g = basis.entry(i, j);
            if (g.is_zero()) continue;
            off_adders += g.degree() + 1;
            off_memory += g.degree();
        }
    }
    rep.orbit_dims.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        rep.orbit_dims[static_cast<std::size_t>(i)] = profile.orbit_length(i) - basis.diagonal(i).degree();
    rep.deltas.resize(static_cast<std::size_t>(m > 1 ? m - 1 : 0));
    std::int64_t delta_sum = 0;
    for (int i = 0; i + 1 < m; ++i) {
        int d = rep.orbit_dims[static_cast<std::size_t>(i)] - 1;
        for (int j = 0; j < i; ++j) d = std::max(d, rep.orbit_dims[static_cast<std::size_t>(j)] - 2);
        rep.deltas[static_cast<std::size_t>(i)] = d;
        delta_sum += d + 1;
    }
    rep.adders_from_degrees = diag_degrees + off_adders;
    rep.memory_from_degrees = diag_degrees + off_memory + delta_sum;

    rep.fg_shape = true;
    for (int i = 0; i + 1 < m; ++i)
        if (basis.diagonal(i).degree() != 0) rep.fg_shape = false;
    return rep;
}

std::vector<Fe> simulate_serial_encoder(const CodeSpec& spec, std::span<const Fe> message) {
    const GrobnerBasis& basis = spec.basis();
    const OrbitProfile& profile = spec.profile();
    const Field& f = profile.field();
    const int m = profile.orbit_count();
    for (int i = 0; i + 1 < m; ++i)
        if (basis.diagonal(i).degree() != 0)
            throw std::invalid_argument("serial encoder needs unit diagonals outside the last orbit");
    if (message.size() != static_cast<std::size_t>(spec.dimension()))
        throw std::invalid_argument("message length does not match code dimension");

    const int lm = profile.orbit_length(m - 1);
    const Poly& gm = basis.diagonal(m - 1);
    const int d = gm.degree();

    // Split the message along the canonical monomial order: full blocks for
    // orbits 1 .. m-1, then the top l_m - d coefficients of the last orbit.
    std::vector<std::vector<Fe>> u(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        u[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(profile.orbit_length(i)), 0);
    {
        std::size_t pos = 0;
        for (const Monomial& mono : spec.information_monomials())
            u[static_cast<std::size_t>(mono.orbit)][static_cast<std::size_t>(mono.exponent)] = message[pos++];
    }

    // Tap accumulators: each symbol of orbit i < m feeds c * t^j * g_im into
    // a cyclic register bank of length l_m.
    std::vector<Fe> acc(static_cast<std::size_t>(lm), 0);
    for (int i = 0; i + 1 < m; ++i) {
        const Poly& gim = basis.entry(i, m - 1);
        if (gim.is_zero()) continue;
        const int li = profile.orbit_length(i);
        for (int j = li - 1; j >= 0; --j) {  // one cycle per symbol
            Fe c = u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!c) continue;
            for (int e = 0; e <= gim.degree(); ++e) {
                Fe ge = gim.coeff(e);
                if (!ge) continue;
                std::size_t slot = static_cast<std::size_t>((j + e) % lm);
                acc[slot] = f.add(acc[slot], f.mul(c, ge));
            }
        }
    }

    // Division register bank: the last-orbit stream (message symbols minus
    // tap contributions, high exponent first) divides serially by g_mm.
    // The feedback path stays active after the last information symbol.
    std::vector<Fe> reg(static_cast<std::size_t>(d), 0);
    const auto& last = u[static_cast<std::size_t>(m - 1)];
    for (int j = lm - 1; j >= 0; --j) {
        Fe in = f.sub(last[static_cast<std::size_t>(j)], acc[static_cast<std::size_t>(j)]);
        if (d == 0) continue;  // no parity positions at all
        Fe feedback = reg[static_cast<std::size_t>(d - 1)];
        for (int e = d - 1; e > 0; --e) reg[static_cast<std::size_t>(e)] = reg[static_cast<std::size_t>(e - 1)];
        reg[0] = in;
        if (feedback)
            for (int e = 0; e < d; ++e) {
                Fe ge = gm.coeff(e);
                if (ge) reg[static_cast<std::size_t>(e)] = f.sub(reg[static_cast<std::size_t>(e)], f.mul(feedback, ge));
            }
    }

    // Assemble the codeword: systematic symbols as entered, parity block
    // emitted from the register bank (negated, since c = u - remainder).
    std::vector<Fe> out(static_cast<std::size_t>(profile.length()), 0);
    for (int i = 0; i < m; ++i) {
        int off = profile.orbit_offset(i);
        for (int j = 0; j < profile.orbit_length(i); ++j)
            out[static_cast<std::size_t>(off + j)] = u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const int off_m = profile.orbit_offset(m - 1);
    for (int e = 0; e < d; ++e) {
        Fe r = reg[static_cast<std::size_t>(e)];
        out[static_cast<std::size_t>(off_m + e)] = r ? f.neg(r) : 0;
    }
    return out;
}

}  // namespace gqc
