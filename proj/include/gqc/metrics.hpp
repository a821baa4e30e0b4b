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

#ifndef GQC_METRICS_HPP
#define GQC_METRICS_HPP

#include <cstdint>

#include "gqc/encoder.hpp"
#include "gqc/grobner.hpp"
#include "gqc/matrix.hpp"

namespace gqc {

/// Closed-form operation-count estimates for the two basis algorithms,
/// in single-field-operation units, rounded to the nearest integer.
struct ComplexityEstimate {
    int n = 0, k = 0, m = 0;
    std::uint64_t echelon = 0;    // (1/3)(n-k)^3 + k(n-k)^2 + n k^2
    std::uint64_t transpose = 0;  // n(n-k)^2 + m n k + m k (n-k)
};

ComplexityEstimate estimate_complexity(int n, int k, int m);

enum class BasisAlgorithm { Echelon, Transpose };

/// Run the chosen basis algorithm with operation counting enabled and
/// return the tally.
OpCounter measure_ops(const MatrixFq& H, const OrbitProfile& profile, BasisAlgorithm algorithm);

/**
 * Element-count bounds for the serial systematic encoder built from a
 * reduced POT basis.  adder_bound and memory_bound are the closed-form
 * chains m(n-k) and m(n-k)+k; the *_from_degrees values evaluate the
 * degree sums of the same chains on the actual basis and never exceed
 * them for adders.
 */
struct CircuitReport {
    std::uint64_t adder_bound = 0;
    std::uint64_t memory_bound = 0;
    std::int64_t adders_from_degrees = 0;
    std::int64_t memory_from_degrees = 0;
    bool fg_shape = false;          // unit diagonals on every orbit but the last
    std::vector<int> orbit_dims;    // k_i = l_i - deg g_ii
    std::vector<int> deltas;        // delta_i = max(k_1-2, ..., k_{i-1}-2, k_i-1)
};

CircuitReport circuit_bounds(const GrobnerBasis& basis);

/**
 * Behavioral cycle simulation of the serial-in serial-out encoder for
 * bases with unit diagonals outside the last orbit: the message streams
 * through tap accumulators for the last-column entries and a division
 * register bank of size deg g_mm, whose final state is the parity block.
 * Output is identical to encode().
 */
std::vector<Fe> simulate_serial_encoder(const CodeSpec& spec, std::span<const Fe> message);

}  // namespace gqc

#endif
