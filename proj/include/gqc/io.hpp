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

#ifndef GQC_IO_HPP
#define GQC_IO_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "gqc/grobner.hpp"
#include "gqc/matrix.hpp"

namespace gqc {

/// Malformed input file; `line` is 1-based, 0 when no line applies.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& message)
        : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + message : message),
          line(line_no) {}
    int line;
};

struct ParsedMatrix {
    MatrixFq matrix;
    OrbitProfile profile;
};

struct ParsedBasis {
    GrobnerBasis basis;
};

/*
 * Matrix file format ("gqc-matrix v1"):
 *
 *     gqc-matrix v1
 *     q: 2                    # or: q: 2^4 modulus: 1 1 0 0 1
 *     orbits: 6 6 3
 *     rows: 6
 *     row: 1 1 0 1 1 0 1 0 1 1 0 0 1 1 0
 *     ...
 *
 * Entries are integer-encoded field elements in [0, q); '#' starts a
 * comment.  Basis files ("gqc-basis v1") share the header, add
 * "ordering: POT|rPOT" and "reduced: true|false", and carry one line
 * "g i: [c0 c1 ...] ... [c0 ...]" per orbit, ascending coefficients,
 * with "[]" for the zero polynomial.
 */
ParsedMatrix parse_matrix(std::istream& in);
ParsedBasis parse_basis(std::istream& in);

void write_matrix(std::ostream& out, const MatrixFq& matrix, const OrbitProfile& profile);
void write_basis(std::ostream& out, const GrobnerBasis& basis);

std::string format_field(const Field& f);

}  // namespace gqc

#endif
