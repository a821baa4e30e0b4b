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

#ifndef GQC_MATRIX_HPP
#define GQC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gqc/field.hpp"

namespace gqc {

/// Dense matrix over GF(q).  A 0 x n matrix is allowed (empty row set).
class MatrixFq {
   public:
    MatrixFq(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static MatrixFq identity(const Field& f, std::size_t n);
    static MatrixFq from_rows(const Field& f, std::initializer_list<std::initializer_list<Fe>> rows);
    static MatrixFq from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fe at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Fe& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    std::span<const Fe> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Fe> row);

    MatrixFq transposed() const;
    MatrixFq operator*(const MatrixFq& rhs) const;
    bool operator==(const MatrixFq& rhs) const;
    bool operator!=(const MatrixFq& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

   private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Fe> e_;
};

struct EchelonForm {
    MatrixFq matrix;             // zero rows removed
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/**
 * Row-reduced echelon form: unit pivots, cleared pivot columns, each pivot
 * strictly right of the one above.  Pivot choice is leftmost column,
 * topmost row, so the result is canonical.
 */
EchelonForm gauss_echelon(const MatrixFq& m);

std::size_t rank_of(const MatrixFq& m);

}  // namespace gqc

#endif
