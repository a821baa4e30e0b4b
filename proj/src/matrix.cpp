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

#include "gqc/matrix.hpp"

#include <stdexcept>

namespace gqc {

MatrixFq MatrixFq::identity(const Field& f, std::size_t n) {
    MatrixFq m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixFq MatrixFq::from_rows(const Field& f, std::initializer_list<std::initializer_list<Fe>> rows) {
    std::vector<std::vector<Fe>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(f, v);
}

MatrixFq MatrixFq::from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
    MatrixFq m(f, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged row set");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] >= f.order()) throw std::invalid_argument("matrix entry out of field range");
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

void MatrixFq::append_row(std::span<const Fe> row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

MatrixFq MatrixFq::transposed() const {
    MatrixFq m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    MatrixFq out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            Fe a = at(r, k);
            if (!a) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                Fe b = rhs.at(k, c);
                if (!b) continue;
                out.at(r, c) = field_.add(out.at(r, c), field_.mul(a, b));
            }
        }
    return out;
}

bool MatrixFq::operator==(const MatrixFq& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

bool MatrixFq::is_zero() const {
    for (Fe x : e_)
        if (x) return false;
    return true;
}

EchelonForm gauss_echelon(const MatrixFq& m) {
    const Field& f = m.field();
    MatrixFq w = m;
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < w.cols() && next_row < w.rows(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < w.rows() && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows()) continue;
        if (pivot != next_row)
            for (std::size_t c = col; c < w.cols(); ++c) std::swap(w.at(pivot, c), w.at(next_row, c));
        Fe lead = w.at(next_row, col);
        if (lead != 1)
            for (std::size_t c = col; c < w.cols(); ++c)
                if (w.at(next_row, c)) w.at(next_row, c) = f.div(w.at(next_row, c), lead);
        for (std::size_t r = 0; r < w.rows(); ++r) {
            if (r == next_row) continue;
            Fe factor = w.at(r, col);
            if (!factor) continue;
            for (std::size_t c = col; c < w.cols(); ++c) {
                Fe src = w.at(next_row, c);
                if (!src) continue;
                w.at(r, c) = f.sub(w.at(r, c), f.mul(factor, src));
            }
        }
        pivots.push_back(col);
        ++next_row;
    }
    MatrixFq out(f, pivots.size(), w.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < w.cols(); ++c) out.at(r, c) = w.at(r, c);
    return {std::move(out), std::move(pivots)};
}

std::size_t rank_of(const MatrixFq& m) { return gauss_echelon(m).pivots.size(); }

}  // namespace gqc
