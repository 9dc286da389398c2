// Copyright 2026 The normtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "normtrace/gf.hpp"

namespace normtrace {

/// Dense row-major matrix of field elements. Entries are interpreted against
/// whichever Field the caller passes to the routines below.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<FieldElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const FieldElement> values);
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

struct RrefResult {
    Matrix reduced;          // zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are taken left to right, using the first
/// row at or below the current one with a nonzero entry in the column.
RrefResult rref(const Field& f, const Matrix& m);

std::size_t rank(const Field& f, const Matrix& m);

/// Basis (as rows) of {v : m * v^T = 0}.
Matrix kernel_basis(const Field& f, const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);

/// Multiplies column j of `a` by v[j].
Matrix scale_cols(const Field& f, const Matrix& a, std::span<const FieldElement> v);

bool row_space_equal(const Field& f, const Matrix& a, const Matrix& b);

/// Basis of rowspace(a) ∩ rowspace(b). Both must have the same column count.
Matrix row_space_intersection(const Field& f, const Matrix& a, const Matrix& b);

/// Throws std::invalid_argument when `m` is not square or singular.
Matrix inverse(const Field& f, const Matrix& m);

/// Row vector times matrix.
std::vector<FieldElement> vec_mat(const Field& f, std::span<const FieldElement> v, const Matrix& m);

std::size_t hamming_weight(std::span<const FieldElement> v);

}  // namespace normtrace
