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

#include "normtrace/ffla.hpp"

#include <algorithm>
#include <stdexcept>

namespace normtrace {

namespace {

// row[dst] -= factor * row[src], starting at column `from`
void axpy_row(const Field& f, Matrix& m, std::size_t dst, std::size_t src, FieldElement factor, std::size_t from) {
    if (factor.is_zero())
        return;
    auto d = m.row(dst);
    auto s = m.row(src);
    const FieldElement nf = f.neg(factor);
    for (std::size_t j = from; j < m.cols(); ++j)
        if (!s[j].is_zero())
            d[j] = f.add(d[j], f.mul(nf, s[j]));
}

void require_same_cols(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("column count mismatch");
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = FieldElement{1};
    return m;
}

void Matrix::append_row(std::span<const FieldElement> values) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = values.size();
    if (values.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

RrefResult rref(const Field& f, const Matrix& m) {
    Matrix a = m;
    RrefResult out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero())
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != row)
            std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(row).begin());
        const FieldElement s = f.inv(a(row, col));
        for (auto& e : a.row(row))
            e = f.mul(e, s);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != row)
                axpy_row(f, a, i, row, a(i, col), col);
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    Matrix reduced(0, a.cols());
    for (std::size_t i = 0; i < row; ++i)
        reduced.append_row(a.row(i));
    out.reduced = std::move(reduced);
    return out;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank; }

Matrix kernel_basis(const Field& f, const Matrix& m) {
    const RrefResult r = rref(f, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivot_cols)
        is_pivot[c] = true;

    Matrix basis(0, n);
    std::vector<FieldElement> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::fill(v.begin(), v.end(), FieldElement{});
        v[free] = f.one();
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = f.neg(r.reduced(i, free));
        basis.append_row(v);
    }
    return basis;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("shape mismatch in mat_mul");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

Matrix scale_cols(const Field& f, const Matrix& a, std::span<const FieldElement> v) {
    if (v.size() != a.cols())
        throw std::invalid_argument("scaling vector length mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = f.mul(a(i, j), v[j]);
    return out;
}

bool row_space_equal(const Field& f, const Matrix& a, const Matrix& b) {
    require_same_cols(a, b);
    return rref(f, a).reduced == rref(f, b).reduced;
}

Matrix row_space_intersection(const Field& f, const Matrix& a, const Matrix& b) {
    require_same_cols(a, b);
    const Matrix ra = rref(f, a).reduced;
    const Matrix rb = rref(f, b).reduced;
    if (ra.empty() || rb.empty())
        return Matrix(0, a.cols());
    // x*A = y*B  <=>  [x | -y] lies in the left kernel of [A ; B]
    Matrix stacked(0, a.cols());
    for (std::size_t i = 0; i < ra.rows(); ++i)
        stacked.append_row(ra.row(i));
    for (std::size_t i = 0; i < rb.rows(); ++i)
        stacked.append_row(rb.row(i));
    const Matrix left = kernel_basis(f, transpose(stacked));

    Matrix out(0, a.cols());
    for (std::size_t k = 0; k < left.rows(); ++k) {
        auto coeffs = left.row(k).subspan(0, ra.rows());
        out.append_row(vec_mat(f, coeffs, ra));
    }
    return rref(f, out).reduced;
}

Matrix inverse(const Field& f, const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    const RrefResult r = rref(f, aug);
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1)
        throw std::invalid_argument("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r.reduced(i, n + j);
    return inv;
}

std::vector<FieldElement> vec_mat(const Field& f, std::span<const FieldElement> v, const Matrix& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("shape mismatch in vec_mat");
    std::vector<FieldElement> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero())
            continue;
        auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = f.add(out[j], f.mul(v[i], row[j]));
    }
    return out;
}

std::size_t hamming_weight(std::span<const FieldElement> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElement e) { return !e.is_zero(); }));
}

}  // namespace normtrace
