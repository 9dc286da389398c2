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

#include <doctest.h>

#include <random>

#include "normtrace/ffla.hpp"

using namespace normtrace;

namespace {

Matrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = FieldElement{static_cast<std::uint32_t>(rng() % f.order())};
    return m;
}

}  // namespace

TEST_CASE("rref of a small matrix over F_3") {
    const Field f({3, 1, 2});
    Matrix m(3, 3);
    // rows (1 2 0), (2 1 0), (0 0 1): the first two are dependent
    m(0, 0) = FieldElement{1}; m(0, 1) = FieldElement{2};
    m(1, 0) = FieldElement{2}; m(1, 1) = FieldElement{1};
    m(2, 2) = FieldElement{1};
    const auto r = rref(f, m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 2});
    CHECK(r.reduced.rows() == 2);
    CHECK(r.reduced(0, 1) == FieldElement{2});
    const Matrix k = kernel_basis(f, m);
    REQUIRE(k.rows() == 1);
    CHECK(k(0, 0) == FieldElement{1});
    CHECK(k(0, 1) == FieldElement{1});
    CHECK(k(0, 2) == FieldElement{0});
}

TEST_CASE("rank-nullity and kernel orthogonality on random matrices") {
    std::mt19937_64 rng(7);
    for (const FieldParams params : {FieldParams{2, 1, 2}, FieldParams{3, 1, 2}, FieldParams{2, 1, 4}}) {
        const Field f(params);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
            const Matrix m = random_matrix(f, rng, rows, cols);
            const Matrix k = kernel_basis(f, m);
            CHECK(rank(f, m) + k.rows() == cols);
            if (!k.empty())
                CHECK(mat_mul(f, m, transpose(k)).is_zero());
            CHECK(rank(f, k) == k.rows());
        }
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(3);
    const Field f({2, 1, 4});
    int inverted = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = random_matrix(f, rng, 4, 4);
        if (rank(f, m) < 4) {
            CHECK_THROWS_AS(inverse(f, m), std::invalid_argument);
            continue;
        }
        ++inverted;
        CHECK(mat_mul(f, m, inverse(f, m)) == Matrix::identity(4));
    }
    CHECK(inverted > 0);
    CHECK_THROWS_AS(inverse(f, Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("row spaces") {
    std::mt19937_64 rng(5);
    const Field f({3, 1, 2});
    const Matrix a = random_matrix(f, rng, 3, 6);
    // left-multiplying by an invertible matrix keeps the row space
    Matrix t = random_matrix(f, rng, 3, 3);
    while (rank(f, t) < 3)
        t = random_matrix(f, rng, 3, 3);
    CHECK(row_space_equal(f, a, mat_mul(f, t, a)));
    const Matrix b = random_matrix(f, rng, 3, 6);
    const Matrix both = row_space_intersection(f, a, b);
    Matrix stacked = a;
    for (std::size_t i = 0; i < b.rows(); ++i)
        stacked.append_row(b.row(i));
    CHECK(rank(f, a) + rank(f, b) == rank(f, stacked) + rank(f, both));
    for (std::size_t i = 0; i < both.rows(); ++i) {
        Matrix ea = a, eb = b;
        ea.append_row(both.row(i));
        eb.append_row(both.row(i));
        CHECK(rank(f, ea) == rank(f, a));
        CHECK(rank(f, eb) == rank(f, b));
    }
    CHECK(row_space_intersection(f, a, a).rows() == rank(f, a));
}

TEST_CASE("scaling, products and weights") {
    const Field f({2, 1, 2});
    Matrix m(1, 3);
    m(0, 0) = FieldElement{1}; m(0, 1) = FieldElement{2}; m(0, 2) = FieldElement{3};
    const std::vector<FieldElement> v = {FieldElement{2}, FieldElement{2}, FieldElement{0}};
    const Matrix s = scale_cols(f, m, v);
    CHECK(s(0, 0) == FieldElement{2});
    CHECK(s(0, 1) == FieldElement{3});
    CHECK(s(0, 2) == FieldElement{0});
    CHECK(hamming_weight(s.row(0)) == 2);
    CHECK(vec_mat(f, std::vector<FieldElement>{FieldElement{3}}, m) == std::vector<FieldElement>{FieldElement{3}, FieldElement{1}, FieldElement{2}});
    CHECK_THROWS_AS(scale_cols(f, m, std::vector<FieldElement>{f.one()}), std::invalid_argument);
    CHECK_THROWS_AS(mat_mul(f, m, m), std::invalid_argument);
}
