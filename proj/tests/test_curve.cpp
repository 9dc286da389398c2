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

#include "normtrace/curve.hpp"

using namespace normtrace;

namespace {

CurvePtr curve(std::uint32_t p, std::uint32_t s, std::uint32_t r, std::uint64_t u) {
    return make_curve(make_field(FieldParams{p, s, r}), u);
}

}  // namespace

TEST_CASE("shape arithmetic") {
    const CurveShape s(3, 2, 4);
    CHECK(s.q_pow_r() == 9);
    CHECK(s.q_pow_r1() == 3);
    CHECK(s.norm_exponent() == 4);
    CHECK(s.max_a() == 8);
    CHECK(s.max_b() == 2);
    CHECK(s.length() == 27);
    CHECK_THROWS_AS(CurveShape(3, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(CurveShape(3, 2, 0), std::invalid_argument);
}

TEST_CASE("Hermitian curve over F_4") {
    const auto c = curve(2, 1, 2, 3);
    REQUIRE(c->n() == 8);
    const Field& f = c->field();
    for (const auto& p : c->points())
        CHECK(f.pow(p.x, 3) == f.add(p.y, f.pow(p.y, 2)));
    // canonical order: ascending x, then y
    for (std::size_t i = 1; i < c->n(); ++i) {
        const auto& a = c->point(i - 1);
        const auto& b = c->point(i);
        CHECK(std::pair{a.x, a.y} < std::pair{b.x, b.y});
        CHECK(b.index == i);
    }
    CHECK(c->index_of(c->point(5).x, c->point(5).y) == 5);
    CHECK_THROWS_AS(c->index_of(FieldElement{1}, FieldElement{1}), std::invalid_argument);
}

TEST_CASE("partitions by γ in F_q") {
    const auto c = curve(3, 1, 2, 4);
    const Field& f = c->field();
    std::size_t total = 0;
    for (auto g : f.subfield()) {
        const auto part = c->partition_A(g);
        total += part.size();
        CHECK(c->trace_fibre(g).size() == 3);
        CHECK(c->x_coords_with(g).size() == (g.is_zero() ? 1u : 4u));
        CHECK(part.size() == c->x_coords_with(g).size() * c->trace_fibre(g).size());
    }
    CHECK(total == c->n());
    CHECK_THROWS_AS(c->partition_A(f.generator()), std::invalid_argument);
}

TEST_CASE("normal form") {
    for (const auto& c : {curve(2, 1, 2, 3), curve(3, 1, 2, 2), curve(2, 1, 4, 3)}) {
        const Field& f = c->field();
        CHECK(c->normal_form(trace_relation(f, c->shape())).is_zero());
        // footprint monomials are already reduced
        for (auto m : c->footprint()) {
            const auto mono = BivariatePoly::monomial(m);
            CHECK(c->normal_form(mono) == mono);
        }
        CHECK(c->footprint().size() == c->n());
    }
    // x^{(q-1)u + 1} -> x on q=3 r=2 u=2
    const auto c = curve(3, 1, 2, 2);
    CHECK(c->normal_form(BivariatePoly::monomial(Monomial{5, 0})) == BivariatePoly::monomial(Monomial{1, 0}));
    CHECK(c->normal_form(BivariatePoly::monomial(Monomial{9, 0})) == BivariatePoly::monomial(Monomial{1, 0}));
    CHECK(c->normal_form(BivariatePoly::monomial(Monomial{8, 0})) == BivariatePoly::monomial(Monomial{4, 0}));
}

TEST_CASE("normal form preserves values on random inputs") {
    std::mt19937_64 rng(42);
    const auto c = curve(2, 1, 3, 7);
    const Field& f = c->field();
    for (int i = 0; i < 50; ++i) {
        BivariatePoly g;
        for (int t = 0; t < 6; ++t)
            g.add_term(f, Monomial{static_cast<std::uint32_t>(rng() % 30), static_cast<std::uint32_t>(rng() % 30)},
                       FieldElement{static_cast<std::uint32_t>(1 + rng() % 7)});
        const auto nf = c->normal_form(g);
        CHECK(c->eval_vector(nf) == c->eval_vector(g));
        for (const auto& [m, coef] : nf.terms()) {
            CHECK(m.a <= c->shape().max_a());
            CHECK(m.b <= c->shape().max_b());
        }
    }
}

TEST_CASE("indicators") {
    const auto c = curve(3, 1, 2, 2);
    for (const auto& p : c->points()) {
        const auto fp = c->indicator(p);
        CHECK(fp.leading() == Monomial{4, 2});
        const auto v = c->eval_vector(fp);
        for (std::size_t j = 0; j < v.size(); ++j)
            CHECK(v[j] == (j == p.index ? FieldElement{1} : FieldElement{0}));
    }
    CHECK_THROWS_AS(c->indicator(CurvePoint{FieldElement{1}, FieldElement{0}, 0}), std::invalid_argument);
}

TEST_CASE("eval_monomial matches polynomial evaluation") {
    const auto c = curve(2, 1, 4, 3);
    for (auto m : c->footprint())
        CHECK(c->eval_monomial(m) == c->eval_vector(BivariatePoly::monomial(m)));
}

TEST_CASE("univariate helpers") {
    const Field f({3, 1, 2});
    const std::vector<FieldElement> roots = {FieldElement{1}, FieldElement{4}, FieldElement{7}};
    const auto g = univariate::from_roots(f, roots);
    CHECK(g.size() == 4);
    const auto h = univariate::divide_linear(f, g, FieldElement{4});
    CHECK(univariate::mul(f, h, univariate::Poly{f.neg(FieldElement{4}), f.one()}) == g);
    CHECK_THROWS_AS(univariate::divide_linear(f, g, FieldElement{2}), std::logic_error);
}
