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

#include "normtrace/code.hpp"
#include "normtrace/verify.hpp"

using namespace normtrace;

namespace {

CurvePtr curve(std::uint32_t p, std::uint32_t s, std::uint32_t r, std::uint64_t u) {
    return make_curve(make_field(FieldParams{p, s, r}), u);
}

// Plain enumeration of every message, no projective shortcut.
std::uint64_t naive_distance(const EvaluationCode& code) {
    const Field& f = code.field();
    std::vector<FieldElement> msg(code.k());
    std::uint64_t best = code.n();
    while (true) {
        std::size_t i = 0;
        while (i < msg.size() && msg[i].value + 1 == f.order())
            msg[i++] = FieldElement{0};
        if (i == msg.size())
            break;
        msg[i] = FieldElement{msg[i].value + 1};
        best = std::min<std::uint64_t>(best, hamming_weight(code.encode(msg)));
    }
    return best;
}

}  // namespace

TEST_CASE("zero bound examples") {
    const CurveShape s(3, 2, 4);
    CHECK(zero_bound(s, Monomial{0, 0}) == 0);
    CHECK(zero_bound(s, Monomial{4, 0}) == 12);
    CHECK(zero_bound(s, Monomial{2, 1}) == 10);
    CHECK(zero_bound(s, Monomial{1, 2}) == 11);
    CHECK(distance_formula(s, catalog::f9_staircase10()) == 15);
    CHECK(singleton_gap(s, catalog::f9_staircase10()) == 3);
    CHECK_THROWS_AS(distance_formula(s, MonomialSet(s)), std::invalid_argument);
}

TEST_CASE("projective brute force agrees with plain enumeration") {
    const auto c = curve(2, 1, 2, 3);
    for_each_lower_set(3, 1, [&](const MonomialSet& m) {
        if (m.empty() || m.size() > 5)
            return;
        const EvaluationCode code(c, m);
        REQUIRE(distance_bruteforce(code) == naive_distance(code));
    });
}

TEST_CASE("brute force respects the budget") {
    const EvaluationCode code(curve(3, 1, 2, 4), catalog::f9_staircase10());
    CHECK_FALSE(distance_bruteforce(code, 1000).has_value());
    CHECK_THROWS_AS(distance_bruteforce(EvaluationCode(curve(3, 1, 2, 4), MonomialSet(CurveShape(3, 2, 4)))),
                    std::invalid_argument);
}

TEST_CASE("code construction") {
    const auto c = curve(3, 1, 2, 4);
    const EvaluationCode zero(c, MonomialSet(c->shape()));
    CHECK(zero.k() == 0);
    CHECK(zero.generator().rows() == 0);
    CHECK(zero.generator().cols() == 27);
    CHECK_THROWS_AS(EvaluationCode(c, MonomialSet(c->shape(), {{1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(EvaluationCode(c, MonomialSet(3, 2, {{0, 0}})), std::invalid_argument);
    const EvaluationCode full = build_code(c, footprint_set(c->shape()));
    CHECK(rank(c->field(), full.generator()) == 27);
    CHECK(distance_formula(c->shape(), full.monomials()) == 1);
}

TEST_CASE("witnesses reach the formula distance on every lower set of small curves") {
    for (const auto& c : {curve(2, 1, 2, 3), curve(3, 1, 2, 2), curve(2, 1, 2, 1)}) {
        const auto& s = c->shape();
        for_each_lower_set(s.max_a(), s.max_b(), [&](const MonomialSet& m) {
            if (m.empty())
                return;
            const auto w = witness_min_weight(*c, m);
            for (const auto& [mono, coef] : w.terms())
                REQUIRE(m.contains(mono));
            REQUIRE(hamming_weight(c->eval_vector(w)) == distance_formula(s, m));
        });
    }
}

TEST_CASE("degree-4 code on q=3 r=2 u=4 is self-orthogonal with unit scaling") {
    const auto c = curve(3, 1, 2, 4);
    const EvaluationCode code = build_code(c, catalog::f9_degree4());
    const DualResult d = dual_code(code);
    CHECK(d.dual.k() == 15);
    CHECK(d.verified());
    CHECK(dual_matches_kernel(code, d));
    for (auto b : d.scaling.beta)
        CHECK(b == c->field().one());
    REQUIRE(d.scaling.lambda);
    for (auto l : *d.scaling.lambda)
        CHECK(l == c->field().one());
    const HullResult h = hull(code);
    CHECK(h.algebraic_dimension == 12);
    CHECK(h.verified);
    const auto cl = classify_duality(code);
    CHECK(cl.kind == DualityClass::self_orthogonal);
    CHECK(cl.confirmed == std::optional<bool>{true});
}

TEST_CASE("full footprint: dual is the zero code") {
    const auto c = curve(3, 1, 2, 2);
    const EvaluationCode code(c, footprint_set(c->shape()));
    const DualResult d = dual_code(code);
    CHECK(d.dual.k() == 0);
    CHECK(d.verified());
    CHECK(dual_matches_kernel(code, d));
}

TEST_CASE("classification covers LCD and the general case") {
    const auto c = curve(3, 1, 2, 2);
    const Field& f = c->field();
    CHECK(sqrt_in_field(f, 2).has_value());
    // two nonempty lower sets share (0, 0), so only the whole footprint is LCD
    const EvaluationCode full(c, footprint_set(c->shape()));
    const auto lcd = classify_duality(full);
    CHECK(lcd.kind == DualityClass::lcd_after_scaling);
    CHECK(lcd.confirmed == std::optional<bool>{true});
    CHECK(hull(full).algebraic_dimension == 0);
    CHECK(classify_duality(EvaluationCode(c, MonomialSet(c->shape(), {{0, 0}}))).kind == DualityClass::self_orthogonal);

    const EvaluationCode mixed(c, family_box(c->shape(), 5, 2));
    const auto other = classify_duality(mixed);
    CHECK(other.kind == DualityClass::none);
    CHECK(other.confirmed == std::optional<bool>{true});
    const HullResult h = hull(mixed);
    CHECK(h.verified);
    CHECK(h.algebraic_dimension == h.hull.k());
}

TEST_CASE("duality on every lower set of q=3 r=2 u=2") {
    const auto c = curve(3, 1, 2, 2);
    for_each_lower_set(4, 2, [&](const MonomialSet& m) {
        const EvaluationCode code(c, m);
        const DualResult d = dual_code(code);
        REQUIRE(d.verified());
        REQUIRE(dual_matches_kernel(code, d));
        const HullResult h = hull(code);
        REQUIRE(h.verified);
        REQUIRE(h.algebraic_dimension == set_intersection(m, complement(m)).size());
    });
}

TEST_CASE("square roots") {
    const auto f = make_field(FieldParams{7, 1, 3});
    CHECK_FALSE(sqrt_in_field(*f, 3).has_value());
    CHECK(sqrt_in_field(*f, 2).has_value());
    const auto f4 = make_field(FieldParams{2, 1, 2});
    CHECK(sqrt_in_field(*f4, 3) == std::optional<FieldElement>{f4->one()});
}
