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

#include "normtrace/repair.hpp"
#include "normtrace/report.hpp"
#include "normtrace/verify.hpp"

using namespace normtrace;

namespace {

CurvePtr curve(std::uint32_t p, std::uint32_t s, std::uint32_t r, std::uint64_t u) {
    return make_curve(make_field(FieldParams{p, s, r}), u);
}

}  // namespace

TEST_CASE("repair on q=3 r=2 u=2 recovers every symbol of every basis codeword") {
    const auto c = curve(3, 1, 2, 2);
    const EvaluationCode code = build_code(c, family_box(c->shape(), 4, 3));
    const RepairContext ctx = make_repair_context(code);
    const Field& f = code.field();
    for (std::size_t i = 0; i < code.k(); ++i) {
        std::vector<FieldElement> word(code.generator().row(i).begin(), code.generator().row(i).end());
        for (std::size_t star = 0; star < code.n(); ++star) {
            const auto t = repair(ctx, word, star);
            REQUIRE(t.recovered == word[star]);
            CHECK(t.bandwidth <= bandwidth_bound(c->shape()));
            CHECK(t.gamma_set.size() + t.outside_set.size() + 1 == code.n());
            CHECK(t.gamma_size == (f.trace(c->point(star).y).is_zero() ? 1u : 2u));
        }
    }
}

TEST_CASE("downloads match their kind") {
    const auto c = curve(2, 1, 2, 3);
    const EvaluationCode code = build_code(c, catalog::f4_hermitian_repairable());
    const RepairContext ctx = make_repair_context(code);
    MessageSampler sampler(9);
    const auto word = code.encode(sampler.sample(code.field(), code.k()));
    const auto t = repair(ctx, word, 7);
    for (const auto& d : t.downloads)
        CHECK(d.subsymbols.size() == (d.kind == DownloadKind::full_traces ? 2u : 1u));
    CHECK(to_string(DownloadKind::full_traces) != to_string(DownloadKind::single_trace));
}

TEST_CASE("repair errors") {
    const auto c = curve(2, 1, 2, 3);
    CHECK_THROWS_WITH_AS(make_repair_context(EvaluationCode(c, family_box(c->shape(), 4, 1))),
                         doctest::Contains("x^3"), std::invalid_argument);
    const EvaluationCode code = build_code(c, catalog::f4_hermitian_repairable());
    CHECK_THROWS_AS(make_repair_context(code, std::vector<FieldElement>{FieldElement{1}, FieldElement{1}}),
                    std::invalid_argument);
    const RepairContext ctx = make_repair_context(code);
    std::vector<FieldElement> word(code.n());
    CHECK_THROWS_AS(repair(ctx, word, code.n()), std::out_of_range);
    // a single nonzero coordinate off the erasure cannot be completed unless a
    // weight-2 codeword happens to cover it
    word[0] = FieldElement{1};
    std::size_t rejected = 0;
    for (std::size_t star = 1; star < code.n(); ++star)
        try {
            (void)repair(ctx, word, star);
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    CHECK(rejected > 0);
    CHECK_NOTHROW(repair(ctx, word, 0));
    CHECK_THROWS_AS(repair(ctx, std::vector<FieldElement>(3), 0), std::invalid_argument);
}

TEST_CASE("bandwidth bound and calculators") {
    CHECK(bandwidth_bound(CurveShape(2, 2, 3)) == 9);
    CHECK(bandwidth_bound(CurveShape(2, 4, 3)) == 37);
    const auto calc = dimension_calcs(CurveShape(2, 4, 3));
    CHECK(calc.k_ev == 24);
    CHECK(calc.genus == 7);
    CHECK(calc.k_ag == 21);
    CHECK(calc.rate_bound == Rational{3, 4});
    CHECK(dimension_calcs(CurveShape(3, 2, 4)).rate_bound == Rational{8, 9});
    CHECK(dimension_calcs(CurveShape(2, 2, 1)).genus == 0);
}
