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

#include "normtrace/monset.hpp"
#include "normtrace/verify.hpp"

using namespace normtrace;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Decreasing by the definition: every divisor of a member is a member.
bool closed_under_divisors(const MonomialSet& m) {
    for (auto mono : m)
        for (std::uint32_t a = 0; a <= mono.a; ++a)
            for (std::uint32_t b = 0; b <= mono.b; ++b)
                if (!m.contains(Monomial{a, b}))
                    return false;
    return true;
}

}  // namespace

TEST_CASE("construction keeps lex order and rejects pairs outside the grid") {
    const MonomialSet m(3, 2, {{1, 1}, {0, 0}, {2, 0}, {0, 0}});
    CHECK(m.size() == 3);
    CHECK(m.pairs() == std::vector<Monomial>{{0, 0}, {2, 0}, {1, 1}});
    CHECK_THROWS_AS(MonomialSet(3, 2, {{4, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MonomialSet(3, 2, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("staircase test agrees with the divisor definition on every subset of a small grid") {
    const std::vector<Monomial> grid = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}};
    for (std::uint32_t mask = 0; mask < (1u << grid.size()); ++mask) {
        std::vector<Monomial> pairs;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (mask & (1u << i))
                pairs.push_back(grid[i]);
        const MonomialSet m(2, 2, pairs);
        REQUIRE(m.is_decreasing() == closed_under_divisors(m));
    }
}

TEST_CASE("lower-set enumeration count is a binomial coefficient") {
    for (std::uint32_t cols = 1; cols <= 5; ++cols)
        for (std::uint32_t rows = 1; rows <= 3; ++rows) {
            std::uint64_t count = 0;
            bool all_decreasing = true;
            for_each_lower_set(cols - 1, rows - 1, [&](const MonomialSet& m) {
                ++count;
                all_decreasing = all_decreasing && m.is_decreasing();
            });
            CHECK(count == binomial(cols + rows, cols));
            CHECK(all_decreasing);
        }
}

TEST_CASE("maximal elements") {
    const MonomialSet m = catalog::f9_staircase10();
    CHECK(m.maximal_elements() == std::vector<Monomial>{{4, 0}, {2, 1}, {1, 2}});
}

TEST_CASE("complement of the degree-4 set on q=3 r=2 u=4") {
    const CurveShape shape(3, 2, 4);
    const MonomialSet m = family_degree(shape, 4);
    CHECK(m.size() == 12);
    const MonomialSet c = complement(m);
    std::vector<Monomial> expected;
    for (std::uint32_t a = 0; a <= 5; ++a)
        expected.push_back({a, 0});
    for (std::uint32_t a = 0; a <= 4; ++a)
        expected.push_back({a, 1});
    for (std::uint32_t a = 0; a <= 3; ++a)
        expected.push_back({a, 2});
    CHECK(c.pairs() == expected);
    CHECK(is_subset(m, c));
}

TEST_CASE("families") {
    const CurveShape shape(2, 4, 5);
    CHECK(family_box(shape, 6, 4).size() == 24);
    CHECK(complement(family_box(shape, 6, 4)) == family_box(shape, 6, 4));
    CHECK(footprint_set(shape).size() == shape.length());
    CHECK(family_box(shape, 100, 100) == footprint_set(shape));
    CHECK(family_degree(shape, 0).size() == 1);
    CHECK(complement(footprint_set(shape)).empty());

    const CurveShape f9(3, 2, 4);
    CHECK(family_onepoint(f9, 23).size() == 21);
    CHECK(family_onepoint(f9, 21).size() == 19);
    CHECK(family_onepoint(f9, 0).size() == 1);
    for (std::uint64_t s = 0; s < 60; ++s)
        CHECK(family_onepoint(f9, s).is_decreasing());
    for (std::uint64_t t = 0; t < 12; ++t)
        CHECK(family_degree(f9, t).is_decreasing());
}

TEST_CASE("set algebra") {
    const MonomialSet a(3, 2, {{0, 0}, {1, 0}, {0, 1}});
    const MonomialSet b(3, 2, {{0, 0}, {2, 0}});
    CHECK(set_union(a, b).size() == 4);
    CHECK(set_intersection(a, b).pairs() == std::vector<Monomial>{{0, 0}});
    CHECK(set_difference(a, b).pairs() == std::vector<Monomial>{{1, 0}, {0, 1}});
    CHECK(is_subset(set_intersection(a, b), a));
    CHECK_FALSE(is_subset(a, b));
    const MonomialSet other(4, 2);
    CHECK_THROWS_AS(set_union(a, other), std::invalid_argument);
    CHECK_THROWS_AS(is_subset(a, other), std::invalid_argument);

    // union and intersection of lower sets stay lower sets
    std::vector<MonomialSet> lower;
    for_each_lower_set(3, 2, [&](const MonomialSet& m) { lower.push_back(m); });
    for (const auto& x : lower)
        for (const auto& y : lower) {
            REQUIRE(set_union(x, y).is_decreasing());
            REQUIRE(set_intersection(x, y).is_decreasing());
        }
}
