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

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "normtrace/curve.hpp"
#include "normtrace/poly.hpp"

namespace normtrace {

/// Finite set of exponent pairs inside the grid 0 <= a <= bound_a,
/// 0 <= b <= bound_b, kept sorted in lex (b, then a) order.
class MonomialSet {
public:
    MonomialSet() = default;
    /// Throws std::invalid_argument if any pair escapes the grid.
    MonomialSet(std::uint32_t bound_a, std::uint32_t bound_b, std::vector<Monomial> pairs = {});
    /// Grid taken from the curve footprint: bound_a = (q-1)u, bound_b = q^{r-1} - 1.
    MonomialSet(const CurveShape& shape, std::vector<Monomial> pairs = {});

    std::uint32_t bound_a() const { return bound_a_; }
    std::uint32_t bound_b() const { return bound_b_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<Monomial>& pairs() const { return pairs_; }
    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    bool contains(Monomial m) const;
    void insert(Monomial m);

    /// True iff the set is closed under divisibility. Uses the staircase
    /// test: (a-1, b) and (a, b-1) present whenever nonnegative.
    bool is_decreasing() const;

    /// Elements not strictly dividing any other element.
    std::vector<Monomial> maximal_elements() const;

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    std::uint32_t bound_a_ = 0;
    std::uint32_t bound_b_ = 0;
    std::vector<Monomial> pairs_;
};

inline bool validate_decreasing(const MonomialSet& m) { return m.is_decreasing(); }

/// {(bound_a - i, bound_b - j) : (i, j) in the grid but not in m}
MonomialSet complement(const MonomialSet& m);

MonomialSet footprint_set(const CurveShape& shape);

/// Pairs of total degree a + b <= t inside the footprint.
MonomialSet family_degree(const CurveShape& shape, std::uint64_t t);
/// Pairs with a < box_a and b < box_b inside the footprint.
MonomialSet family_box(const CurveShape& shape, std::uint64_t box_a, std::uint64_t box_b);
/// Pairs with a q^{r-1} + b (q^r-1)/(q-1) <= s inside the footprint.
MonomialSet family_onepoint(const CurveShape& shape, std::uint64_t s);

// Set algebra. All throw std::invalid_argument on mismatched grids.
MonomialSet set_union(const MonomialSet& l, const MonomialSet& r);
MonomialSet set_intersection(const MonomialSet& l, const MonomialSet& r);
MonomialSet set_difference(const MonomialSet& l, const MonomialSet& r);
bool is_subset(const MonomialSet& l, const MonomialSet& r);

/// Calls `visit` for every lower set of the grid, enumerated via weakly
/// decreasing column heights h_0 >= h_1 >= ... >= h_{bound_a} with
/// 0 <= h_i <= bound_b + 1. The empty set is included.
void for_each_lower_set(std::uint32_t bound_a, std::uint32_t bound_b,
                        const std::function<void(const MonomialSet&)>& visit);

}  // namespace normtrace
