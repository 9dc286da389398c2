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

#include "normtrace/monset.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace normtrace {

namespace {

void require_same_grid(const MonomialSet& l, const MonomialSet& r) {
    if (l.bound_a() != r.bound_a() || l.bound_b() != r.bound_b())
        throw std::invalid_argument("monomial sets live on different footprints");
}

MonomialSet filtered(const CurveShape& shape, const std::function<bool(Monomial)>& keep) {
    std::vector<Monomial> pairs;
    for (std::uint32_t b = 0; b <= shape.max_b(); ++b)
        for (std::uint32_t a = 0; a <= shape.max_a(); ++a)
            if (keep(Monomial{a, b}))
                pairs.push_back(Monomial{a, b});
    return MonomialSet(shape, std::move(pairs));
}

}  // namespace

MonomialSet::MonomialSet(std::uint32_t bound_a, std::uint32_t bound_b, std::vector<Monomial> pairs)
    : bound_a_(bound_a), bound_b_(bound_b), pairs_(std::move(pairs)) {
    for (auto m : pairs_)
        if (m.a > bound_a_ || m.b > bound_b_)
            throw std::invalid_argument("monomial x^" + std::to_string(m.a) + " y^" + std::to_string(m.b) +
                                        " lies outside the footprint");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

MonomialSet::MonomialSet(const CurveShape& shape, std::vector<Monomial> pairs)
    : MonomialSet(shape.max_a(), shape.max_b(), std::move(pairs)) {}

bool MonomialSet::contains(Monomial m) const { return std::binary_search(pairs_.begin(), pairs_.end(), m); }

void MonomialSet::insert(Monomial m) {
    if (m.a > bound_a_ || m.b > bound_b_)
        throw std::invalid_argument("monomial lies outside the footprint");
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), m);
    if (it == pairs_.end() || *it != m)
        pairs_.insert(it, m);
}

bool MonomialSet::is_decreasing() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [this](Monomial m) {
        return (m.a == 0 || contains(Monomial{m.a - 1, m.b})) && (m.b == 0 || contains(Monomial{m.a, m.b - 1}));
    });
}

std::vector<Monomial> MonomialSet::maximal_elements() const {
    std::vector<Monomial> out;
    for (auto m : pairs_) {
        bool dominated = std::any_of(pairs_.begin(), pairs_.end(), [m](Monomial o) {
            return o != m && o.a >= m.a && o.b >= m.b;
        });
        if (!dominated)
            out.push_back(m);
    }
    return out;
}

MonomialSet complement(const MonomialSet& m) {
    std::vector<Monomial> pairs;
    for (std::uint32_t j = 0; j <= m.bound_b(); ++j)
        for (std::uint32_t i = 0; i <= m.bound_a(); ++i)
            if (!m.contains(Monomial{i, j}))
                pairs.push_back(Monomial{m.bound_a() - i, m.bound_b() - j});
    return MonomialSet(m.bound_a(), m.bound_b(), std::move(pairs));
}

MonomialSet footprint_set(const CurveShape& shape) {
    return filtered(shape, [](Monomial) { return true; });
}

MonomialSet family_degree(const CurveShape& shape, std::uint64_t t) {
    return filtered(shape, [t](Monomial m) { return std::uint64_t{m.a} + m.b <= t; });
}

MonomialSet family_box(const CurveShape& shape, std::uint64_t box_a, std::uint64_t box_b) {
    return filtered(shape, [=](Monomial m) { return m.a < box_a && m.b < box_b; });
}

MonomialSet family_onepoint(const CurveShape& shape, std::uint64_t s) {
    const std::uint64_t wa = shape.q_pow_r1();
    const std::uint64_t wb = shape.norm_exponent();
    return filtered(shape, [=](Monomial m) { return m.a * wa + m.b * wb <= s; });
}

MonomialSet set_union(const MonomialSet& l, const MonomialSet& r) {
    require_same_grid(l, r);
    std::vector<Monomial> out;
    std::set_union(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return MonomialSet(l.bound_a(), l.bound_b(), std::move(out));
}

MonomialSet set_intersection(const MonomialSet& l, const MonomialSet& r) {
    require_same_grid(l, r);
    std::vector<Monomial> out;
    std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return MonomialSet(l.bound_a(), l.bound_b(), std::move(out));
}

MonomialSet set_difference(const MonomialSet& l, const MonomialSet& r) {
    require_same_grid(l, r);
    std::vector<Monomial> out;
    std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return MonomialSet(l.bound_a(), l.bound_b(), std::move(out));
}

bool is_subset(const MonomialSet& l, const MonomialSet& r) {
    require_same_grid(l, r);
    return std::includes(r.begin(), r.end(), l.begin(), l.end());
}

void for_each_lower_set(std::uint32_t bound_a, std::uint32_t bound_b,
                        const std::function<void(const MonomialSet&)>& visit) {
    const std::size_t cols = bound_a + 1;
    std::vector<std::uint32_t> heights(cols, 0);

    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t col, std::uint32_t cap) {
        if (col == cols) {
            std::vector<Monomial> pairs;
            for (std::uint32_t a = 0; a < cols; ++a)
                for (std::uint32_t b = 0; b < heights[a]; ++b)
                    pairs.push_back(Monomial{a, b});
            visit(MonomialSet(bound_a, bound_b, std::move(pairs)));
            return;
        }
        for (std::uint32_t h = cap + 1; h-- > 0;) {
            heights[col] = h;
            rec(col + 1, h);
        }
    };
    rec(0, bound_b + 1);
}

}  // namespace normtrace
