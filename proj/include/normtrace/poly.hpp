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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "normtrace/gf.hpp"

namespace normtrace {

/// Exponent pair of the monomial x^a y^b. Ordered lexicographically with
/// x ≺ y: compare the y-exponent first, then the x-exponent.
struct Monomial {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    friend constexpr bool operator==(Monomial, Monomial) = default;
    friend constexpr auto operator<=>(Monomial l, Monomial r) {
        if (auto c = l.b <=> r.b; c != 0)
            return c;
        return l.a <=> r.a;
    }
};

/// Sparse polynomial in F_{q^r}[x, y]. Zero coefficients are never stored.
class BivariatePoly {
public:
    using Terms = std::map<Monomial, FieldElement>;

    BivariatePoly() = default;
    static BivariatePoly constant(FieldElement c);
    static BivariatePoly monomial(Monomial m, FieldElement c = FieldElement{1});

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    FieldElement coeff(Monomial m) const;
    /// Largest monomial under the lex order; the polynomial must be nonzero.
    Monomial leading() const;

    /// Adds c * m to the polynomial.
    void add_term(const Field& f, Monomial m, FieldElement c);

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    Terms terms_;
};

BivariatePoly add(const Field& f, const BivariatePoly& g, const BivariatePoly& h);
BivariatePoly sub(const Field& f, const BivariatePoly& g, const BivariatePoly& h);
BivariatePoly mul(const Field& f, const BivariatePoly& g, const BivariatePoly& h);
BivariatePoly scale(const Field& f, const BivariatePoly& g, FieldElement c);

FieldElement poly_eval(const Field& f, const BivariatePoly& g, FieldElement x, FieldElement y);

std::string to_string(const BivariatePoly& g);

// Dense univariate helpers, coefficients constant term first.
namespace univariate {

using Poly = std::vector<FieldElement>;

Poly mul(const Field& f, const Poly& g, const Poly& h);

/// Exact division by (t - root). Throws std::logic_error on a nonzero remainder.
Poly divide_linear(const Field& f, const Poly& g, FieldElement root);

/// prod (t - roots[i])
Poly from_roots(const Field& f, std::span<const FieldElement> roots);

/// g(x) * h(y)
BivariatePoly outer(const Field& f, const Poly& gx, const Poly& hy);

}  // namespace univariate

}  // namespace normtrace
