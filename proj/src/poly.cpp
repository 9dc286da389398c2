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

#include "normtrace/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace normtrace {

BivariatePoly BivariatePoly::constant(FieldElement c) { return monomial(Monomial{0, 0}, c); }

BivariatePoly BivariatePoly::monomial(Monomial m, FieldElement c) {
    BivariatePoly g;
    if (!c.is_zero())
        g.terms_.emplace(m, c);
    return g;
}

FieldElement BivariatePoly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement{} : it->second;
}

Monomial BivariatePoly::leading() const {
    if (terms_.empty())
        throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

void BivariatePoly::add_term(const Field& f, Monomial m, FieldElement c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second = f.add(it->second, c);
    if (it->second.is_zero())
        terms_.erase(it);
}

BivariatePoly add(const Field& f, const BivariatePoly& g, const BivariatePoly& h) {
    BivariatePoly out = g;
    for (const auto& [m, c] : h.terms())
        out.add_term(f, m, c);
    return out;
}

BivariatePoly sub(const Field& f, const BivariatePoly& g, const BivariatePoly& h) {
    BivariatePoly out = g;
    for (const auto& [m, c] : h.terms())
        out.add_term(f, m, f.neg(c));
    return out;
}

BivariatePoly mul(const Field& f, const BivariatePoly& g, const BivariatePoly& h) {
    BivariatePoly out;
    for (const auto& [m1, c1] : g.terms())
        for (const auto& [m2, c2] : h.terms())
            out.add_term(f, Monomial{m1.a + m2.a, m1.b + m2.b}, f.mul(c1, c2));
    return out;
}

BivariatePoly scale(const Field& f, const BivariatePoly& g, FieldElement c) {
    BivariatePoly out;
    for (const auto& [m, v] : g.terms())
        out.add_term(f, m, f.mul(v, c));
    return out;
}

FieldElement poly_eval(const Field& f, const BivariatePoly& g, FieldElement x, FieldElement y) {
    FieldElement acc{};
    for (const auto& [m, c] : g.terms())
        acc = f.add(acc, f.mul(c, f.mul(f.pow(x, m.a), f.pow(y, m.b))));
    return acc;
}

std::string to_string(const BivariatePoly& g) {
    if (g.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        const auto [m, c] = *it;
        os << '[' << c.value << ']';
        if (m.a > 0)
            os << "*x^" << m.a;
        if (m.b > 0)
            os << "*y^" << m.b;
    }
    return os.str();
}

namespace univariate {

Poly mul(const Field& f, const Poly& g, const Poly& h) {
    if (g.empty() || h.empty())
        return {};
    Poly out(g.size() + h.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(g[i], h[j]));
    return out;
}

Poly divide_linear(const Field& f, const Poly& g, FieldElement root) {
    if (g.size() < 2)
        throw std::logic_error("polynomial of degree < 1 is not divisible by a linear factor");
    // synthetic division from the top coefficient down
    Poly quot(g.size() - 1);
    FieldElement carry{};
    for (std::size_t i = g.size(); i-- > 1;) {
        carry = f.add(g[i], f.mul(carry, root));
        quot[i - 1] = carry;
    }
    const FieldElement rem = f.add(g[0], f.mul(carry, root));
    if (!rem.is_zero())
        throw std::logic_error("inexact division by linear factor");
    return quot;
}

Poly from_roots(const Field& f, std::span<const FieldElement> roots) {
    Poly out{f.one()};
    for (auto r : roots)
        out = mul(f, out, Poly{f.neg(r), f.one()});
    return out;
}

BivariatePoly outer(const Field& f, const Poly& gx, const Poly& hy) {
    BivariatePoly out;
    for (std::size_t i = 0; i < gx.size(); ++i)
        for (std::size_t j = 0; j < hy.size(); ++j)
            out.add_term(f, Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, f.mul(gx[i], hy[j]));
    return out;
}

}  // namespace univariate

}  // namespace normtrace
