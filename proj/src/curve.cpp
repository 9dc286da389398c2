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

#include "normtrace/curve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace normtrace {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

}  // namespace

CurveShape::CurveShape(std::uint64_t q_, std::uint32_t r_, std::uint64_t u_) : q(q_), r(r_), u(u_) {
    if (q < 2 || r < 2)
        throw std::invalid_argument("curve requires q >= 2 and r >= 2");
    if (u == 0 || norm_exponent() % u != 0)
        throw std::invalid_argument("u = " + std::to_string(u) + " does not divide (q^r-1)/(q-1) = " +
                                    std::to_string(norm_exponent()));
}

std::uint64_t CurveShape::q_pow_r() const { return ipow(q, r); }
std::uint64_t CurveShape::q_pow_r1() const { return ipow(q, r - 1); }
std::uint64_t CurveShape::norm_exponent() const { return (q_pow_r() - 1) / (q - 1); }
std::uint32_t CurveShape::max_a() const { return static_cast<std::uint32_t>((q - 1) * u); }
std::uint32_t CurveShape::max_b() const { return static_cast<std::uint32_t>(q_pow_r1() - 1); }
std::uint64_t CurveShape::length() const { return q_pow_r1() * ((q - 1) * u + 1); }

Curve::Curve(FieldPtr field, std::uint64_t u) : field_(std::move(field)), shape_(field_->q(), field_->r(), u) {
    const Field& f = *field_;
    std::vector<std::vector<FieldElement>> fibres(f.order());
    for (std::uint32_t v = 0; v < f.order(); ++v)
        fibres[f.trace(FieldElement{v}).value].push_back(FieldElement{v});
    for (std::uint32_t xv = 0; xv < f.order(); ++xv) {
        const FieldElement lhs = f.pow(FieldElement{xv}, static_cast<std::int64_t>(u));
        for (auto y : fibres[lhs.value])
            points_.push_back(CurvePoint{FieldElement{xv}, y, points_.size()});
    }
}

bool Curve::on_curve(FieldElement x, FieldElement y) const {
    const Field& f = *field_;
    return f.pow(x, static_cast<std::int64_t>(shape_.u)) == f.trace(y);
}

std::size_t Curve::index_of(FieldElement x, FieldElement y) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), std::pair{x, y},
                               [](const CurvePoint& p, const std::pair<FieldElement, FieldElement>& key) {
                                   return std::pair{p.x, p.y} < key;
                               });
    if (it == points_.end() || it->x != x || it->y != y)
        throw std::invalid_argument("point is not on the curve");
    return it->index;
}

std::vector<CurvePoint> Curve::partition_A(FieldElement gamma) const {
    const Field& f = *field_;
    if (!f.in_subfield(gamma))
        throw std::invalid_argument("gamma is not in F_q");
    std::vector<CurvePoint> out;
    for (const auto& p : points_)
        if (f.trace(p.y) == gamma)
            out.push_back(p);
    return out;
}

std::vector<FieldElement> Curve::x_coords_with(FieldElement gamma) const {
    const Field& f = *field_;
    std::vector<FieldElement> out;
    for (const auto& p : points_)
        if (f.pow(p.x, static_cast<std::int64_t>(shape_.u)) == gamma && (out.empty() || out.back() != p.x))
            out.push_back(p.x);
    return out;
}

std::vector<FieldElement> Curve::trace_fibre(FieldElement gamma) const {
    const Field& f = *field_;
    std::vector<FieldElement> out;
    for (std::uint32_t v = 0; v < f.order(); ++v)
        if (f.trace(FieldElement{v}) == gamma)
            out.emplace_back(v);
    return out;
}

std::vector<Monomial> Curve::footprint() const {
    std::vector<Monomial> out;
    for (std::uint32_t b = 0; b <= shape_.max_b(); ++b)
        for (std::uint32_t a = 0; a <= shape_.max_a(); ++a)
            out.push_back(Monomial{a, b});
    return out;
}

BivariatePoly trace_relation(const Field& f, const CurveShape& shape) {
    BivariatePoly g;
    std::uint64_t e = 1;
    for (std::uint32_t k = 0; k < shape.r; ++k, e *= shape.q)
        g.add_term(f, Monomial{0, static_cast<std::uint32_t>(e)}, f.one());
    g.add_term(f, Monomial{static_cast<std::uint32_t>(shape.u), 0}, f.neg(f.one()));
    return g;
}

BivariatePoly Curve::normal_form(const BivariatePoly& g) const {
    const Field& f = *field_;
    const std::uint32_t top_b = static_cast<std::uint32_t>(shape_.q_pow_r1());
    const std::uint32_t period = shape_.max_a();

    // y^{q^{r-1}} ≡ x^u - (y^{q^{r-2}} + ... + y)
    const BivariatePoly relation = trace_relation(f, shape_);
    BivariatePoly tail;
    for (const auto& [m, c] : relation.terms())
        if (m.b != top_b)
            tail.add_term(f, m, f.neg(c));

    BivariatePoly work = g;
    while (!work.is_zero()) {
        const auto [m, c] = *work.terms().rbegin();
        if (m.b < top_b)
            break;
        work.add_term(f, m, f.neg(c));
        for (const auto& [tm, tc] : tail.terms())
            work.add_term(f, Monomial{m.a + tm.a, m.b - top_b + tm.b}, f.mul(c, tc));
    }

    // x^{(q-1)u+1} ≡ x
    BivariatePoly out;
    for (const auto& [m, c] : work.terms()) {
        Monomial r = m;
        if (r.a > period)
            r.a = (r.a - 1) % period + 1;
        out.add_term(f, r, c);
    }
    return out;
}

BivariatePoly Curve::indicator(const CurvePoint& p) const {
    const Field& f = *field_;
    if (!on_curve(p.x, p.y))
        throw std::invalid_argument("indicator requested for a point off the curve");

    const std::uint32_t period = shape_.max_a();
    univariate::Poly xpoly(period + 2);
    xpoly[period + 1] = f.one();
    xpoly[1] = f.neg(f.one());
    const auto xfactor = univariate::divide_linear(f, xpoly, p.x);

    univariate::Poly ypoly(shape_.q_pow_r1() + 1);
    std::uint64_t e = 1;
    for (std::uint32_t k = 0; k < shape_.r; ++k, e *= shape_.q)
        ypoly[e] = f.one();
    ypoly[0] = f.neg(f.trace(p.y));
    const auto yfactor = univariate::divide_linear(f, ypoly, p.y);

    const FieldElement c = p.x.is_zero() ? f.neg(f.one())
                                         : f.inv(f.neg(f.embed_subfield(static_cast<std::int64_t>(shape_.u))));
    return scale(f, univariate::outer(f, xfactor, yfactor), c);
}

FieldElement Curve::eval(const BivariatePoly& g, const CurvePoint& p) const { return poly_eval(*field_, g, p.x, p.y); }

std::vector<FieldElement> Curve::eval_vector(const BivariatePoly& g) const {
    std::vector<FieldElement> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
        out.push_back(eval(g, p));
    return out;
}

std::vector<FieldElement> Curve::eval_monomial(Monomial m) const {
    const Field& f = *field_;
    std::vector<FieldElement> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
        out.push_back(f.mul(f.pow(p.x, m.a), f.pow(p.y, m.b)));
    return out;
}

CurvePtr make_curve(FieldPtr field, std::uint64_t u) { return std::make_shared<const Curve>(std::move(field), u); }

}  // namespace normtrace
