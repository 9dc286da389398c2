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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "normtrace/gf.hpp"
#include "normtrace/poly.hpp"

namespace normtrace {

/// Numeric shape of the curve x^u = Tr(y) over F_{q^r}. Everything that only
/// depends on (q, r, u) lives here so closed-form computations do not need
/// the point set.
struct CurveShape {
    std::uint64_t q = 2;
    std::uint32_t r = 2;
    std::uint64_t u = 1;

    /// Throws std::invalid_argument unless u >= 1 divides (q^r - 1)/(q - 1).
    CurveShape(std::uint64_t q, std::uint32_t r, std::uint64_t u);

    std::uint64_t q_pow_r() const;
    std::uint64_t q_pow_r1() const;         // q^{r-1}
    std::uint64_t norm_exponent() const;    // (q^r - 1)/(q - 1)
    std::uint32_t max_a() const;            // (q-1)u
    std::uint32_t max_b() const;            // q^{r-1} - 1
    std::uint64_t length() const;           // q^{r-1}((q-1)u + 1)

    friend bool operator==(const CurveShape&, const CurveShape&) = default;
};

struct CurvePoint {
    FieldElement x;
    FieldElement y;
    std::size_t index = 0;
};

/// The affine points of x^u = Tr(y) in canonical order (ascending x, then y).
class Curve {
public:
    Curve(FieldPtr field, std::uint64_t u);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const CurveShape& shape() const { return shape_; }
    std::uint64_t u() const { return shape_.u; }
    std::size_t n() const { return points_.size(); }
    const std::vector<CurvePoint>& points() const { return points_; }
    const CurvePoint& point(std::size_t i) const { return points_.at(i); }

    bool on_curve(FieldElement x, FieldElement y) const;
    /// Index of (x, y) in the canonical order; throws std::invalid_argument if absent.
    std::size_t index_of(FieldElement x, FieldElement y) const;

    /// A_γ = {(α, β) on the curve : α^u = Tr(β) = γ}; γ must lie in F_q.
    std::vector<CurvePoint> partition_A(FieldElement gamma) const;

    /// Distinct x-coordinates of points with α^u = γ, ascending.
    std::vector<FieldElement> x_coords_with(FieldElement gamma) const;

    /// Elements β with Tr(β) = γ, ascending.
    std::vector<FieldElement> trace_fibre(FieldElement gamma) const;

    /// Monomials (a, b) with a <= (q-1)u and b <= q^{r-1} - 1, in lex order.
    std::vector<Monomial> footprint() const;

    /// Remainder of g on division by {Tr(y) - x^u, x^{(q-1)u+1} - x}
    /// under lex order with x ≺ y.
    BivariatePoly normal_form(const BivariatePoly& g) const;

    /// Standard indicator function of `p`: supported on the footprint, 1 at
    /// `p` and 0 at every other point. Throws std::invalid_argument when `p`
    /// is not on the curve.
    BivariatePoly indicator(const CurvePoint& p) const;

    FieldElement eval(const BivariatePoly& g, const CurvePoint& p) const;
    std::vector<FieldElement> eval_vector(const BivariatePoly& g) const;
    /// Evaluation vector of a single monomial.
    std::vector<FieldElement> eval_monomial(Monomial m) const;

private:
    FieldPtr field_;
    CurveShape shape_;
    std::vector<CurvePoint> points_;
};

using CurvePtr = std::shared_ptr<const Curve>;

/// Throws std::invalid_argument when u does not divide (q^r - 1)/(q - 1).
CurvePtr make_curve(FieldPtr field, std::uint64_t u);

/// The polynomial Tr(y) - x^u.
BivariatePoly trace_relation(const Field& f, const CurveShape& shape);

}  // namespace normtrace
