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
#include <optional>
#include <string_view>
#include <vector>

#include "normtrace/curve.hpp"
#include "normtrace/ffla.hpp"
#include "normtrace/monset.hpp"

namespace normtrace {

/// ev(M): the image of span(M) under evaluation at the curve points.
/// Row i of the generator is the evaluation vector of the i-th monomial of M
/// in lex (b, then a) order.
class EvaluationCode {
public:
    /// Throws std::invalid_argument when M is not decreasing or does not sit
    /// on this curve's footprint. An empty M gives the zero code.
    EvaluationCode(CurvePtr curve, MonomialSet monomials);

    const Curve& curve() const { return *curve_; }
    const CurvePtr& curve_ptr() const { return curve_; }
    const Field& field() const { return curve_->field(); }
    const MonomialSet& monomials() const { return monomials_; }
    const Matrix& generator() const { return generator_; }
    std::size_t n() const { return curve_->n(); }
    std::size_t k() const { return monomials_.size(); }

    /// message * G
    std::vector<FieldElement> encode(std::span<const FieldElement> message) const;

private:
    CurvePtr curve_;
    MonomialSet monomials_;
    Matrix generator_;
};

EvaluationCode build_code(CurvePtr curve, MonomialSet monomials);

/// min(a q^{r-1} + ((q-1)u + 1 - a) b, a q^{r-1} + b u): the largest number of
/// curve zeros of a polynomial with leading monomial x^a y^b.
std::uint64_t zero_bound(const CurveShape& shape, Monomial m);

/// max of zero_bound over the maximal elements of M. Throws on empty M.
std::uint64_t max_zero_bound(const CurveShape& shape, const MonomialSet& m);
/// Same maximum taken over every element; kept as a cross-check.
std::uint64_t max_zero_bound_all(const CurveShape& shape, const MonomialSet& m);

/// Minimum distance n - max_zero_bound. Throws std::invalid_argument on empty M.
std::uint64_t distance_formula(const CurveShape& shape, const MonomialSet& m);

/// n + 1 - k - d.
std::int64_t singleton_gap(const CurveShape& shape, const MonomialSet& m);

constexpr std::uint64_t kDefaultBruteBudget = 100'000'000;

/// Exact minimum weight by enumerating every nonzero message up to scalar
/// multiples. Returns nothing when (q^r)^k exceeds `budget`; throws on k = 0.
std::optional<std::uint64_t> distance_bruteforce(const EvaluationCode& code,
                                                 std::uint64_t budget = kDefaultBruteBudget);

/// A polynomial in span(M) whose evaluation vector has minimum weight.
/// The construction picks the maximizer (a, b) of zero_bound (ties: smallest
/// b, then smallest a), fixes γ as the first nonzero element of F_q, and
/// multiplies linear factors (x - α_i), (y - β_j) with roots in ascending order.
BivariatePoly witness_min_weight(const Curve& curve, const MonomialSet& m);

/// Scaling vectors over the canonical point order. beta_i = u^{-1} where the
/// x-coordinate is nonzero, else 1; lambda_i = α^{-1} (α^2 = u) likewise,
/// present only when u is a square in F_{q^r}.
struct ScalingVectors {
    std::vector<FieldElement> beta;
    std::optional<std::vector<FieldElement>> lambda;
};

/// Smallest α (by representation) with α^2 = u in F_{q^r}.
std::optional<FieldElement> sqrt_in_field(const Field& f, std::uint64_t u);

ScalingVectors scaling_vectors(const Curve& curve);

struct DualResult {
    ScalingVectors scaling;
    EvaluationCode dual;       // ev(M^∁); the dual of ev(M) is beta · ev(M^∁)
    bool orthogonal = false;   // G_M diag(beta) G_{M^∁}^T == 0
    bool dimensions_add_up = false;
    bool verified() const { return orthogonal && dimensions_add_up; }
};

DualResult dual_code(const EvaluationCode& code);

/// Independent check of the dual: kernel of G_M versus beta · G_{M^∁}.
bool dual_matches_kernel(const EvaluationCode& code, const DualResult& dual);

struct HullResult {
    ScalingVectors scaling;
    EvaluationCode hull;                // ev(M ∩ M^∁); Hull(lambda · ev(M)) = lambda · hull
    std::size_t algebraic_dimension = 0;
    bool verified = false;              // lambda · hull equals the computed intersection
};

/// Throws std::domain_error when u has no square root in F_{q^r}.
HullResult hull(const EvaluationCode& code);

/// lambda · G as a generator of the scaled code.
Matrix scaled_generator(const EvaluationCode& code, std::span<const FieldElement> lambda);

enum class DualityClass { self_dual, self_orthogonal, lcd_after_scaling, none };

std::string_view to_string(DualityClass c);

struct Classification {
    DualityClass kind = DualityClass::none;
    /// Algebraic confirmation through lambda · G; nothing when u is not a square.
    std::optional<bool> confirmed;
};

Classification classify_duality(const EvaluationCode& code);

}  // namespace normtrace
