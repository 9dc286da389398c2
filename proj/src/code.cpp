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

#include "normtrace/code.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace normtrace {

EvaluationCode::EvaluationCode(CurvePtr curve, MonomialSet monomials)
    : curve_(std::move(curve)), monomials_(std::move(monomials)), generator_(0, curve_->n()) {
    const CurveShape& shape = curve_->shape();
    if (monomials_.bound_a() != shape.max_a() || monomials_.bound_b() != shape.max_b())
        throw std::invalid_argument("monomial set does not match the curve footprint");
    if (!monomials_.is_decreasing())
        throw std::invalid_argument("monomial set is not closed under divisibility");
    for (auto m : monomials_)
        generator_.append_row(curve_->eval_monomial(m));
}

std::vector<FieldElement> EvaluationCode::encode(std::span<const FieldElement> message) const {
    return vec_mat(field(), message, generator_);
}

EvaluationCode build_code(CurvePtr curve, MonomialSet monomials) {
    EvaluationCode code(std::move(curve), std::move(monomials));
    if (rank(code.field(), code.generator()) != code.k())
        throw std::logic_error("generator matrix is rank deficient");
    return code;
}

std::uint64_t zero_bound(const CurveShape& shape, Monomial m) {
    const std::uint64_t q1 = shape.q_pow_r1();
    const std::uint64_t cols = std::uint64_t{shape.max_a()} + 1;
    const std::uint64_t first = m.a * q1 + (cols - m.a) * m.b;
    const std::uint64_t second = m.a * q1 + m.b * shape.u;
    return std::min(first, second);
}

std::uint64_t max_zero_bound(const CurveShape& shape, const MonomialSet& m) {
    if (m.empty())
        throw std::invalid_argument("empty monomial set");
    std::uint64_t best = 0;
    for (auto mono : m.maximal_elements())
        best = std::max(best, zero_bound(shape, mono));
    return best;
}

std::uint64_t max_zero_bound_all(const CurveShape& shape, const MonomialSet& m) {
    if (m.empty())
        throw std::invalid_argument("empty monomial set");
    std::uint64_t best = 0;
    for (auto mono : m)
        best = std::max(best, zero_bound(shape, mono));
    return best;
}

std::uint64_t distance_formula(const CurveShape& shape, const MonomialSet& m) {
    return shape.length() - max_zero_bound(shape, m);
}

std::int64_t singleton_gap(const CurveShape& shape, const MonomialSet& m) {
    const auto n = static_cast<std::int64_t>(shape.length());
    const auto k = static_cast<std::int64_t>(m.size());
    const auto d = static_cast<std::int64_t>(distance_formula(shape, m));
    return n + 1 - k - d;
}

std::optional<std::uint64_t> distance_bruteforce(const EvaluationCode& code, std::uint64_t budget) {
    const Field& f = code.field();
    const std::size_t k = code.k();
    const std::size_t n = code.n();
    if (k == 0)
        throw std::invalid_argument("the zero code has no minimum distance");

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > budget / f.order())
            return std::nullopt;
        count *= f.order();
    }

    const Matrix& g = code.generator();
    const std::uint32_t order = f.order();
    // step[v] = element(v+1) - element(v), with wrap-around at the top
    std::vector<FieldElement> step(order);
    for (std::uint32_t v = 0; v < order; ++v)
        step[v] = f.sub(FieldElement{(v + 1) % order}, FieldElement{v});

    std::uint64_t best = n;
    std::vector<FieldElement> word(n);
    std::vector<std::uint32_t> digits;
    // Each nonzero message is a scalar multiple of exactly one message whose
    // first nonzero coordinate (at `lead`) is 1.
    for (std::size_t lead = 0; lead < k; ++lead) {
        auto lead_row = g.row(lead);
        std::copy(lead_row.begin(), lead_row.end(), word.begin());
        const std::size_t free = k - lead - 1;
        digits.assign(free, 0);
        while (true) {
            best = std::min<std::uint64_t>(best, hamming_weight(word));
            std::size_t pos = 0;
            while (pos < free) {
                const std::size_t row = lead + 1 + pos;
                const FieldElement delta = step[digits[pos]];
                auto grow = g.row(row);
                for (std::size_t j = 0; j < n; ++j)
                    word[j] = f.add(word[j], f.mul(delta, grow[j]));
                digits[pos] = (digits[pos] + 1) % order;
                if (digits[pos] != 0)
                    break;
                ++pos;
            }
            if (pos == free)
                break;
        }
    }
    return best;
}

BivariatePoly witness_min_weight(const Curve& curve, const MonomialSet& m) {
    const Field& f = curve.field();
    const CurveShape& shape = curve.shape();
    if (m.empty())
        throw std::invalid_argument("empty monomial set");

    Monomial target{0, 0};
    std::uint64_t best = 0;
    for (auto mono : m) {
        const auto z = zero_bound(shape, mono);
        if (z > best) {
            best = z;
            target = mono;
        }
    }

    const FieldElement gamma = f.subfield().at(1);
    std::vector<FieldElement> gamma_xs = curve.x_coords_with(gamma);
    std::vector<FieldElement> other_xs;
    for (const auto& p : curve.points())
        if (f.pow(p.x, static_cast<std::int64_t>(shape.u)) != gamma && (other_xs.empty() || other_xs.back() != p.x))
            other_xs.push_back(p.x);

    std::vector<FieldElement> alphas;
    std::vector<FieldElement> betas;
    const std::uint64_t threshold = (shape.q - 2) * shape.u + 1;
    if (target.b == 0) {
        std::vector<FieldElement> xs;
        for (const auto& p : curve.points())
            if (xs.empty() || xs.back() != p.x)
                xs.push_back(p.x);
        alphas.assign(xs.begin(), xs.begin() + target.a);
    } else {
        const auto fibre = curve.trace_fibre(gamma);
        betas.assign(fibre.begin(), fibre.begin() + target.b);
        if (target.a <= threshold) {
            alphas.assign(other_xs.begin(), other_xs.begin() + target.a);
        } else {
            alphas = other_xs;
            const std::uint64_t extra = target.a - threshold;
            alphas.insert(alphas.end(), gamma_xs.begin(), gamma_xs.begin() + static_cast<std::ptrdiff_t>(extra));
        }
    }
    return univariate::outer(f, univariate::from_roots(f, alphas), univariate::from_roots(f, betas));
}

std::optional<FieldElement> sqrt_in_field(const Field& f, std::uint64_t u) {
    const FieldElement target = f.embed_subfield(static_cast<std::int64_t>(u % f.p()));
    for (std::uint32_t v = 0; v < f.order(); ++v)
        if (f.mul(FieldElement{v}, FieldElement{v}) == target)
            return FieldElement{v};
    return std::nullopt;
}

ScalingVectors scaling_vectors(const Curve& curve) {
    const Field& f = curve.field();
    ScalingVectors out;
    const FieldElement u = f.embed_subfield(static_cast<std::int64_t>(curve.u() % f.p()));
    const FieldElement u_inv = f.inv(u);
    const auto root = sqrt_in_field(f, curve.u());
    for (const auto& p : curve.points())
        out.beta.push_back(p.x.is_zero() ? f.one() : u_inv);
    if (root) {
        const FieldElement root_inv = f.inv(*root);
        std::vector<FieldElement> lambda;
        for (const auto& p : curve.points())
            lambda.push_back(p.x.is_zero() ? f.one() : root_inv);
        out.lambda = std::move(lambda);
    }
    return out;
}

DualResult dual_code(const EvaluationCode& code) {
    const Field& f = code.field();
    DualResult out{scaling_vectors(code.curve()), EvaluationCode(code.curve_ptr(), complement(code.monomials()))};
    const Matrix scaled = scale_cols(f, out.dual.generator(), out.scaling.beta);
    out.orthogonal = mat_mul(f, code.generator(), transpose(scaled)).is_zero();
    out.dimensions_add_up = rank(f, code.generator()) + rank(f, out.dual.generator()) == code.n();
    return out;
}

bool dual_matches_kernel(const EvaluationCode& code, const DualResult& dual) {
    const Field& f = code.field();
    const Matrix kernel = kernel_basis(f, code.generator());
    const Matrix scaled = scale_cols(f, dual.dual.generator(), dual.scaling.beta);
    return row_space_equal(f, kernel, scaled);
}

Matrix scaled_generator(const EvaluationCode& code, std::span<const FieldElement> lambda) {
    return scale_cols(code.field(), code.generator(), lambda);
}

HullResult hull(const EvaluationCode& code) {
    const Field& f = code.field();
    ScalingVectors scaling = scaling_vectors(code.curve());
    if (!scaling.lambda)
        throw std::domain_error("u is not a square in F_{q^r}; the hull scaling does not exist");
    MonomialSet common = set_intersection(code.monomials(), complement(code.monomials()));
    HullResult out{std::move(scaling), EvaluationCode(code.curve_ptr(), std::move(common))};
    const auto& lambda = *out.scaling.lambda;

    // Hull(C') = {m G' : m G' G'^T = 0} for C' = lambda · C
    const Matrix gs = scaled_generator(code, lambda);
    Matrix hull_basis(0, code.n());
    if (!gs.empty()) {
        const Matrix gram = mat_mul(f, gs, transpose(gs));
        const Matrix left = kernel_basis(f, gram);
        for (std::size_t i = 0; i < left.rows(); ++i)
            hull_basis.append_row(vec_mat(f, left.row(i), gs));
    }
    out.algebraic_dimension = rank(f, hull_basis);
    out.verified = row_space_equal(f, hull_basis, scale_cols(f, out.hull.generator(), lambda));
    return out;
}

std::string_view to_string(DualityClass c) {
    switch (c) {
        case DualityClass::self_dual: return "self-dual";
        case DualityClass::self_orthogonal: return "self-orthogonal";
        case DualityClass::lcd_after_scaling: return "LCD-after-scaling";
        case DualityClass::none: return "none";
    }
    return "none";
}

Classification classify_duality(const EvaluationCode& code) {
    const MonomialSet& m = code.monomials();
    const MonomialSet mc = complement(m);
    const MonomialSet common = set_intersection(m, mc);

    Classification out;
    if (m == mc)
        out.kind = DualityClass::self_dual;
    else if (is_subset(m, mc))
        out.kind = DualityClass::self_orthogonal;
    else if (common.empty())
        out.kind = DualityClass::lcd_after_scaling;

    const auto scaling = scaling_vectors(code.curve());
    if (scaling.lambda) {
        const Field& f = code.field();
        const Matrix gs = scaled_generator(code, *scaling.lambda);
        const std::size_t gram_rank = gs.empty() ? 0 : rank(f, mat_mul(f, gs, transpose(gs)));
        const std::size_t hull_dim = code.k() - gram_rank;
        bool ok = hull_dim == common.size();
        if (out.kind == DualityClass::self_dual)
            ok = ok && gram_rank == 0 && 2 * code.k() == code.n();
        else if (out.kind == DualityClass::self_orthogonal)
            ok = ok && gram_rank == 0;
        else if (out.kind == DualityClass::lcd_after_scaling)
            ok = ok && hull_dim == 0;
        out.confirmed = ok;
    }
    return out;
}

}  // namespace normtrace
