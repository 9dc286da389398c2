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

#include "normtrace/repair.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace normtrace {

RepairContext make_repair_context(const EvaluationCode& code, std::optional<std::vector<FieldElement>> basis) {
    const Field& f = code.field();
    const CurveShape& shape = code.curve().shape();
    for (auto m : code.monomials())
        if (m.a >= shape.max_a())
            throw std::invalid_argument("monomial x^" + std::to_string(m.a) + " y^" + std::to_string(m.b) +
                                        " violates a <= (q-1)u - 1; repair scheme does not apply");

    std::vector<FieldElement> z;
    if (basis) {
        z = std::move(*basis);
    } else {
        for (std::uint32_t i = 0; i < f.r(); ++i)
            z.push_back(f.pow(f.generator(), i));
    }
    std::vector<FieldElement> dual = f.dual_basis(z);

    DualResult d = dual_code(code);
    Matrix parity = scale_cols(f, d.dual.generator(), d.scaling.beta);
    return RepairContext{code, std::move(z), std::move(dual), std::move(d.scaling.beta), std::move(parity)};
}

std::string_view to_string(DownloadKind k) {
    return k == DownloadKind::full_traces ? "full-traces" : "single-trace";
}

HelperDownload helper_response(const RepairContext& ctx, std::size_t helper, FieldElement symbol, std::size_t erased) {
    const Field& f = ctx.code.field();
    const Curve& curve = ctx.code.curve();
    const FieldElement y_star = curve.point(erased).y;
    const CurvePoint& p = curve.point(helper);
    const FieldElement scaled = f.mul(ctx.beta[helper], symbol);

    HelperDownload out{helper, DownloadKind::single_trace, {}};
    if (p.y == y_star) {
        out.kind = DownloadKind::full_traces;
        for (auto z : ctx.basis)
            out.subsymbols.push_back(f.trace(f.mul(scaled, z)));
    } else {
        out.subsymbols.push_back(f.trace(f.div(scaled, f.sub(p.y, y_star))));
    }
    return out;
}

namespace {

// Rejects words that cannot be completed to a codeword at `star`.
void check_completable(const RepairContext& ctx, std::span<const FieldElement> word, std::size_t star) {
    const Field& f = ctx.code.field();
    const Matrix& h = ctx.parity;
    std::vector<FieldElement> syndrome(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (j != star)
                syndrome[i] = f.add(syndrome[i], f.mul(h(i, j), word[j]));

    std::optional<FieldElement> value;
    for (std::size_t i = 0; i < h.rows() && !value; ++i)
        if (!h(i, star).is_zero())
            value = f.neg(f.div(syndrome[i], h(i, star)));
    const FieldElement v = value.value_or(FieldElement{});
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (!f.add(syndrome[i], f.mul(v, h(i, star))).is_zero())
            throw std::invalid_argument("word is not a codeword of ev(M)");
}

}  // namespace

RepairTranscript repair(const RepairContext& ctx, std::span<const FieldElement> word, std::size_t star) {
    const Field& f = ctx.code.field();
    const Curve& curve = ctx.code.curve();
    const std::size_t n = curve.n();
    if (word.size() != n)
        throw std::invalid_argument("word length does not match the code length");
    if (star >= n)
        throw std::out_of_range("erased position out of range");
    check_completable(ctx, word, star);

    const FieldElement y_star = curve.point(star).y;
    const std::size_t r = ctx.basis.size();

    RepairTranscript t;
    t.erased = star;
    t.gamma_size = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == star)
            continue;
        HelperDownload d = helper_response(ctx, j, word[j], star);
        if (d.kind == DownloadKind::full_traces) {
            t.gamma_set.push_back(j);
            ++t.gamma_size;
        } else {
            t.outside_set.push_back(j);
        }
        t.bandwidth += d.subsymbols.size();
        t.downloads.push_back(std::move(d));
    }

    // Tr(z_i β_{P*} f(P*)) = -Σ_Γ Tr(β_P z_i f(P)) - Σ_{X\Γ} Tr(z_i (β - β*)) Tr(β_P f(P) / (β - β*))
    std::vector<FieldElement> traces(r);
    for (const auto& d : t.downloads) {
        if (d.kind == DownloadKind::full_traces) {
            for (std::size_t i = 0; i < r; ++i)
                traces[i] = f.sub(traces[i], d.subsymbols[i]);
        } else {
            const FieldElement diff = f.sub(curve.point(d.helper).y, y_star);
            for (std::size_t i = 0; i < r; ++i) {
                const FieldElement local = f.trace(f.mul(ctx.basis[i], diff));
                traces[i] = f.sub(traces[i], f.mul(local, d.subsymbols[0]));
            }
        }
    }

    FieldElement scaled{};
    for (std::size_t i = 0; i < r; ++i)
        scaled = f.add(scaled, f.mul(traces[i], ctx.dual[i]));
    t.recovered = f.div(scaled, ctx.beta[star]);
    return t;
}

std::uint64_t bandwidth_bound(const CurveShape& shape) {
    return shape.length() - 1 + (shape.u - 1) * (shape.r - 1);
}

DimensionCalcs dimension_calcs(const CurveShape& shape) {
    DimensionCalcs out;
    const std::uint64_t q1 = shape.q_pow_r1();
    const std::uint64_t cols = std::uint64_t{shape.max_a()} + 1;
    out.k_ev = shape.max_a() * q1;
    out.genus = (shape.u - 1) * (q1 - 1) / 2;
    out.k_ag = static_cast<std::int64_t>(shape.length()) -
               static_cast<std::int64_t>(shape.q) * (static_cast<std::int64_t>(out.genus) - 1) + 1;
    const auto den = static_cast<std::int64_t>(cols);
    const std::int64_t num = den - 1;
    const std::int64_t g = std::gcd(num, den);
    out.rate_bound = Rational{num / g, den / g};
    return out;
}

}  // namespace normtrace
