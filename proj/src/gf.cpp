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

#include "normtrace/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "normtrace/ffla.hpp"

namespace normtrace {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

}  // namespace

bool split_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& s) {
    if (q < 2)
        return false;
    std::uint64_t d = 2;
    while (q % d != 0)
        ++d;
    std::uint32_t e = 0;
    while (q % d == 0) {
        q /= d;
        ++e;
    }
    if (q != 1)
        return false;
    p = static_cast<std::uint32_t>(d);
    s = e;
    return true;
}

Field::Field(FieldParams params) : params_(params) {
    if (!is_prime(params.p))
        throw std::invalid_argument("characteristic " + std::to_string(params.p) + " is not prime");
    if (params.s < 1)
        throw std::invalid_argument("s must be at least 1");
    if (params.r < 2)
        throw std::invalid_argument("extension degree r must be at least 2");

    std::uint64_t q = 1;
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < params.s * params.r; ++i) {
        order *= params.p;
        if (i < params.s)
            q *= params.p;
        if (order > kMaxOrder)
            throw std::invalid_argument("field order exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    order_ = static_cast<std::uint32_t>(order);
    degree_ = params.s * params.r;

    choose_modulus();

    const std::uint32_t n1 = order_ - 1;
    zech_.assign(n1, -1);
    for (std::uint32_t k = 0; k < n1; ++k) {
        // 1 + g^k: bump the constant digit of g^k.
        std::uint32_t v = antilog_[k].value;
        std::uint32_t c0 = v % params_.p;
        std::uint32_t w = v - c0 + (c0 + 1) % params_.p;
        zech_[k] = w == 0 ? -1 : static_cast<std::int64_t>(log_[w]);
    }
    minus_one_log_ = params_.p == 2 ? 0 : n1 / 2;

    const std::uint32_t step = n1 / (q_ - 1);
    subfield_.push_back(zero());
    for (std::uint32_t k = 0; k < q_ - 1; ++k)
        subfield_.push_back(antilog_[k * step]);
    std::sort(subfield_.begin(), subfield_.end());
}

void Field::choose_modulus() {
    const std::uint32_t p = params_.p;
    const std::uint32_t m = degree_;
    // coefficient vectors (c_{m-1}, ..., c_0) enumerated in lexicographic order
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < m; ++i)
        total *= p;

    for (std::uint32_t weight = 1; weight <= m; ++weight) {
        std::vector<std::uint32_t> digits(m, 0);  // digits[0] = c_{m-1}
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t t = idx;
            for (std::uint32_t i = 0; i < m; ++i) {
                digits[m - 1 - i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (digits[m - 1] == 0)
                continue;
            auto w = static_cast<std::uint32_t>(std::count_if(digits.begin(), digits.end(), [](auto d) { return d != 0; }));
            if (w != weight)
                continue;
            std::vector<std::uint32_t> coeffs(m + 1);
            for (std::uint32_t i = 0; i < m; ++i)
                coeffs[m - 1 - i] = digits[i];
            coeffs[m] = 1;
            if (try_modulus(coeffs))
                return;
        }
    }
    throw std::logic_error("no primitive polynomial found");
}

bool Field::try_modulus(const std::vector<std::uint32_t>& coeffs) {
    const std::uint32_t p = params_.p;
    const std::uint32_t m = degree_;
    const std::uint32_t n1 = order_ - 1;

    std::vector<std::uint32_t> cur(m, 0);
    cur[0] = 1;
    std::vector<FieldElement> antilog(n1);
    std::vector<std::uint32_t> log(order_, 0);
    std::vector<bool> seen(order_, false);

    auto pack = [&] {
        std::uint32_t v = 0;
        for (std::uint32_t i = m; i-- > 0;)
            v = v * p + cur[i];
        return v;
    };

    for (std::uint32_t k = 0; k < n1; ++k) {
        std::uint32_t v = pack();
        if (seen[v])
            return false;
        seen[v] = true;
        antilog[k] = FieldElement{v};
        log[v] = k;
        // multiply by t and reduce modulo the monic modulus
        std::uint32_t top = cur[m - 1];
        for (std::uint32_t i = m - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::uint32_t i = 0; i < m; ++i)
                cur[i] = (cur[i] + (p - (top * coeffs[i]) % p)) % p;
    }
    if (pack() != 1)
        return false;

    modulus_ = coeffs;
    antilog_ = std::move(antilog);
    log_ = std::move(log);
    return true;
}

FieldElement Field::element(std::uint32_t value) const {
    if (value >= order_)
        throw std::out_of_range("element value out of range");
    return FieldElement{value};
}

std::uint32_t Field::log(FieldElement a) const {
    if (a.is_zero())
        throw std::domain_error("log of zero");
    return log_[a.value];
}

FieldElement Field::exp(std::int64_t k) const {
    return antilog_[static_cast<std::size_t>(mod(k, order_ - 1))];
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const std::uint32_t n1 = order_ - 1;
    std::uint32_t la = log_[a.value];
    std::uint32_t lb = log_[b.value];
    std::uint32_t d = lb >= la ? lb - la : lb + n1 - la;
    std::int64_t z = zech_[d];
    if (z < 0)
        return zero();
    return antilog_[(la + static_cast<std::uint32_t>(z)) % n1];
}

FieldElement Field::neg(FieldElement a) const {
    if (a.is_zero() || params_.p == 2)
        return a;
    return antilog_[(log_[a.value] + minus_one_log_) % (order_ - 1)];
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero())
        return zero();
    std::uint32_t s = log_[a.value] + log_[b.value];
    const std::uint32_t n1 = order_ - 1;
    return antilog_[s >= n1 ? s - n1 : s];
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero())
        throw std::domain_error("division by zero");
    const std::uint32_t n1 = order_ - 1;
    return antilog_[(n1 - log_[a.value]) % n1];
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e < 0)
            throw std::domain_error("division by zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t n1 = order_ - 1;
    return antilog_[static_cast<std::size_t>(mod(static_cast<std::int64_t>(log_[a.value]) * mod(e, n1), n1))];
}

FieldElement Field::frobenius_q(FieldElement a) const { return pow(a, q_); }

FieldElement Field::trace(FieldElement a) const {
    FieldElement acc = zero();
    FieldElement c = a;
    for (std::uint32_t i = 0; i < params_.r; ++i) {
        acc = add(acc, c);
        c = frobenius_q(c);
    }
    return acc;
}

FieldElement Field::norm(FieldElement a) const { return pow(a, (order_ - 1) / (q_ - 1)); }

FieldElement Field::embed_subfield(std::int64_t i) const {
    return FieldElement{static_cast<std::uint32_t>(mod(i, params_.p))};
}

std::vector<FieldElement> Field::dual_basis(std::span<const FieldElement> basis) const {
    const std::size_t r = params_.r;
    if (basis.size() != r)
        throw std::invalid_argument("basis must have exactly r elements");
    Matrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            gram(i, j) = trace(mul(basis[i], basis[j]));
    Matrix ginv;
    try {
        ginv = inverse(*this, gram);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("elements are not a basis of F_{q^r} over F_q");
    }
    // z'_j = sum_k ginv(j, k) z_k, since the trace form Gram matrix is symmetric
    std::vector<FieldElement> dual(r, zero());
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
            dual[j] = add(dual[j], mul(ginv(j, k), basis[k]));
    return dual;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order_);
    for (std::uint32_t v = 0; v < order_; ++v)
        out.emplace_back(v);
    return out;
}

FieldPtr make_field(FieldParams params) { return std::make_shared<const Field>(params); }

}  // namespace normtrace
