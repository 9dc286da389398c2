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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace normtrace {

/// Tower parameters: q = p^s is the subfield order, q^r the code field order.
struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t s = 1;
    std::uint32_t r = 2;

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Element of F_{q^r}. `value` is the polynomial-basis coefficient vector over
/// F_p read as a base-p integer, so 0 is zero, 1 is one and 0..p-1 is the
/// prime field.
struct FieldElement {
    std::uint32_t value = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic context for the tower F_p ⊆ F_q ⊆ F_{q^r}.
///
/// Elements are stored in a single extension F_p[t]/(f) of degree s*r where f
/// is the first primitive polynomial in the order (fewest nonzero terms, then
/// lexicographically smallest coefficient vector read from t^{m-1} down to
/// t^0). Multiplication goes through log/antilog tables and addition through
/// a Zech logarithm table, so every operation is a handful of lookups.
///
/// A Field is immutable after construction.
class Field {
public:
    explicit Field(FieldParams params);

    const FieldParams& params() const { return params_; }
    std::uint32_t p() const { return params_.p; }
    std::uint32_t q() const { return q_; }
    std::uint32_t r() const { return params_.r; }
    std::uint32_t order() const { return order_; }
    std::uint32_t degree() const { return degree_; }

    /// Coefficients of the defining primitive polynomial, constant term first,
    /// including the leading 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }
    FieldElement generator() const { return antilog_[1 % (order_ - 1)]; }

    FieldElement element(std::uint32_t value) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::int64_t e) const;

    /// Discrete log base generator(); `a` must be nonzero.
    std::uint32_t log(FieldElement a) const;
    FieldElement exp(std::int64_t k) const;

    FieldElement frobenius_q(FieldElement a) const;
    FieldElement trace(FieldElement a) const;
    FieldElement norm(FieldElement a) const;

    bool in_subfield(FieldElement a) const { return frobenius_q(a) == a; }
    /// F_q in ascending order of representation.
    const std::vector<FieldElement>& subfield() const { return subfield_; }

    /// Image of the integer i under the ring map Z -> F_{q^r}.
    FieldElement embed_subfield(std::int64_t i) const;

    /// Dual basis {z'_j} of `basis` relative to F_{q^r}/F_q, i.e.
    /// Tr(z_i z'_j) = δ_ij. Throws std::invalid_argument when `basis` has the
    /// wrong size or is not F_q-linearly independent.
    std::vector<FieldElement> dual_basis(std::span<const FieldElement> basis) const;

    /// All field elements in ascending representation order.
    std::vector<FieldElement> elements() const;

private:
    void choose_modulus();
    bool try_modulus(const std::vector<std::uint32_t>& coeffs);

    FieldParams params_;
    std::uint32_t q_ = 0;
    std::uint32_t degree_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<FieldElement> antilog_;   // antilog_[k] = g^k, k in [0, order-1)
    std::vector<std::uint32_t> log_;      // log_[0] unused
    std::vector<std::int64_t> zech_;      // log(1 + g^k), or -1 when 1 + g^k = 0
    std::uint32_t minus_one_log_ = 0;
    std::vector<FieldElement> subfield_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Throws std::invalid_argument on non-prime p, s < 1, r < 2 or an order above 2^20.
FieldPtr make_field(FieldParams params);

/// Writes p, s with p^s == q; false when q is not a prime power.
bool split_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& s);

}  // namespace normtrace
