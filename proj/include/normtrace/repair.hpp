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

#include "normtrace/code.hpp"

namespace normtrace {

/// Single-erasure trace repair for ev(M) with M inside Δ(x^{(q-1)u}, y^{q^{r-1}}).
///
/// To repair position P* = (α*, β*) the repairer contacts every other node:
///  - nodes sharing the y-coordinate β* (the set Γ) send the r subsymbols
///    Tr(β_P z_i f(P)), i = 1..r;
///  - every other node sends the single subsymbol Tr(β_P f(P) / (β - β*)).
/// Since β · ev(p_i) with p_i(y) = Tr(z_i (y - β*)) / (y - β*) lies in the
/// dual code, these determine Tr(z_i β_{P*} f(P*)) for every i, and the
/// dual basis turns those traces back into f(P*).
struct RepairContext {
    EvaluationCode code;
    std::vector<FieldElement> basis;   // z_1..z_r
    std::vector<FieldElement> dual;    // z'_1..z'_r with Tr(z_i z'_j) = δ_ij
    std::vector<FieldElement> beta;    // column multipliers of the dual code
    Matrix parity;                     // beta · G_{M^∁}
};

/// Throws std::invalid_argument naming the first monomial with a = (q-1)u, or
/// when a supplied basis is not an F_q-basis. The default basis is
/// {1, g, ..., g^{r-1}} for the field generator g.
RepairContext make_repair_context(const EvaluationCode& code,
                                  std::optional<std::vector<FieldElement>> basis = std::nullopt);

enum class DownloadKind { full_traces, single_trace };

std::string_view to_string(DownloadKind k);

struct HelperDownload {
    std::size_t helper = 0;                  // index of the contacted point
    DownloadKind kind = DownloadKind::single_trace;
    std::vector<FieldElement> subsymbols;    // elements of F_q
};

struct RepairTranscript {
    std::size_t erased = 0;
    std::vector<std::size_t> gamma_set;      // Γ \ {P*}
    std::vector<std::size_t> outside_set;    // X_u \ Γ
    std::vector<HelperDownload> downloads;
    FieldElement recovered;
    std::size_t bandwidth = 0;               // total subsymbols downloaded
    std::size_t gamma_size = 0;              // |Γ|, including P*
};

/// What a single helper sends, computed from its own symbol only.
HelperDownload helper_response(const RepairContext& ctx, std::size_t helper, FieldElement symbol, std::size_t erased);

/// Repairs position `star` of `word`; the value currently stored there is
/// ignored. Throws std::out_of_range for a bad index and std::invalid_argument
/// when no value at `star` makes `word` a codeword.
RepairTranscript repair(const RepairContext& ctx, std::span<const FieldElement> word, std::size_t star);

/// |X_u| - 1 + (u - 1)(r - 1).
std::uint64_t bandwidth_bound(const CurveShape& shape);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct DimensionCalcs {
    std::uint64_t k_ev = 0;       // (q-1) u q^{r-1}
    std::uint64_t genus = 0;      // (u-1)(q^{r-1}-1)/2
    std::int64_t k_ag = 0;        // n - q(genus - 1) + 1
    Rational rate_bound;          // 1 - 1/((q-1)u + 1), reduced
};

DimensionCalcs dimension_calcs(const CurveShape& shape);

}  // namespace normtrace
