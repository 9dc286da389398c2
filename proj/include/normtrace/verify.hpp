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

#include <functional>
#include <string>
#include <vector>

#include "normtrace/monset.hpp"

namespace normtrace {

// Worked examples used by the reproduction suite and the fixture files.
namespace catalog {

/// Ten-monomial staircase over F_9 (q=3, r=2, u=4): a [27, 10, 15] code.
MonomialSet f9_staircase10();
/// Twelve-monomial staircase over F_16 (q=2, r=4, u=3): a [32, 12, 12] code.
MonomialSet f16_staircase12();
/// Total degree <= 4 on q=3, r=2, u=4 (12 monomials, self-orthogonal).
MonomialSet f9_degree4();
/// a < 6, b < 4 on q=2, r=4, u=5 (24 monomials, self-dual).
MonomialSet f16_selfdual_box();
/// Δ(x^3, y^2) on the Hermitian curve over F_4 (q=2, r=2, u=3).
MonomialSet f4_hermitian_repairable();

struct LengthFifteenRow {
    MonomialSet monomials;
    std::size_t dim = 0;
    std::uint64_t distance = 0;
};
/// The eleven staircase codes of length 15 (q=3, r=2, u=2) with their
/// published dimension and minimum distance.
std::vector<LengthFifteenRow> length15_rows();

/// One-point set A_s on q=3, r=2, u=4 extended by one monomial.
MonomialSet onepoint_augmented_f9(std::uint64_t s);

/// The q=3, r=4, u=40 one-point set A_1539 and its 14-monomial extension.
MonomialSet onepoint_f81_1539();
MonomialSet onepoint_f81_1539_augmented();

}  // namespace catalog

struct Claim {
    std::string description;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    std::vector<Claim> claims;
    double seconds = 0;
    double limit_seconds = 0;

    bool pass() const;
};

/// Runs acceptance criterion `number` (1..13).
CriterionResult run_criterion(int number);
constexpr int kCriterionCount = 13;

/// Runs every criterion in order, invoking `on_done` after each one.
std::vector<CriterionResult> run_all_criteria(const std::function<void(const CriterionResult&)>& on_done = {});

}  // namespace normtrace
