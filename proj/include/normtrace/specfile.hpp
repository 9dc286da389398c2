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
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "normtrace/curve.hpp"
#include "normtrace/monset.hpp"

namespace normtrace {

/// Line-oriented code description:
///
///     # comment
///     q=9 r=2 u=4
///     family degree:4        (degree:t | box:AxB | onepoint:s | full)
///     7 1                    (explicit exponent pair "a b")
///
/// q may be written as an integer or as p^s. The monomial set is the union of
/// all family lines and explicit pairs.
struct FamilyDegree { std::uint64_t t = 0; friend bool operator==(const FamilyDegree&, const FamilyDegree&) = default; };
struct FamilyBox { std::uint64_t a = 0, b = 0; friend bool operator==(const FamilyBox&, const FamilyBox&) = default; };
struct FamilyOnePoint { std::uint64_t s = 0; friend bool operator==(const FamilyOnePoint&, const FamilyOnePoint&) = default; };
struct FamilyFull { friend bool operator==(const FamilyFull&, const FamilyFull&) = default; };

using Family = std::variant<FamilyDegree, FamilyBox, FamilyOnePoint, FamilyFull>;

struct CodeSpec {
    std::uint64_t q = 2;
    std::uint32_t r = 2;
    std::uint64_t u = 1;
    std::vector<Family> families;
    std::vector<Monomial> pairs;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// Parse or validation failure; `what()` names the offending line or invariant.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CodeSpec parse_spec(std::string_view text);
CodeSpec load_spec(const std::string& path);
std::string serialize_spec(const CodeSpec& spec);

FieldParams field_params(const CodeSpec& spec);
CurveShape curve_shape(const CodeSpec& spec);

/// Monomial set described by the spec. Throws SpecError when a pair escapes
/// the footprint or the set is not closed under divisibility.
MonomialSet resolve_monomials(const CodeSpec& spec);

std::string to_string(const Family& f);

}  // namespace normtrace
