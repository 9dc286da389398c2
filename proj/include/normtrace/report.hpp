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
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "normtrace/repair.hpp"
#include "normtrace/specfile.hpp"

namespace normtrace {

/// Codes longer than this run closed-form operations only; matrix-backed
/// checks are reported as "skipped".
constexpr std::uint64_t kMatrixLengthLimit = 512;

struct ReportOptions {
    bool brute = false;
    bool witness = false;
    std::uint64_t budget = kDefaultBruteBudget;
    std::uint64_t seed = 1;
    std::uint64_t trials = 10;
};

// Every report is a JSON object with "command" and "ok"; "ok" is false only
// when an internal verification failed.
nlohmann::json report_points(const CodeSpec& spec);
nlohmann::json report_params(const CodeSpec& spec, const ReportOptions& opts);
nlohmann::json report_gen_matrix(const CodeSpec& spec);
nlohmann::json report_dual(const CodeSpec& spec);
nlohmann::json report_hull(const CodeSpec& spec);
nlohmann::json report_classify(const CodeSpec& spec);
nlohmann::json report_repair_sim(const CodeSpec& spec, const ReportOptions& opts);
nlohmann::json report_table1(const ReportOptions& opts);

nlohmann::json transcript_to_json(const RepairTranscript& t);

/// Human-readable rendering of any report above.
std::string render_text(const nlohmann::json& report);

/// Uniform message of length k from a seeded mt19937_64: each coordinate is
/// the first 64-bit draw below floor(2^64 / Q) * Q, reduced mod Q, where Q is
/// the field order.
class MessageSampler {
public:
    explicit MessageSampler(std::uint64_t seed);
    std::vector<FieldElement> sample(const Field& f, std::size_t k);

private:
    std::mt19937_64 rng_;
};

}  // namespace normtrace
