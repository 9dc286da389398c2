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

// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "normtrace/verify.hpp"

int main() {
    bool all = true;
    normtrace::run_all_criteria([&](const normtrace::CriterionResult& r) {
        all = all && r.pass();
        std::printf("%s %2d  %-58s %7.2f s (limit %.0f s)\n", r.pass() ? "PASS" : "FAIL", r.number, r.title.c_str(),
                    r.seconds, r.limit_seconds);
        for (const auto& c : r.claims)
            if (!c.pass)
                std::printf("        failed: %s%s%s\n", c.description.c_str(), c.detail.empty() ? "" : " -- ",
                            c.detail.c_str());
        std::fflush(stdout);
    });
    return all ? 0 : 1;
}
