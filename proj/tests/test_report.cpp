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

#include <doctest.h>

#include "normtrace/report.hpp"

using namespace normtrace;

TEST_CASE("message sampler is seeded and in range") {
    const Field f({3, 1, 2});
    MessageSampler a(5), b(5), c(6);
    const auto xa = a.sample(f, 50);
    CHECK(xa == b.sample(f, 50));
    CHECK(xa != c.sample(f, 50));
    for (auto e : xa)
        CHECK(e.value < f.order());
    // first draws of mt19937_64 seeded with 5, reduced mod 9
    std::mt19937_64 rng(5);
    MessageSampler d(5);
    const auto xd = d.sample(f, 3);
    for (auto e : xd)
        CHECK(e.value == rng() % 9);
}

TEST_CASE("params report") {
    const auto r = report_params(parse_spec("q=3 r=2 u=4\nfamily degree:0\n"), ReportOptions{});
    CHECK(r["ok"] == true);
    CHECK(r["k"] == 1);
    CHECK(r["d"] == 27);
    const auto big = report_params(parse_spec("q=3 r=4 u=40\nfamily onepoint:1539\n"), ReportOptions{});
    CHECK(big["matrix_checks"] == "skipped");
    CHECK(big["k"] == 1033);
    ReportOptions opts;
    opts.brute = true;
    opts.witness = true;
    const auto checked = report_params(parse_spec("q=2 r=2 u=3\nfamily box:3x2\n"), opts);
    CHECK(checked["brute"]["status"] == "match");
    CHECK(checked["witness"]["verified"] == true);
    CHECK(checked["ok"] == true);
}

TEST_CASE("repair-sim with no trials reports only the bounds") {
    ReportOptions opts;
    opts.trials = 0;
    const auto r = report_repair_sim(parse_spec("q=2 r=4 u=3\nfamily box:3x3\n"), opts);
    CHECK(r["bound"] == 37);
    CHECK(r["baseline"] == 124);
    CHECK_FALSE(r.contains("runs"));
    CHECK_THROWS_AS(report_repair_sim(parse_spec("q=2 r=2 u=3\nfamily full\n"), opts), std::invalid_argument);
}

TEST_CASE("repair-sim is deterministic for a seed") {
    ReportOptions opts;
    opts.trials = 3;
    opts.seed = 77;
    const auto spec = parse_spec("q=2 r=2 u=3\nfamily box:3x2\n");
    const auto a = report_repair_sim(spec, opts);
    CHECK(a == report_repair_sim(spec, opts));
    CHECK(a["success_rate"] == 1.0);
    CHECK(a["max_bandwidth"] == 9);
    CHECK(a["baseline"] == 14);
}

TEST_CASE("table report and text rendering") {
    const auto t = report_table1(ReportOptions{});
    CHECK(t["ok"] == true);
    CHECK(t["rows"].size() == 11);
    CHECK(render_text(t).find("MISMATCH") == std::string::npos);
    const auto cls = report_classify(parse_spec("q=2 r=4 u=5\nfamily box:6x4\n"));
    CHECK(render_text(cls).find("self-dual, k = 24") != std::string::npos);
    CHECK_THROWS_AS(report_hull(parse_spec("q=7 r=3 u=3\nfamily degree:1\n")), std::domain_error);
}
