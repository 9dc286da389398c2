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

#include "normtrace/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "normtrace/verify.hpp"

namespace normtrace {

using nlohmann::json;

namespace {

json pairs_json(const MonomialSet& m) {
    json out = json::array();
    for (auto mono : m)
        out.push_back({mono.a, mono.b});
    return out;
}

json values_json(std::span<const FieldElement> v) {
    json out = json::array();
    for (auto e : v)
        out.push_back(e.value);
    return out;
}

json header_json(const std::string& command, const CodeSpec& spec) {
    const CurveShape shape = curve_shape(spec);
    const FieldParams fp = field_params(spec);
    return json{{"command", command}, {"ok", true},  {"q", spec.q},       {"r", spec.r},
                {"u", spec.u},       {"p", fp.p},    {"s", fp.s},        {"n", shape.length()}};
}

bool matrix_sized(const CodeSpec& spec) { return curve_shape(spec).length() <= kMatrixLengthLimit; }

CurvePtr spec_curve(const CodeSpec& spec) { return make_curve(make_field(field_params(spec)), spec.u); }

}  // namespace

MessageSampler::MessageSampler(std::uint64_t seed) : rng_(seed) {}

std::vector<FieldElement> MessageSampler::sample(const Field& f, std::size_t k) {
    const std::uint64_t order = f.order();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / order * order;
    std::vector<FieldElement> out(k);
    for (auto& e : out) {
        std::uint64_t draw = rng_();
        while (draw >= limit)
            draw = rng_();
        e = FieldElement{static_cast<std::uint32_t>(draw % order)};
    }
    return out;
}

json report_points(const CodeSpec& spec) {
    json out = header_json("points", spec);
    const auto curve = spec_curve(spec);
    json modulus = json::array();
    for (auto c : curve->field().modulus())
        modulus.push_back(c);
    out["modulus"] = modulus;
    json pts = json::array();
    for (const auto& p : curve->points())
        pts.push_back({{"index", p.index}, {"x", p.x.value}, {"y", p.y.value}});
    out["points"] = pts;
    out["ok"] = curve->n() == curve->shape().length();
    return out;
}

json report_params(const CodeSpec& spec, const ReportOptions& opts) {
    json out = header_json("params", spec);
    const CurveShape shape = curve_shape(spec);
    const MonomialSet m = resolve_monomials(spec);
    out["k"] = m.size();
    out["monomials"] = pairs_json(m);
    if (m.empty()) {
        out["d"] = nullptr;
        out["singleton_gap"] = nullptr;
    } else {
        out["d"] = distance_formula(shape, m);
        out["singleton_gap"] = singleton_gap(shape, m);
    }

    if (!matrix_sized(spec)) {
        out["matrix_checks"] = "skipped";
        return out;
    }
    out["matrix_checks"] = "done";
    const EvaluationCode code(spec_curve(spec), m);
    const std::size_t rk = rank(code.field(), code.generator());
    out["rank"] = rk;
    bool ok = rk == m.size();

    if (opts.brute && !m.empty()) {
        const auto brute = distance_bruteforce(code, opts.budget);
        if (brute) {
            const bool same = *brute == out["d"].get<std::uint64_t>();
            out["brute"] = {{"status", same ? "match" : "mismatch"}, {"distance", *brute}};
            ok = ok && same;
        } else {
            out["brute"] = {{"status", "budget_exceeded"}, {"distance", nullptr}};
        }
    }
    if (opts.witness && !m.empty()) {
        const BivariatePoly w = witness_min_weight(code.curve(), m);
        const auto word = code.curve().eval_vector(w);
        bool in_span = !w.is_zero();
        for (const auto& [mono, c] : w.terms())
            in_span = in_span && m.contains(mono);
        const std::size_t weight = hamming_weight(word);
        const bool verified = in_span && weight == out["d"].get<std::uint64_t>();
        out["witness"] = {{"polynomial", to_string(w)}, {"weight", weight}, {"verified", verified},
                          {"codeword", values_json(word)}};
        ok = ok && verified;
    }
    out["ok"] = ok;
    return out;
}

json report_gen_matrix(const CodeSpec& spec) {
    json out = header_json("gen-matrix", spec);
    const MonomialSet m = resolve_monomials(spec);
    out["k"] = m.size();
    out["monomials"] = pairs_json(m);
    if (!matrix_sized(spec)) {
        out["matrix_checks"] = "skipped";
        return out;
    }
    out["matrix_checks"] = "done";
    const EvaluationCode code(spec_curve(spec), m);
    json rows = json::array();
    for (std::size_t i = 0; i < code.generator().rows(); ++i)
        rows.push_back(values_json(code.generator().row(i)));
    out["rows"] = rows;
    out["ok"] = rank(code.field(), code.generator()) == m.size();
    return out;
}

json report_dual(const CodeSpec& spec) {
    json out = header_json("dual", spec);
    const MonomialSet m = resolve_monomials(spec);
    const MonomialSet c = complement(m);
    out["k"] = m.size();
    out["complement"] = pairs_json(c);
    out["complement_size"] = c.size();
    if (!matrix_sized(spec)) {
        out["matrix_checks"] = "skipped";
        return out;
    }
    out["matrix_checks"] = "done";
    const EvaluationCode code(spec_curve(spec), m);
    const DualResult d = dual_code(code);
    out["beta"] = values_json(d.scaling.beta);
    out["orthogonal"] = d.orthogonal;
    out["dimensions_add_up"] = d.dimensions_add_up;
    const bool kernel = dual_matches_kernel(code, d);
    out["kernel_match"] = kernel;
    out["ok"] = d.verified() && kernel;
    return out;
}

json report_hull(const CodeSpec& spec) {
    json out = header_json("hull", spec);
    const MonomialSet m = resolve_monomials(spec);
    const MonomialSet c = complement(m);
    const MonomialSet both = set_intersection(m, c);
    out["k"] = m.size();
    out["complement"] = pairs_json(c);
    out["intersection"] = pairs_json(both);
    out["hull_dimension"] = both.size();
    const auto field = make_field(field_params(spec));
    if (!sqrt_in_field(*field, spec.u))
        throw std::domain_error("u = " + std::to_string(spec.u) + " is not a square in F_" +
                                std::to_string(field->order()) + "; the hull scaling does not exist");
    if (!matrix_sized(spec)) {
        out["matrix_checks"] = "skipped";
        return out;
    }
    out["matrix_checks"] = "done";
    const EvaluationCode code(make_curve(field, spec.u), m);
    const HullResult h = hull(code);
    out["lambda"] = values_json(*h.scaling.lambda);
    out["algebraic_dimension"] = h.algebraic_dimension;
    out["verified"] = h.verified;
    out["ok"] = h.verified && h.algebraic_dimension == both.size();
    return out;
}

json report_classify(const CodeSpec& spec) {
    json out = header_json("classify", spec);
    const MonomialSet m = resolve_monomials(spec);
    const MonomialSet c = complement(m);
    out["k"] = m.size();
    out["hull_dimension"] = set_intersection(m, c).size();
    if (!matrix_sized(spec)) {
        // set-level classification only
        DualityClass kind = DualityClass::none;
        if (m == c)
            kind = DualityClass::self_dual;
        else if (is_subset(m, c))
            kind = DualityClass::self_orthogonal;
        else if (set_intersection(m, c).empty())
            kind = DualityClass::lcd_after_scaling;
        out["classification"] = to_string(kind);
        out["confirmed"] = nullptr;
        out["matrix_checks"] = "skipped";
        return out;
    }
    out["matrix_checks"] = "done";
    const Classification cl = classify_duality(EvaluationCode(spec_curve(spec), m));
    out["classification"] = to_string(cl.kind);
    if (cl.confirmed)
        out["confirmed"] = *cl.confirmed;
    else
        out["confirmed"] = nullptr;
    out["ok"] = cl.confirmed.value_or(true);
    return out;
}

json transcript_to_json(const RepairTranscript& t) {
    json downloads = json::array();
    for (const auto& d : t.downloads)
        downloads.push_back(
            {{"helper", d.helper}, {"kind", to_string(d.kind)}, {"subsymbols", values_json(d.subsymbols)}});
    return json{{"erased", t.erased},         {"gamma_size", t.gamma_size}, {"gamma_set", t.gamma_set},
                {"outside_set", t.outside_set}, {"downloads", downloads},   {"recovered", t.recovered.value},
                {"bandwidth", t.bandwidth}};
}

json report_repair_sim(const CodeSpec& spec, const ReportOptions& opts) {
    json out = header_json("repair-sim", spec);
    const CurveShape shape = curve_shape(spec);
    const MonomialSet m = resolve_monomials(spec);
    out["k"] = m.size();
    out["trials"] = opts.trials;
    out["seed"] = opts.seed;
    out["bound"] = bandwidth_bound(shape);
    out["baseline"] = (shape.length() - 1) * spec.r;
    for (auto mono : m)
        if (mono.a >= shape.max_a())
            throw std::invalid_argument("monomial x^" + std::to_string(mono.a) + " y^" + std::to_string(mono.b) +
                                        " has a = (q-1)u; repair needs every a <= " + std::to_string(shape.max_a() - 1));
    if (opts.trials == 0)
        return out;
    if (!matrix_sized(spec)) {
        out["matrix_checks"] = "skipped";
        return out;
    }

    const EvaluationCode code(spec_curve(spec), m);
    const RepairContext ctx = make_repair_context(code);
    const Field& f = code.field();
    MessageSampler sampler(opts.seed);
    std::size_t runs = 0, successes = 0, max_bw = 0, total_bw = 0;
    bool subfield = true;
    json sample;
    for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
        const auto word = code.encode(sampler.sample(f, code.k()));
        for (std::size_t star = 0; star < code.n(); ++star) {
            auto damaged = word;
            damaged[star] = FieldElement{};
            const RepairTranscript t = repair(ctx, damaged, star);
            ++runs;
            if (t.recovered == word[star])
                ++successes;
            max_bw = std::max(max_bw, t.bandwidth);
            total_bw += t.bandwidth;
            for (const auto& d : t.downloads)
                for (auto v : d.subsymbols)
                    subfield = subfield && f.in_subfield(v);
            if (trial == 0 && star == 0)
                sample = transcript_to_json(t);
        }
    }
    out["matrix_checks"] = "done";
    out["runs"] = runs;
    out["successes"] = successes;
    out["success_rate"] = runs ? static_cast<double>(successes) / static_cast<double>(runs) : 1.0;
    out["max_bandwidth"] = max_bw;
    out["mean_bandwidth"] = runs ? static_cast<double>(total_bw) / static_cast<double>(runs) : 0.0;
    out["subsymbols_in_subfield"] = subfield;
    out["sample_transcript"] = sample;
    out["ok"] = successes == runs && max_bw <= out["bound"].get<std::uint64_t>() && subfield;
    return out;
}

json report_table1(const ReportOptions& opts) {
    const auto curve = make_curve(make_field(FieldParams{3, 1, 2}), 2);
    json rows = json::array();
    bool ok = true;
    for (const auto& row : catalog::length15_rows()) {
        const std::uint64_t d = distance_formula(curve->shape(), row.monomials);
        json entry{{"monomials", pairs_json(row.monomials)},
                   {"dimension", row.monomials.size()},
                   {"distance", d},
                   {"expected_dimension", row.dim},
                   {"expected_distance", row.distance}};
        bool row_ok = row.monomials.size() == row.dim && d == row.distance;
        if (opts.brute) {
            const auto brute = distance_bruteforce(EvaluationCode(curve, row.monomials), opts.budget);
            entry["brute"] = brute ? json(*brute) : json(nullptr);
            row_ok = row_ok && (!brute || *brute == d);
        }
        entry["match"] = row_ok;
        ok = ok && row_ok;
        rows.push_back(entry);
    }
    return json{{"command", "table1"}, {"ok", ok}, {"q", 3}, {"r", 2}, {"u", 2}, {"n", curve->n()}, {"rows", rows}};
}

namespace {

std::string scalar(const json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

std::string pair_list(const json& pairs) {
    std::string s;
    for (const auto& p : pairs)
        s += (s.empty() ? "" : " ") + std::string("(") + p[0].dump() + "," + p[1].dump() + ")";
    return s;
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    const std::string cmd = report.value("command", "");
    if (report.contains("q") && cmd != "table1")
        os << "q=" << report["q"] << " r=" << report["r"] << " u=" << report["u"] << " n=" << report["n"] << '\n';

    if (cmd == "points") {
        for (const auto& p : report["points"])
            os << p["index"] << ": x=" << p["x"] << " y=" << p["y"] << '\n';
    } else if (cmd == "params") {
        os << "n=" << report["n"] << " k=" << report["k"] << " d=" << scalar(report["d"])
           << " singleton_gap=" << scalar(report["singleton_gap"]) << '\n';
        if (report.contains("brute"))
            os << "brute: " << scalar(report["brute"]["status"]) << " d=" << scalar(report["brute"]["distance"]) << '\n';
        if (report.contains("witness"))
            os << "witness: " << scalar(report["witness"]["polynomial"]) << " weight=" << report["witness"]["weight"]
               << (report["witness"]["verified"].get<bool>() ? " (verified)" : " (NOT verified)") << '\n';
    } else if (cmd == "gen-matrix") {
        os << "k=" << report["k"] << '\n';
        if (report.contains("rows"))
            for (const auto& row : report["rows"]) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    os << (j ? " " : "") << row[j];
                os << '\n';
            }
    } else if (cmd == "dual") {
        os << "complement (" << report["complement_size"] << "): " << pair_list(report["complement"]) << '\n';
        if (report.contains("beta")) {
            os << "beta:";
            for (const auto& b : report["beta"])
                os << ' ' << b;
            os << "\northogonal=" << report["orthogonal"] << " dimensions_add_up=" << report["dimensions_add_up"]
               << " kernel_match=" << report["kernel_match"] << '\n';
        }
    } else if (cmd == "hull") {
        os << "hull dimension " << report["hull_dimension"] << ": " << pair_list(report["intersection"]) << '\n';
        if (report.contains("lambda")) {
            os << "lambda:";
            for (const auto& l : report["lambda"])
                os << ' ' << l;
            os << "\nalgebraic_dimension=" << report["algebraic_dimension"] << " verified=" << report["verified"] << '\n';
        }
    } else if (cmd == "classify") {
        os << scalar(report["classification"]) << ", k = " << report["k"] << ", hull dimension "
           << report["hull_dimension"] << ", confirmed=" << scalar(report["confirmed"]) << '\n';
    } else if (cmd == "repair-sim") {
        os << "bound=" << report["bound"] << " baseline=" << report["baseline"] << " trials=" << report["trials"]
           << " seed=" << report["seed"] << '\n';
        if (report.contains("runs"))
            os << "runs=" << report["runs"] << " success_rate=" << report["success_rate"]
               << " max_bandwidth=" << report["max_bandwidth"] << " mean_bandwidth=" << report["mean_bandwidth"] << '\n';
    } else if (cmd == "table1") {
        os << "dim  d  expected  match\n";
        for (const auto& row : report["rows"]) {
            os << row["dimension"] << "  " << row["distance"] << "  (" << row["expected_dimension"] << ", "
               << row["expected_distance"] << ")";
            if (row.contains("brute"))
                os << "  brute=" << scalar(row["brute"]);
            os << "  " << (row["match"].get<bool>() ? "ok" : "MISMATCH") << '\n';
        }
    }
    if (report.value("matrix_checks", "") == "skipped")
        os << "matrix checks skipped (n > " << kMatrixLengthLimit << ")\n";
    os << (report.value("ok", false) ? "ok" : "VERIFICATION FAILED") << '\n';
    return os.str();
}

}  // namespace normtrace
