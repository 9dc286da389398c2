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

#include "normtrace/specfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace normtrace {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw SpecError("line " + std::to_string(line) + ": expected a nonnegative integer, got '" + std::string(s) + "'");
    return v;
}

std::uint64_t parse_q(std::string_view s, std::size_t line) {
    const auto caret = s.find('^');
    if (caret == std::string_view::npos)
        return parse_uint(s, line);
    const std::uint64_t p = parse_uint(s.substr(0, caret), line);
    const std::uint64_t e = parse_uint(s.substr(caret + 1), line);
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 20))
            throw SpecError("line " + std::to_string(line) + ": q is too large");
    }
    return q;
}

Family parse_family(std::string_view s, std::size_t line) {
    const auto colon = s.find(':');
    const std::string_view kind = s.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
    if (kind == "full" && colon == std::string_view::npos)
        return FamilyFull{};
    if (kind == "degree")
        return FamilyDegree{parse_uint(arg, line)};
    if (kind == "onepoint")
        return FamilyOnePoint{parse_uint(arg, line)};
    if (kind == "box") {
        const auto x = arg.find('x');
        if (x == std::string_view::npos)
            throw SpecError("line " + std::to_string(line) + ": box family expects box:AxB");
        return FamilyBox{parse_uint(arg.substr(0, x), line), parse_uint(arg.substr(x + 1), line)};
    }
    throw SpecError("line " + std::to_string(line) + ": unknown family '" + std::string(s) + "'");
}

}  // namespace

CodeSpec parse_spec(std::string_view text) {
    CodeSpec spec;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;
        const auto tokens = split_ws(line);

        if (!have_header) {
            bool got_q = false, got_r = false, got_u = false;
            for (auto tok : tokens) {
                const auto eq = tok.find('=');
                if (eq == std::string_view::npos)
                    throw SpecError("line " + std::to_string(line_no) + ": header expects q=.. r=.. u=..");
                const auto key = tok.substr(0, eq);
                const auto val = tok.substr(eq + 1);
                if (key == "q") {
                    spec.q = parse_q(val, line_no);
                    got_q = true;
                } else if (key == "r") {
                    spec.r = static_cast<std::uint32_t>(parse_uint(val, line_no));
                    got_r = true;
                } else if (key == "u") {
                    spec.u = parse_uint(val, line_no);
                    got_u = true;
                } else {
                    throw SpecError("line " + std::to_string(line_no) + ": unknown header key '" + std::string(key) + "'");
                }
            }
            if (!(got_q && got_r && got_u))
                throw SpecError("line " + std::to_string(line_no) + ": header must set q, r and u");
            have_header = true;
            continue;
        }

        if (tokens[0] == "family") {
            if (tokens.size() != 2)
                throw SpecError("line " + std::to_string(line_no) + ": family line expects one descriptor");
            spec.families.push_back(parse_family(tokens[1], line_no));
        } else if (tokens.size() == 2) {
            const auto a = parse_uint(tokens[0], line_no);
            const auto b = parse_uint(tokens[1], line_no);
            spec.pairs.push_back(Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        } else {
            throw SpecError("line " + std::to_string(line_no) + ": expected 'a b' or 'family <descriptor>'");
        }
    }
    if (!have_header)
        throw SpecError("missing header line q=.. r=.. u=..");

    // validate the header now so every command reports it the same way
    try {
        (void)field_params(spec);
        (void)curve_shape(spec);
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("invalid header: ") + e.what());
    }
    return spec;
}

CodeSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot open spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string to_string(const Family& f) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FamilyDegree>)
                return "degree:" + std::to_string(v.t);
            else if constexpr (std::is_same_v<T, FamilyBox>)
                return "box:" + std::to_string(v.a) + "x" + std::to_string(v.b);
            else if constexpr (std::is_same_v<T, FamilyOnePoint>)
                return "onepoint:" + std::to_string(v.s);
            else
                return "full";
        },
        f);
}

std::string serialize_spec(const CodeSpec& spec) {
    std::ostringstream os;
    os << "q=" << spec.q << " r=" << spec.r << " u=" << spec.u << '\n';
    for (const auto& f : spec.families)
        os << "family " << to_string(f) << '\n';
    for (auto m : spec.pairs)
        os << m.a << ' ' << m.b << '\n';
    return os.str();
}

FieldParams field_params(const CodeSpec& spec) {
    std::uint32_t p = 0, s = 0;
    if (!split_prime_power(spec.q, p, s))
        throw std::invalid_argument("q = " + std::to_string(spec.q) + " is not a prime power");
    if (spec.r < 2)
        throw std::invalid_argument("r must be at least 2");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < spec.r; ++i) {
        order *= spec.q;
        if (order > (1u << 20))
            throw std::invalid_argument("q^r exceeds 2^20");
    }
    return FieldParams{p, s, spec.r};
}

CurveShape curve_shape(const CodeSpec& spec) { return CurveShape(spec.q, spec.r, spec.u); }

MonomialSet resolve_monomials(const CodeSpec& spec) {
    const CurveShape shape = curve_shape(spec);
    MonomialSet out(shape);
    for (const auto& fam : spec.families) {
        const MonomialSet part = std::visit(
            [&](const auto& v) -> MonomialSet {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, FamilyDegree>)
                    return family_degree(shape, v.t);
                else if constexpr (std::is_same_v<T, FamilyBox>)
                    return family_box(shape, v.a, v.b);
                else if constexpr (std::is_same_v<T, FamilyOnePoint>)
                    return family_onepoint(shape, v.s);
                else
                    return footprint_set(shape);
            },
            fam);
        out = set_union(out, part);
    }
    for (auto m : spec.pairs) {
        if (m.a > shape.max_a() || m.b > shape.max_b())
            throw SpecError("monomial x^" + std::to_string(m.a) + " y^" + std::to_string(m.b) +
                            " lies outside the footprint a <= " + std::to_string(shape.max_a()) +
                            ", b <= " + std::to_string(shape.max_b()));
        out.insert(m);
    }
    if (!out.is_decreasing())
        throw SpecError("monomial set is not closed under divisibility");
    return out;
}

}  // namespace normtrace
