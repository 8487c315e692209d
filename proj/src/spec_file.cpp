/*
 * Copyright 2026 The cc2d Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cc2d/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "cc2d/error.hpp"

namespace cc2d {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

Error parse_error(std::size_t line, const std::string& why) {
    return Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why, line);
}

template <typename T>
T parse_int(const std::string& value, std::size_t line, const std::string& key) {
    T out{};
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw parse_error(line, "'" + key + "' expects an integer, got '" + value + "'");
    return out;
}

}  // namespace

SpecFile parse_spec_file(std::istream& in) {
    SpecFile spec;
    std::set<std::string> seen;
    std::size_t divisors_line = 0;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        const auto hash = raw.find('#');
        const std::string text = trim(std::string_view(raw).substr(0, hash));
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw parse_error(line, "expected 'key = value'");
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        if (value.empty()) throw parse_error(line, "empty value for '" + key + "'");
        if (!seen.insert(key).second) throw parse_error(line, "duplicate key '" + key + "'");

        if (key == "p") {
            spec.p = parse_int<std::uint64_t>(value, line, key);
        } else if (key == "m") {
            spec.m = parse_int<unsigned>(value, line, key);
        } else if (key == "modulus") {
            spec.modulus = value;
        } else if (key == "s") {
            spec.s = parse_int<std::size_t>(value, line, key);
        } else if (key == "l") {
            spec.l = parse_int<std::size_t>(value, line, key);
        } else if (key == "alpha") {
            spec.alpha = parse_int<std::int64_t>(value, line, key);
        } else if (key == "beta") {
            spec.beta = parse_int<std::int64_t>(value, line, key);
        } else if (key == "divisors") {
            divisors_line = line;
            std::size_t start = 0;
            for (;;) {
                const auto comma = value.find(',', start);
                const std::string item = trim(std::string_view(value).substr(start, comma - start));
                if (item.empty()) throw parse_error(line, "empty divisor in list");
                spec.divisors.push_back(item);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else {
            throw parse_error(line, "unknown key '" + key + "'");
        }
    }
    for (const char* key : {"p", "s", "l", "alpha", "beta", "divisors"})
        if (!seen.count(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
    if (spec.s == 0 || spec.l == 0) throw Error(Errc::ParseError, "s and l must be positive");
    if (spec.divisors.size() != spec.l)
        throw parse_error(divisors_line, "expected " + std::to_string(spec.l) + " divisors, got " + std::to_string(spec.divisors.size()));
    return spec;
}

SpecFile read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open spec file '" + path + "'");
    return parse_spec_file(in);
}

Field make_field(std::uint64_t p, unsigned m, const std::optional<std::string>& modulus_text) {
    if (m <= 1 || !modulus_text) return FieldCtx::create(p, m);
    const Field prime = FieldCtx::create(p, 1);
    const Poly mod = Poly::parse(prime, *modulus_text, 'x');
    std::vector<std::int64_t> coeffs(mod.coeffs().begin(), mod.coeffs().end());
    return FieldCtx::create(p, m, coeffs);
}

FieldElement scalar_from_int(const Field& field, std::int64_t v) {
    if (field->m() == 1) return FieldElement::from_int(field, v);
    const std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    const Elem e = field->from_repr(mag);
    return FieldElement(field, v < 0 ? field->neg(e) : e);
}

CodeParams to_params(const SpecFile& spec, const Field& field) {
    std::vector<Poly> divisors;
    for (const auto& text : spec.divisors) divisors.push_back(Poly::parse(field, text, 'x'));
    return CodeParams{field, spec.s, spec.l, scalar_from_int(field, spec.alpha), scalar_from_int(field, spec.beta),
                      std::move(divisors)};
}

}  // namespace cc2d
