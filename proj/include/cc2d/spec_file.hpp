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

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cc2d/code2d.hpp"
#include "cc2d/gf.hpp"

namespace cc2d {

/// Code description as written in a spec file:
///
///   # comment
///   p = 11
///   s = 2
///   l = 5
///   alpha = 1
///   beta = -1
///   divisors = x+1, x-1, x-1, x-1, x+1
///
/// Optional keys: `m` (default 1) and `modulus` (a polynomial in x over F_p,
/// required when m > 1).
struct SpecFile {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::optional<std::string> modulus;
    std::size_t s = 0;
    std::size_t l = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::vector<std::string> divisors;
};

/// ParseError carrying the 1-based line number on malformed input.
SpecFile parse_spec_file(std::istream& in);
SpecFile read_spec_file(const std::string& path);

/// Field from p, m and an optional modulus in x over F_p.
Field make_field(std::uint64_t p, unsigned m, const std::optional<std::string>& modulus_text);

/// Integer literal as a field element: reduced mod p for prime fields, an
/// element representative for extensions; a negative value is negated.
FieldElement scalar_from_int(const Field& field, std::int64_t v);

/// Parses the divisor texts over `field`. Validation is left to validate_spec.
CodeParams to_params(const SpecFile& spec, const Field& field);

}  // namespace cc2d
