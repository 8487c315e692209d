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
#include <optional>
#include <string>
#include <vector>

#include "cc2d/code2d.hpp"
#include "cc2d/codeops.hpp"

namespace cc2d {

/// One line of output describing a code (or its dual).
struct CodeRecord {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned m = 1;
    std::size_t s = 0;
    std::size_t l = 0;
    Elem alpha = 0;
    Elem beta = 0;
    std::vector<std::string> divisors;
    std::string view = "C1";  // C1 or C2
    std::string role = "code";  // code or dual
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<Distance> d;  // absent when not computed
    std::optional<bool> mds;
    std::optional<bool> near_mds;
    std::optional<bool> self_dual;
    std::optional<bool> isodual_consistent;  // equal weight enumerators of C and its dual
    bool theorem5_blocked = false;           // self-duality ruled out by the gcd(s, q) screen

    bool operator==(const CodeRecord&) const = default;
};

/// Single-line JSON object with the field names above. d is null, "inf" or an integer.
std::string to_json_line(const CodeRecord& r);
/// Inverse of to_json_line; ParseError on malformed input.
CodeRecord from_json_line(const std::string& line);

/// Fixed-width table with a header row.
std::string format_table(const std::vector<CodeRecord>& records);

/// Descriptions of violated flag implications; empty when consistent.
std::vector<std::string> consistency_problems(const CodeRecord& r);

struct AnalysisOptions {
    bool dual = false;
    bool mindist = false;
    bool selfdual = false;
    View view = View::C1;
    EnumOptions enumeration{};
};

struct Analysis {
    CodeRecord code;
    std::optional<CodeRecord> dual;
    std::optional<SelfDualReport> report;  // present when the divisor criterion applied
    bool dual_from_nullspace = false;      // beta or alpha outside {1, -1}
};

/// Builds the requested quantities for one code. When the divisor-based dual
/// is unavailable the nullspace dual is used and checked for closure under
/// the inverse shifts.
Analysis analyze(const CodeSpec& spec, const IdempotentSystem& sys, const AnalysisOptions& opts);

/// Divisor texts in x, as stored in records.
std::vector<std::string> divisor_texts(const CodeSpec& spec);

}  // namespace cc2d
