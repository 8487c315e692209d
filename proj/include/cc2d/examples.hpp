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
#include <string>
#include <vector>

#include "cc2d/codeops.hpp"
#include "cc2d/spec_file.hpp"

namespace cc2d {

/// The six worked codes shipped with the tool, numbered 1..6.
struct ReferenceCode {
    int number;
    SpecFile spec;
};

const std::vector<ReferenceCode>& reference_codes();

struct Claim {
    int example;
    std::string text;
    bool pass;
    std::string detail;  // computed value or error message
};

/// Rebuilds reference code `number` and checks every published property of
/// it. Distances are found by exhaustive codeword enumeration.
std::vector<Claim> check_reference_code(int number, const EnumOptions& opts = {});

}  // namespace cc2d
