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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cc2d {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    MissingModulus,
    FieldMismatch,
    ZeroElement,
    CongruenceFailed,
    NotFound,
    DivisionByZeroPoly,
    ZeroPolynomial,
    ZeroConstant,
    IndexOutOfRange,
    InternalDisagreement,
    BetaNotPlusMinusOne,
    AlphaNotPlusMinusOne,
    DivisorCheckFailed,
    ZeroAlphaBeta,
    MismatchedSystem,
    PreconditionUnmet,
    BudgetExceeded,
    ParseError,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by bad user input (CLI exit code 2); false for
/// internal failures (exit code 1).
bool is_user_error(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(what), code_(code), index_(index) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }
    /// Offending index for DivisorCheckFailed, IndexOutOfRange, ParseError (line number).
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    Errc code_;
    std::optional<std::size_t> index_;
};

}  // namespace cc2d
