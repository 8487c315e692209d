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

#include "cc2d/error.hpp"

namespace cc2d {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::MissingModulus: return "MissingModulus";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::CongruenceFailed: return "CongruenceFailed";
        case Errc::NotFound: return "NotFound";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroConstant: return "ZeroConstant";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InternalDisagreement: return "InternalDisagreement";
        case Errc::BetaNotPlusMinusOne: return "BetaNotPlusMinusOne";
        case Errc::AlphaNotPlusMinusOne: return "AlphaNotPlusMinusOne";
        case Errc::DivisorCheckFailed: return "DivisorCheckFailed";
        case Errc::ZeroAlphaBeta: return "ZeroAlphaBeta";
        case Errc::MismatchedSystem: return "MismatchedSystem";
        case Errc::PreconditionUnmet: return "PreconditionUnmet";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_user_error(Errc code) noexcept {
    switch (code) {
        case Errc::InternalDisagreement:
        case Errc::NotFound:
        case Errc::FieldMismatch:
        case Errc::MismatchedSystem:
            return false;
        default:
            return true;
    }
}

}  // namespace cc2d
