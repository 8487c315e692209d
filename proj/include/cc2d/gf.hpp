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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cc2d/error.hpp"

namespace cc2d {

/// Canonical representative of an element of F_q, in [0, q).
///
/// For a prime field this is the residue itself. For F_{p^m} the element
/// c_0 + c_1 t + ... + c_{m-1} t^{m-1} (t a root of the modulus) is stored as
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so integer order on representatives
/// is lexicographic order on (c_{m-1}, ..., c_0).
using Elem = std::uint32_t;

class FieldCtx;
class FieldElement;

/// Shared handle to an immutable field context. Two elements belong to the
/// same field iff their handles point at the same context.
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
    struct Token {};

public:
    /// Builds F_{p^m}. For m > 1 a monic irreducible modulus of degree m over
    /// F_p must be given (ascending coefficients, integers reduced mod p).
    static Field create(std::uint64_t p, unsigned m = 1,
                        std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

    FieldCtx(Token, std::uint32_t p, unsigned m, std::vector<Elem> modulus);

    std::uint32_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Ascending coefficients over F_p of the defining modulus; empty for m == 1.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept;
    /// Element with the given representative; throws InvalidArgument when v >= q.
    Elem from_repr(std::uint64_t v) const;

    Elem add(Elem a, Elem b) const noexcept {
        if (m_ == 1) {
            const Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_ext(a, b);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_ext(a);
    }
    Elem mul(Elem a, Elem b) const noexcept {
        if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Unique b with b^p = a.
    Elem pth_root(Elem a) const noexcept;

    /// Multiplicative order; throws ZeroElement for 0.
    std::uint64_t order(Elem a) const;

    /// Digits c_0..c_{m-1} of a over F_p.
    std::vector<Elem> digits(Elem a) const;

    /// Integer text of the representative, as used in polynomial syntax.
    std::string format(Elem a) const { return std::to_string(a); }

private:
    Elem add_ext(Elem a, Elem b) const noexcept;
    Elem neg_ext(Elem a) const noexcept;

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<Elem> modulus_;
    // m > 1 only: discrete log / antilog against a fixed primitive element.
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> pow_p_;
};

/// An element bundled with its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Elem value);
    static FieldElement from_int(const Field& field, std::int64_t v) {
        return FieldElement(field, field->from_int(v));
    }

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

    bool operator==(const FieldElement& o) const { return same_field(o) && value_ == o.value_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const { return field_->format(value_); }

private:
    bool same_field(const FieldElement& o) const noexcept { return field_.get() == o.field_.get(); }
    void require_same(const FieldElement& o) const;

    Field field_;
    Elem value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t mul_order(const FieldElement& a);

/// The element omega of order r*l with omega^l = beta, r = ord(beta).
/// Candidates are scanned in ascending representative order; the first hit wins.
FieldElement find_omega(const Field& field, std::uint64_t l, const FieldElement& beta);

}  // namespace cc2d
