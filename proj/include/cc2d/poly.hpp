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
#include <string_view>
#include <utility>
#include <vector>

#include "cc2d/gf.hpp"

namespace cc2d {

/// Dense univariate polynomial over F_q. Coefficient i belongs to x^i; the
/// zero polynomial has no coefficients and otherwise the leading one is nonzero.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(const Field& field, Elem c) { return Poly(field, {c}); }
    static Poly monomial(const Field& field, std::size_t degree, Elem c = 1);
    /// x - root.
    static Poly linear(const Field& field, Elem root);
    /// x^n - c.
    static Poly binomial(const Field& field, std::size_t n, Elem c);
    /// Coefficients given as integers, reduced into the prime subfield.
    static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

    /// Parses text such as `4y^4+8y^3-5y^2+10y+9`. Integer coefficients are
    /// element representatives; negative values denote negation.
    static Poly parse(const Field& field, std::string_view text, char var = 'x');

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Poly scaled(Elem c) const;
    Poly shifted(std::size_t k) const;  // times x^k

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }

    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    bool divides(const Poly& f) const { return f.divmod(*this).second.is_zero(); }

    Elem eval(Elem x) const noexcept;
    Poly derivative() const;
    /// x^deg(f) f(1/x). Not normalized.
    Poly reciprocal() const;
    /// this^e mod modulus.
    Poly pow_mod(std::uint64_t e, const Poly& modulus) const;

    bool operator==(const Poly& o) const { return field_.get() == o.field_.get() && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Descending-degree text, e.g. `x^2+10x+1`.
    std::string to_string(char var = 'x') const;

private:
    void trim() noexcept;
    void require_same(const Poly& o) const;

    Field field_;
    std::vector<Elem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Orders polynomials by degree, then by ascending coefficient vector.
bool canonical_less(const Poly& a, const Poly& b);

struct FactorPower {
    Poly factor;  // monic irreducible
    unsigned multiplicity;
};

struct Factorization {
    FieldElement unit;
    std::vector<FactorPower> factors;

    /// unit times the product of factor^multiplicity.
    Poly expand() const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed2d;

/// Complete factorization over F_q by squarefree, distinct-degree and
/// equal-degree splitting. Factors are returned in canonical order.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

/// Factorization of x^n - c. When q = 1 mod n*ord(c) the result is the list of
/// linear factors x - omega^i for i in {1 + k*ord(c)}, ascending k; otherwise
/// the general algorithm is used.
Factorization factor_binomial(const Field& field, std::size_t n, const FieldElement& c,
                              std::uint64_t seed = kDefaultFactorSeed);

/// Same as factor_binomial but always through the general algorithm.
Factorization factor_binomial_general(const Field& field, std::size_t n, const FieldElement& c,
                                      std::uint64_t seed = kDefaultFactorSeed);

/// Every monic divisor of the factored polynomial, sorted by canonical_less.
std::vector<Poly> monic_divisors(const Factorization& f);

}  // namespace cc2d
