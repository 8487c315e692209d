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
#include <string>
#include <vector>

#include "cc2d/gf.hpp"
#include "cc2d/poly.hpp"

namespace cc2d {

/// Primitive idempotents of F_q[y]/(y^{rl} - 1) and F_q[y]/(y^l - beta).
///
/// With r = ord(beta) and omega of order r*l satisfying omega^l = beta:
///   zeta_j  vanishes at every r*l-th root of unity except omega^j,
///   eta_k   vanishes at every root of y^l - beta except omega^{1+kr},
///   Q       is the cofactor (y^l - beta) Q = y^{rl} - 1,
///   c_k     satisfies zeta_{1+kr} = eta_k Q / c_k,
///   b_k     satisfies eta_k^* = b_k eta_{recip(k)} (beta = +-1 only).
///
/// Built once by build_system() and immutable afterwards.
class IdempotentSystem {
public:
    const Field& field() const noexcept { return field_; }
    std::size_t l() const noexcept { return l_; }
    const FieldElement& beta() const noexcept { return beta_; }
    std::size_t r() const noexcept { return r_; }
    const FieldElement& omega() const noexcept { return omega_; }
    /// Exponents (1 + k r) mod rl for 0 <= k < l, in order of k.
    const std::vector<std::size_t>& root_exponents() const noexcept { return exponents_; }
    /// omega^{1+kr}, the root of y^l - beta at which eta_k equals 1.
    FieldElement root(std::size_t k) const;

    const Poly& Q() const noexcept { return Q_; }
    const std::vector<Poly>& zeta() const noexcept { return zeta_; }
    const std::vector<Poly>& eta() const noexcept { return eta_; }
    const Poly& eta(std::size_t k) const;
    const std::vector<FieldElement>& c() const noexcept { return c_; }
    /// Empty unless beta is 1 or -1.
    const std::vector<FieldElement>& b() const noexcept { return b_; }
    const std::vector<std::size_t>& recip_index() const noexcept { return recip_; }
    bool beta_is_unit_sign() const noexcept { return !b_.empty(); }

    /// y^l - beta.
    Poly eta_modulus() const { return Poly::binomial(field_, l_, beta_.value()); }
    /// y^{rl} - 1.
    Poly zeta_modulus() const { return Poly::binomial(field_, r_ * l_, 1); }

private:
    friend IdempotentSystem build_system(const Field&, std::size_t, const FieldElement&);
    IdempotentSystem(Field field, std::size_t l, FieldElement beta, std::size_t r, FieldElement omega);

    Field field_;
    std::size_t l_;
    FieldElement beta_;
    std::size_t r_;
    FieldElement omega_;
    std::vector<std::size_t> exponents_;
    Poly Q_;
    std::vector<Poly> zeta_;
    std::vector<Poly> eta_;
    std::vector<FieldElement> c_;
    std::vector<FieldElement> b_;
    std::vector<std::size_t> recip_;
};

/// Requires beta != 0 and q = 1 mod r*l (CongruenceFailed otherwise). Every
/// zeta_j is computed from its Lagrange product and from the geometric-series
/// closed form; disagreement raises InternalDisagreement.
IdempotentSystem build_system(const Field& field, std::size_t l, const FieldElement& beta);

/// zeta_j = (1/rl) * sum_{t<rl} (omega^{rl-j} y)^t.
Poly zeta_closed_form(const IdempotentSystem& sys, std::size_t j);

/// prod_{i != j} (y - omega^i) / (omega^j - omega^i).
Poly zeta_lagrange(const IdempotentSystem& sys, std::size_t j);

/// (omega^{1+kr})^j, the scalar by which y^j acts on eta_k.
FieldElement eta_shift_eigenvalue(const IdempotentSystem& sys, std::size_t k, std::uint64_t j);

/// Whether eta_k y^j == eta_shift_eigenvalue(k, j) eta_k modulo y^l - beta.
bool check_eta_shift(const IdempotentSystem& sys, std::size_t k, std::uint64_t j);

struct EtaReciprocal {
    std::size_t index;
    FieldElement scale;
};

/// eta_k^* = scale * eta_index, where index = (l-2-k) mod l for beta = 1 and
/// l-1-k for beta = -1. BetaNotPlusMinusOne otherwise.
EtaReciprocal eta_reciprocal(const IdempotentSystem& sys, std::size_t k);

/// Re-checks every algebraic identity the system is supposed to satisfy and
/// returns a description of each one that fails; empty means all hold.
std::vector<std::string> audit(const IdempotentSystem& sys);

/// a*b mod modulus.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

}  // namespace cc2d
