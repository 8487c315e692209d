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
#include <span>
#include <vector>

#include "cc2d/codeops.hpp"
#include "cc2d/gf.hpp"
#include "cc2d/idempotent.hpp"
#include "cc2d/poly.hpp"

namespace cc2d {

/// The ring F_q[x,y]/(x^s - alpha, y^l - beta).
struct Ambient {
    Field field;
    std::size_t s;
    std::size_t l;
    Elem alpha;
    Elem beta;

    std::size_t n() const noexcept { return s * l; }
    bool operator==(const Ambient& o) const {
        return field.get() == o.field.get() && s == o.s && l == o.l && alpha == o.alpha && beta == o.beta;
    }
};

/// An element of the ambient ring as an s x l array; entry (i, j) is the
/// coefficient of x^i y^j.
class RingElement2D {
public:
    explicit RingElement2D(Ambient ambient);
    RingElement2D(Ambient ambient, std::vector<Elem> coeffs);

    /// f(x) g(y) reduced into the ring.
    static RingElement2D product(const Ambient& ambient, const Poly& fx, const Poly& gy);
    /// Inverse of flatten_c1.
    static RingElement2D from_c1(const Ambient& ambient, std::span<const Elem> v);

    const Ambient& ambient() const noexcept { return ambient_; }
    Elem operator()(std::size_t i, std::size_t j) const noexcept { return c_[i * ambient_.l + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return c_[i * ambient_.l + j]; }
    bool is_zero() const noexcept;

    RingElement2D operator+(const RingElement2D& o) const;
    RingElement2D scaled(Elem c) const;
    bool operator==(const RingElement2D& o) const { return ambient_ == o.ambient_ && c_ == o.c_; }

    /// Row-major read: (c_{0,0..l-1} | c_{1,0..l-1} | ... ).
    std::vector<Elem> flatten_c1() const { return c_; }
    /// Column-major read: (c_{0..s-1,0} | c_{0..s-1,1} | ... ).
    std::vector<Elem> flatten_c2() const;

private:
    void require_same(const RingElement2D& o) const;

    Ambient ambient_;
    std::vector<Elem> c_;
};

/// perm[t] is the C1 coordinate that lands at C2 coordinate t.
std::vector<std::size_t> c1_to_c2_permutation(std::size_t s, std::size_t l);

/// Row constacyclic shift: row i <- row i-1, row 0 <- factor * row s-1.
RingElement2D sigma_shift(const RingElement2D& c, Elem factor);
/// Column constacyclic shift: column j <- column j-1, column 0 <- factor * column l-1.
RingElement2D tau_shift(const RingElement2D& c, Elem factor);

/// Product in the ambient ring.
RingElement2D ring_mul(const RingElement2D& f, const RingElement2D& g);

/// The vector test for f g = 0: f is orthogonal to the fully reversed array
/// of g and to every (alpha^-1, beta^-1)-constacyclic shift of it. Computed
/// from shifts and inner products only, without ring multiplication.
bool orthogonality_criterion(const RingElement2D& f, const RingElement2D& g);

/// Raw code data before validation.
struct CodeParams {
    Field field;
    std::size_t s = 0;
    std::size_t l = 0;
    FieldElement alpha;
    FieldElement beta;
    std::vector<Poly> divisors;  // p_0 .. p_{l-1}, polynomials in x
};

/// A validated code: every p_j is monic and divides x^s - alpha, and
/// q = 1 mod r l with r = ord(beta).
class CodeSpec {
public:
    const Field& field() const noexcept { return ambient_.field; }
    const Ambient& ambient() const noexcept { return ambient_; }
    std::size_t s() const noexcept { return ambient_.s; }
    std::size_t l() const noexcept { return ambient_.l; }
    std::size_t n() const noexcept { return ambient_.n(); }
    FieldElement alpha() const { return {ambient_.field, ambient_.alpha}; }
    FieldElement beta() const { return {ambient_.field, ambient_.beta}; }
    const std::vector<Poly>& divisors() const noexcept { return divisors_; }
    /// a_j = deg p_j.
    const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
    /// sl - sum a_j.
    std::size_t dimension() const noexcept;
    /// x^s - alpha.
    Poly x_modulus() const { return Poly::binomial(ambient_.field, ambient_.s, ambient_.alpha); }
    /// p'_j = (x^s - alpha) / p_j.
    Poly cofactor(std::size_t j) const;
    bool alpha_is_unit_sign() const noexcept;
    bool beta_is_unit_sign() const noexcept;

private:
    friend CodeSpec validate_spec(CodeParams raw);
    CodeSpec(Ambient ambient, std::vector<Poly> divisors, std::vector<std::size_t> degrees)
        : ambient_(std::move(ambient)), divisors_(std::move(divisors)), degrees_(std::move(degrees)) {}

    Ambient ambient_;
    std::vector<Poly> divisors_;
    std::vector<std::size_t> degrees_;
};

/// ZeroAlphaBeta, CongruenceFailed, or DivisorCheckFailed(j) on bad input.
CodeSpec validate_spec(CodeParams raw);

enum class View { C1, C2 };

/// eta_j(y) p_j(x) for j = 0..l-1.
std::vector<RingElement2D> generators(const CodeSpec& spec, const IdempotentSystem& sys);

/// Rows x^i p_j(x) eta_j(y), 0 <= i < s - a_j, in order of j then i.
LinearCodeView generator_matrix(const CodeSpec& spec, const IdempotentSystem& sys, View view = View::C1);

/// p'_j^*(x) eta_j^*(y) for every j with a_j > 0.
std::vector<RingElement2D> dual_generators(const CodeSpec& spec, const IdempotentSystem& sys);

/// Rows x^i p'_j^*(x) eta_j^*(y), 0 <= i < a_j; needs alpha, beta in {1, -1}.
LinearCodeView dual_matrix(const CodeSpec& spec, const IdempotentSystem& sys, View view = View::C1);

/// Dual computed as the nullspace of the generator matrix; works for any alpha, beta.
LinearCodeView nullspace_dual(const CodeSpec& spec, const IdempotentSystem& sys, View view = View::C1);

struct PairWitness {
    Poly t;        // p'_k^* = t p_{k'}
    Poly t_prime;  // p_k = t' p'^*_{k'}
};

struct SelfDualReport {
    bool dimension_ok = false;  // sl = 2 sum a_j
    std::vector<std::size_t> partner;  // k' for each k
    std::vector<std::optional<PairWitness>> pair_witnesses;
    bool verdict = false;
    bool theorem5_applicable = false;  // beta = 1, alpha = +-1, s odd when alpha = -1
};

/// Decides C = C^perp from the divisor data alone, then confirms the verdict
/// against row-space equality of the generator and dual matrices
/// (InternalDisagreement on mismatch).
SelfDualReport is_self_dual(const CodeSpec& spec, const IdempotentSystem& sys);

/// True when self-duality is ruled out: beta = 1, alpha = +-1, gcd(s, q) = 1
/// (s odd if alpha = -1). PreconditionUnmet when those sign conditions fail.
bool theorem5_screen(const Field& field, std::size_t s, const FieldElement& alpha, const FieldElement& beta);
bool theorem5_screen(const CodeSpec& spec);

/// Row space of a C1 generator closed under sigma_{alpha_factor} and tau_{beta_factor}.
bool is_shift_closed(const LinearCodeView& c1_code, const Ambient& ambient, Elem alpha_factor, Elem beta_factor);

}  // namespace cc2d
