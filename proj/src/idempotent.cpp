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

#include "cc2d/idempotent.hpp"

namespace cc2d {

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

IdempotentSystem::IdempotentSystem(Field field, std::size_t l, FieldElement beta, std::size_t r, FieldElement omega)
    : field_(std::move(field)), l_(l), beta_(std::move(beta)), r_(r), omega_(std::move(omega)), Q_(field_) {}

FieldElement IdempotentSystem::root(std::size_t k) const {
    if (k >= l_) throw Error(Errc::IndexOutOfRange, "eta index " + std::to_string(k) + " out of range", k);
    return omega_.pow(exponents_[k]);
}

const Poly& IdempotentSystem::eta(std::size_t k) const {
    if (k >= l_) throw Error(Errc::IndexOutOfRange, "eta index " + std::to_string(k) + " out of range", k);
    return eta_[k];
}

namespace {

// prod_{i in others} (y - roots[i]) / (roots[self] - roots[i])
Poly lagrange_basis(const Field& field, const std::vector<Elem>& roots, std::size_t self) {
    const auto& fd = *field;
    Poly num = Poly::constant(field, 1);
    Elem den = 1;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i == self) continue;
        num = num * Poly::linear(field, roots[i]);
        den = fd.mul(den, fd.sub(roots[self], roots[i]));
    }
    return num.scaled(fd.inv(den));
}

std::size_t reciprocal_index(std::size_t l, std::size_t k, bool beta_is_one) {
    return beta_is_one ? (2 * l - 2 - k) % l : l - 1 - k;
}

}  // namespace

Poly zeta_closed_form(const IdempotentSystem& sys, std::size_t j) {
    const std::size_t n = sys.r() * sys.l();
    if (j >= n) throw Error(Errc::IndexOutOfRange, "zeta index " + std::to_string(j) + " out of range", j);
    const auto& field = sys.field();
    const Elem step = sys.omega().pow(n - j).value();
    const Elem scale = field->inv(field->from_int(static_cast<std::int64_t>(n % field->p())));
    std::vector<Elem> coeffs(n);
    Elem cur = scale;
    for (std::size_t t = 0; t < n; ++t) {
        coeffs[t] = cur;
        cur = field->mul(cur, step);
    }
    return Poly(field, std::move(coeffs));
}

Poly zeta_lagrange(const IdempotentSystem& sys, std::size_t j) {
    const std::size_t n = sys.r() * sys.l();
    if (j >= n) throw Error(Errc::IndexOutOfRange, "zeta index " + std::to_string(j) + " out of range", j);
    std::vector<Elem> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = sys.omega().pow(i).value();
    return lagrange_basis(sys.field(), roots, j);
}

IdempotentSystem build_system(const Field& field, std::size_t l, const FieldElement& beta) {
    if (beta.field().get() != field.get()) throw Error(Errc::FieldMismatch, "beta is not an element of the given field");
    if (beta.is_zero()) throw Error(Errc::ZeroElement, "beta must be nonzero");
    if (l == 0) throw Error(Errc::InvalidArgument, "l must be positive");
    const auto r = static_cast<std::size_t>(mul_order(beta));
    if ((field->q() - 1) % (r * l) != 0)
        throw Error(Errc::CongruenceFailed, "q = " + std::to_string(field->q()) + " is not 1 mod r*l = " + std::to_string(r * l));

    IdempotentSystem sys(field, l, beta, r, find_omega(field, l, beta));
    const auto& fd = *field;
    const std::size_t n = r * l;

    for (std::size_t k = 0; k < l; ++k) sys.exponents_.push_back((1 + k * r) % n);

    for (std::size_t j = 0; j < n; ++j) {
        Poly by_definition = zeta_lagrange(sys, j);
        if (by_definition != zeta_closed_form(sys, j))
            throw Error(Errc::InternalDisagreement, "zeta_" + std::to_string(j) + ": closed form differs from Lagrange product");
        sys.zeta_.push_back(std::move(by_definition));
    }

    std::vector<Elem> eta_roots(l);
    for (std::size_t k = 0; k < l; ++k) eta_roots[k] = sys.omega_.pow(sys.exponents_[k]).value();
    for (std::size_t k = 0; k < l; ++k) sys.eta_.push_back(lagrange_basis(field, eta_roots, k));

    Poly Q = Poly::constant(field, 1);
    for (std::size_t i = 0; i < n; ++i)
        if ((i % r) != 1 % r) Q = Q * Poly::linear(field, sys.omega_.pow(i).value());
    if (sys.eta_modulus() * Q != sys.zeta_modulus())
        throw Error(Errc::InternalDisagreement, "(y^l - beta) Q != y^{rl} - 1");
    sys.Q_ = std::move(Q);

    for (std::size_t k = 0; k < l; ++k) {
        const Poly prod = sys.eta_[k] * sys.Q_;
        const Poly& zeta = sys.zeta_[sys.exponents_[k]];
        const Elem c = fd.div(prod.lead(), zeta.lead());
        if (zeta.scaled(c) != prod)
            throw Error(Errc::InternalDisagreement, "eta_" + std::to_string(k) + " Q is not a multiple of zeta_{1+kr}");
        sys.c_.emplace_back(field, c);
    }

    const bool beta_one = beta.is_one();
    const bool beta_minus_one = beta.value() == fd.neg(1);
    if (beta_one || beta_minus_one) {
        for (std::size_t k = 0; k < l; ++k) {
            const std::size_t target = reciprocal_index(l, k, beta_one);
            const Poly recip = sys.eta_[k].reciprocal();
            const Elem b = fd.div(recip.lead(), sys.eta_[target].lead());
            if (sys.eta_[target].scaled(b) != recip)
                throw Error(Errc::InternalDisagreement,
                            "eta_" + std::to_string(k) + "^* is not a multiple of eta_" + std::to_string(target));
            sys.b_.emplace_back(field, b);
            sys.recip_.push_back(target);
        }
    }
    return sys;
}

FieldElement eta_shift_eigenvalue(const IdempotentSystem& sys, std::size_t k, std::uint64_t j) {
    return sys.root(k).pow(j);
}

bool check_eta_shift(const IdempotentSystem& sys, std::size_t k, std::uint64_t j) {
    const Poly& eta = sys.eta(k);
    const Poly lhs = eta.shifted(static_cast<std::size_t>(j)) % sys.eta_modulus();
    return lhs == eta.scaled(eta_shift_eigenvalue(sys, k, j).value());
}

EtaReciprocal eta_reciprocal(const IdempotentSystem& sys, std::size_t k) {
    if (!sys.beta_is_unit_sign()) throw Error(Errc::BetaNotPlusMinusOne, "eta reciprocals need beta = 1 or -1");
    if (k >= sys.l()) throw Error(Errc::IndexOutOfRange, "eta index " + std::to_string(k) + " out of range", k);
    return {sys.recip_index()[k], sys.b()[k]};
}

std::vector<std::string> audit(const IdempotentSystem& sys) {
    std::vector<std::string> failures;
    const auto& field = sys.field();
    const std::size_t l = sys.l();
    const std::size_t n = sys.r() * l;
    const Poly one = Poly::constant(field, 1);
    const Poly zero(field);
    auto fail = [&](std::string what) { failures.push_back(std::move(what)); };

    auto check_family = [&](const std::vector<Poly>& family, const Poly& modulus, const std::string& name) {
        Poly sum(field);
        for (const auto& e : family) sum = sum + e;
        if (sum % modulus != one) fail(name + ": sum is not 1");
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i; j < family.size(); ++j) {
                const Poly prod = mulmod(family[i], family[j], modulus);
                if (prod != (i == j ? family[i] % modulus : zero))
                    fail(name + ": product " + std::to_string(i) + "*" + std::to_string(j) + " wrong");
            }
    };
    check_family(sys.eta(), sys.eta_modulus(), "eta");
    check_family(sys.zeta(), sys.zeta_modulus(), "zeta");

    if (sys.eta_modulus() * sys.Q() != sys.zeta_modulus()) fail("cofactor: (y^l - beta) Q != y^{rl} - 1");

    for (std::size_t j = 0; j < n; ++j) {
        if (zeta_closed_form(sys, j) != sys.zeta()[j]) fail("zeta_" + std::to_string(j) + ": closed form mismatch");
        for (std::size_t k = 0; k < n; ++k) {
            const Elem v = sys.zeta()[j].eval(sys.omega().pow(k).value());
            if (v != (j == k ? 1U : 0U)) fail("zeta_" + std::to_string(j) + "(omega^" + std::to_string(k) + ") wrong");
        }
    }

    for (std::size_t k = 0; k < l; ++k) {
        const std::size_t idx = sys.root_exponents()[k];
        const Poly& zeta = sys.zeta()[idx];
        for (std::size_t j = 0; j < l; ++j) {
            const Poly lhs = zeta.shifted(j) % sys.zeta_modulus();
            if (lhs != zeta.scaled(sys.root(k).pow(j).value()))
                fail("zeta shift: k=" + std::to_string(k) + " j=" + std::to_string(j));
            if (!check_eta_shift(sys, k, j)) fail("eta shift: k=" + std::to_string(k) + " j=" + std::to_string(j));
            const Elem v = sys.eta(k).eval(sys.root(j).value());
            if (v != (j == k ? 1U : 0U)) fail("eta_" + std::to_string(k) + " at root " + std::to_string(j) + " wrong");
        }
        const Poly via_eta = (sys.eta(k) * sys.Q()).scaled(sys.c()[k].inverse().value());
        if (via_eta != zeta) fail("zeta_{1+kr} != eta_k Q / c_k for k=" + std::to_string(k));
    }

    if (sys.beta_is_unit_sign()) {
        const bool beta_one = sys.beta().is_one();
        for (std::size_t k = 0; k < l; ++k) {
            const auto [idx, b] = eta_reciprocal(sys, k);
            if (idx != reciprocal_index(l, k, beta_one)) fail("reciprocal index map wrong for k=" + std::to_string(k));
            if (sys.eta(k).reciprocal() != sys.eta(idx).scaled(b.value()))
                fail("eta_" + std::to_string(k) + "^* != b_k eta_" + std::to_string(idx));
        }
    }
    return failures;
}

}  // namespace cc2d
