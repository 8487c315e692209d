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

#include "cc2d/code2d.hpp"

#include <algorithm>
#include <numeric>

namespace cc2d {

RingElement2D::RingElement2D(Ambient ambient) : ambient_(std::move(ambient)), c_(ambient_.n(), 0) {}

RingElement2D::RingElement2D(Ambient ambient, std::vector<Elem> coeffs)
    : ambient_(std::move(ambient)), c_(std::move(coeffs)) {
    if (c_.size() != ambient_.n()) throw Error(Errc::InvalidArgument, "coefficient array does not match s*l");
}

RingElement2D RingElement2D::product(const Ambient& ambient, const Poly& fx, const Poly& gy) {
    const auto& fd = *ambient.field;
    RingElement2D out(ambient);
    const auto& f = fx.coeffs();
    const auto& g = gy.coeffs();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        const Elem fi = fd.mul(f[i], fd.pow(ambient.alpha, i / ambient.s));
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0) continue;
            const Elem gj = fd.mul(g[j], fd.pow(ambient.beta, j / ambient.l));
            Elem& slot = out(i % ambient.s, j % ambient.l);
            slot = fd.add(slot, fd.mul(fi, gj));
        }
    }
    return out;
}

RingElement2D RingElement2D::from_c1(const Ambient& ambient, std::span<const Elem> v) {
    return RingElement2D(ambient, std::vector<Elem>(v.begin(), v.end()));
}

bool RingElement2D::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e == 0; });
}

void RingElement2D::require_same(const RingElement2D& o) const {
    if (!(ambient_ == o.ambient_)) throw Error(Errc::InvalidArgument, "ring elements from different ambient rings");
}

RingElement2D RingElement2D::operator+(const RingElement2D& o) const {
    require_same(o);
    RingElement2D out(ambient_);
    for (std::size_t t = 0; t < c_.size(); ++t) out.c_[t] = ambient_.field->add(c_[t], o.c_[t]);
    return out;
}

RingElement2D RingElement2D::scaled(Elem c) const {
    RingElement2D out(ambient_);
    for (std::size_t t = 0; t < c_.size(); ++t) out.c_[t] = ambient_.field->mul(c_[t], c);
    return out;
}

std::vector<Elem> RingElement2D::flatten_c2() const {
    const auto perm = c1_to_c2_permutation(ambient_.s, ambient_.l);
    std::vector<Elem> out(c_.size());
    for (std::size_t t = 0; t < perm.size(); ++t) out[t] = c_[perm[t]];
    return out;
}

std::vector<std::size_t> c1_to_c2_permutation(std::size_t s, std::size_t l) {
    std::vector<std::size_t> perm(s * l);
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < s; ++i) perm[j * s + i] = i * l + j;
    return perm;
}

RingElement2D sigma_shift(const RingElement2D& c, Elem factor) {
    const auto& a = c.ambient();
    RingElement2D out(a);
    for (std::size_t j = 0; j < a.l; ++j) {
        out(0, j) = a.field->mul(factor, c(a.s - 1, j));
        for (std::size_t i = 1; i < a.s; ++i) out(i, j) = c(i - 1, j);
    }
    return out;
}

RingElement2D tau_shift(const RingElement2D& c, Elem factor) {
    const auto& a = c.ambient();
    RingElement2D out(a);
    for (std::size_t i = 0; i < a.s; ++i) {
        out(i, 0) = a.field->mul(factor, c(i, a.l - 1));
        for (std::size_t j = 1; j < a.l; ++j) out(i, j) = c(i, j - 1);
    }
    return out;
}

RingElement2D ring_mul(const RingElement2D& f, const RingElement2D& g) {
    if (!(f.ambient() == g.ambient())) throw Error(Errc::InvalidArgument, "ring elements from different ambient rings");
    const auto& a = f.ambient();
    const auto& fd = *a.field;
    RingElement2D out(a);
    for (std::size_t i1 = 0; i1 < a.s; ++i1)
        for (std::size_t j1 = 0; j1 < a.l; ++j1) {
            const Elem x = f(i1, j1);
            if (x == 0) continue;
            for (std::size_t i2 = 0; i2 < a.s; ++i2)
                for (std::size_t j2 = 0; j2 < a.l; ++j2) {
                    const Elem y = g(i2, j2);
                    if (y == 0) continue;
                    std::size_t i = i1 + i2, j = j1 + j2;
                    Elem t = fd.mul(x, y);
                    if (i >= a.s) {
                        i -= a.s;
                        t = fd.mul(t, a.alpha);
                    }
                    if (j >= a.l) {
                        j -= a.l;
                        t = fd.mul(t, a.beta);
                    }
                    out(i, j) = fd.add(out(i, j), t);
                }
        }
    return out;
}

bool orthogonality_criterion(const RingElement2D& f, const RingElement2D& g) {
    if (!(f.ambient() == g.ambient())) throw Error(Errc::InvalidArgument, "ring elements from different ambient rings");
    const auto& a = f.ambient();
    const Elem alpha_inv = a.field->inv(a.alpha);
    const Elem beta_inv = a.field->inv(a.beta);
    RingElement2D reversed(a);
    for (std::size_t i = 0; i < a.s; ++i)
        for (std::size_t j = 0; j < a.l; ++j) reversed(i, j) = g(a.s - 1 - i, a.l - 1 - j);

    const auto fv = f.flatten_c1();
    RingElement2D row_shifted = reversed;
    for (std::size_t u = 0; u < a.s; ++u) {
        RingElement2D w = row_shifted;
        for (std::size_t v = 0; v < a.l; ++v) {
            if (dot(a.field, fv, w.flatten_c1()) != 0) return false;
            w = tau_shift(w, beta_inv);
        }
        row_shifted = sigma_shift(row_shifted, alpha_inv);
    }
    return true;
}

std::size_t CodeSpec::dimension() const noexcept {
    return n() - std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
}

Poly CodeSpec::cofactor(std::size_t j) const {
    if (j >= divisors_.size()) throw Error(Errc::IndexOutOfRange, "divisor index out of range", j);
    return x_modulus() / divisors_[j];
}

bool CodeSpec::alpha_is_unit_sign() const noexcept {
    return ambient_.alpha == 1 || ambient_.alpha == ambient_.field->neg(1);
}

bool CodeSpec::beta_is_unit_sign() const noexcept {
    return ambient_.beta == 1 || ambient_.beta == ambient_.field->neg(1);
}

CodeSpec validate_spec(CodeParams raw) {
    if (!raw.field) throw Error(Errc::InvalidArgument, "code parameters without a field");
    const Field& field = raw.field;
    if (raw.alpha.field().get() != field.get() || raw.beta.field().get() != field.get())
        throw Error(Errc::FieldMismatch, "alpha and beta must lie in the code's field");
    if (raw.alpha.is_zero() || raw.beta.is_zero()) throw Error(Errc::ZeroAlphaBeta, "alpha and beta must be nonzero");
    if (raw.s == 0 || raw.l == 0) throw Error(Errc::InvalidArgument, "s and l must be positive");
    const std::uint64_t r = mul_order(raw.beta);
    if ((field->q() - 1) % (r * raw.l) != 0)
        throw Error(Errc::CongruenceFailed, "q = " + std::to_string(field->q()) + " is not 1 mod r*l = " + std::to_string(r * raw.l));
    if (raw.divisors.size() != raw.l)
        throw Error(Errc::InvalidArgument, "expected " + std::to_string(raw.l) + " divisors, got " + std::to_string(raw.divisors.size()));

    const Poly modulus = Poly::binomial(field, raw.s, raw.alpha.value());
    std::vector<std::size_t> degrees;
    for (std::size_t j = 0; j < raw.divisors.size(); ++j) {
        const Poly& p = raw.divisors[j];
        if (p.field().get() != field.get()) throw Error(Errc::FieldMismatch, "divisor over a different field", j);
        if (!p.is_monic())
            throw Error(Errc::DivisorCheckFailed, "p_" + std::to_string(j) + " = " + p.to_string() + " is not monic", j);
        if (!p.divides(modulus))
            throw Error(Errc::DivisorCheckFailed,
                        "p_" + std::to_string(j) + " = " + p.to_string() + " does not divide " + modulus.to_string(), j);
        degrees.push_back(static_cast<std::size_t>(p.degree()));
    }
    Ambient ambient{field, raw.s, raw.l, raw.alpha.value(), raw.beta.value()};
    return CodeSpec(std::move(ambient), std::move(raw.divisors), std::move(degrees));
}

namespace {

void require_matching(const CodeSpec& spec, const IdempotentSystem& sys) {
    if (sys.field().get() != spec.field().get() || sys.l() != spec.l() || sys.beta().value() != spec.ambient().beta)
        throw Error(Errc::MismatchedSystem, "idempotent system does not match the code's field, l and beta");
}

void require_unit_signs(const CodeSpec& spec) {
    if (!spec.beta_is_unit_sign()) throw Error(Errc::BetaNotPlusMinusOne, "beta must be 1 or -1");
    if (!spec.alpha_is_unit_sign()) throw Error(Errc::AlphaNotPlusMinusOne, "alpha must be 1 or -1");
}

std::vector<Elem> flatten(const RingElement2D& c, View view) {
    return view == View::C1 ? c.flatten_c1() : c.flatten_c2();
}

std::size_t partner_index(const CodeSpec& spec, std::size_t k) {
    const std::size_t l = spec.l();
    return spec.ambient().beta == 1 ? (2 * l - 2 - k) % l : l - 1 - k;
}

LinearCodeView independent_rows(Matrix m, const char* what) {
    if (rank(m) != m.rows()) throw Error(Errc::InternalDisagreement, std::string(what) + " rows are linearly dependent");
    return LinearCodeView(std::move(m));
}

}  // namespace

std::vector<RingElement2D> generators(const CodeSpec& spec, const IdempotentSystem& sys) {
    require_matching(spec, sys);
    std::vector<RingElement2D> out;
    for (std::size_t j = 0; j < spec.l(); ++j)
        out.push_back(RingElement2D::product(spec.ambient(), spec.divisors()[j], sys.eta(j)));
    return out;
}

LinearCodeView generator_matrix(const CodeSpec& spec, const IdempotentSystem& sys, View view) {
    require_matching(spec, sys);
    Matrix g(spec.field(), 0, spec.n());
    for (std::size_t j = 0; j < spec.l(); ++j) {
        const std::size_t count = spec.s() - spec.degrees()[j];
        for (std::size_t i = 0; i < count; ++i)
            g.append_row(flatten(RingElement2D::product(spec.ambient(), spec.divisors()[j].shifted(i), sys.eta(j)), view));
    }
    return independent_rows(std::move(g), "generator matrix");
}

std::vector<RingElement2D> dual_generators(const CodeSpec& spec, const IdempotentSystem& sys) {
    require_matching(spec, sys);
    require_unit_signs(spec);
    std::vector<RingElement2D> out;
    for (std::size_t j = 0; j < spec.l(); ++j) {
        if (spec.degrees()[j] == 0) continue;
        out.push_back(RingElement2D::product(spec.ambient(), spec.cofactor(j).reciprocal(), sys.eta(j).reciprocal()));
    }
    return out;
}

LinearCodeView dual_matrix(const CodeSpec& spec, const IdempotentSystem& sys, View view) {
    require_matching(spec, sys);
    require_unit_signs(spec);
    Matrix h(spec.field(), 0, spec.n());
    for (std::size_t j = 0; j < spec.l(); ++j) {
        const Poly px = spec.cofactor(j).reciprocal();
        const Poly qy = sys.eta(j).reciprocal();
        for (std::size_t i = 0; i < spec.degrees()[j]; ++i)
            h.append_row(flatten(RingElement2D::product(spec.ambient(), px.shifted(i), qy), view));
    }
    LinearCodeView dual = independent_rows(std::move(h), "dual matrix");
    const LinearCodeView g = generator_matrix(spec, sys, view);
    if (!(g.generator() * dual.generator().transpose()).is_zero())
        throw Error(Errc::InternalDisagreement, "dual matrix rows are not orthogonal to the generator matrix");
    return dual;
}

LinearCodeView nullspace_dual(const CodeSpec& spec, const IdempotentSystem& sys, View view) {
    return LinearCodeView(nullspace(generator_matrix(spec, sys, view).generator()));
}

SelfDualReport is_self_dual(const CodeSpec& spec, const IdempotentSystem& sys) {
    require_matching(spec, sys);
    require_unit_signs(spec);
    SelfDualReport report;
    const std::size_t sum = std::accumulate(spec.degrees().begin(), spec.degrees().end(), std::size_t{0});
    report.dimension_ok = spec.n() == 2 * sum;

    bool all_pairs = true;
    for (std::size_t k = 0; k < spec.l(); ++k) {
        const std::size_t kp = partner_index(spec, k);
        report.partner.push_back(kp);
        const Poly cof_star = spec.cofactor(k).reciprocal();
        const Poly partner_cof_star = spec.cofactor(kp).reciprocal();
        const Poly& pk = spec.divisors()[k];
        const Poly& pkp = spec.divisors()[kp];
        const bool first = pkp.divides(cof_star.monic());
        const bool second = partner_cof_star.monic().divides(pk);
        if (first && second) {
            report.pair_witnesses.emplace_back(PairWitness{cof_star / pkp, pk / partner_cof_star});
        } else {
            report.pair_witnesses.emplace_back(std::nullopt);
            all_pairs = false;
        }
    }
    report.verdict = report.dimension_ok && all_pairs;

    report.theorem5_applicable = spec.beta().is_one() && (spec.alpha().is_one() || spec.s() % 2 == 1);

    const RowSpace code = generator_matrix(spec, sys).row_space();
    const RowSpace dual = dual_matrix(spec, sys).row_space();
    if (report.verdict != (code == dual))
        throw Error(Errc::InternalDisagreement, "divisor-based self-duality verdict disagrees with row-space comparison");
    return report;
}

bool theorem5_screen(const Field& field, std::size_t s, const FieldElement& alpha, const FieldElement& beta) {
    if (!beta.is_one()) throw Error(Errc::PreconditionUnmet, "screen needs beta = 1");
    const bool alpha_one = alpha.is_one();
    const bool alpha_minus_one = alpha.value() == field->neg(1);
    if (!alpha_one && !alpha_minus_one) throw Error(Errc::PreconditionUnmet, "screen needs alpha = 1 or -1");
    if (!alpha_one && s % 2 == 0) throw Error(Errc::PreconditionUnmet, "screen needs s odd when alpha = -1");
    return std::gcd(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(field->q())) == 1;
}

bool theorem5_screen(const CodeSpec& spec) { return theorem5_screen(spec.field(), spec.s(), spec.alpha(), spec.beta()); }

bool is_shift_closed(const LinearCodeView& c1_code, const Ambient& ambient, Elem alpha_factor, Elem beta_factor) {
    const RowSpace space = c1_code.row_space();
    for (std::size_t i = 0; i < c1_code.k(); ++i) {
        const auto c = RingElement2D::from_c1(ambient, c1_code.generator().row(i));
        if (!space.contains(sigma_shift(c, alpha_factor).flatten_c1())) return false;
        if (!space.contains(tau_shift(c, beta_factor).flatten_c1())) return false;
    }
    return true;
}

}  // namespace cc2d
