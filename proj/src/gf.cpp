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

#include "cc2d/gf.hpp"

#include <algorithm>
#include <limits>

namespace cc2d {

namespace {

constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;
constexpr std::uint64_t kMaxExtensionOrder = 1ULL << 24;

using Digits = std::vector<Elem>;

// Dense F_p polynomials used only while bootstrapping an extension field.
void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits mod_small(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv_lead = [&] {
        std::uint64_t r = 1, base = b.back(), e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > db) {
        const std::uint64_t f = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t t = f * b[i] % p;
            a[shift + i] = static_cast<Elem>((a[shift + i] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible_small(const Digits& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits g(d + 1);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<Elem>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (mod_small(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Field FieldCtx::create(std::uint64_t p, unsigned m, std::optional<std::vector<std::int64_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p > kMaxPrime) throw Error(Errc::InvalidArgument, "characteristic too large: " + std::to_string(p));
    if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
    const auto pp = static_cast<std::uint32_t>(p);
    if (m == 1) return std::make_shared<const FieldCtx>(Token{}, pp, 1U, Digits{});

    if (!modulus) throw Error(Errc::MissingModulus, "extension degree " + std::to_string(m) + " needs a modulus");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxExtensionOrder)
            throw Error(Errc::InvalidArgument, "extension field too large for table arithmetic");
    }
    Digits mod;
    for (const auto c : *modulus) {
        const auto sp = static_cast<std::int64_t>(p);
        mod.push_back(static_cast<Elem>(((c % sp) + sp) % sp));
    }
    trim(mod);
    if (mod.size() != m + 1 || mod.back() != 1)
        throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
    if (!is_irreducible_small(mod, pp)) throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    return std::make_shared<const FieldCtx>(Token{}, pp, m, std::move(mod));
}

FieldCtx::FieldCtx(Token, std::uint32_t p, unsigned m, std::vector<Elem> modulus)
    : p_(p), m_(m), q_(p), modulus_(std::move(modulus)) {
    if (m_ == 1) return;
    pow_p_.assign(m_ + 1, 1);
    for (unsigned i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    q_ = pow_p_[m_];

    // Slow multiplication through digit vectors; only used to build the tables.
    auto slow_mul = [&](Elem a, Elem b) {
        const Digits da = digits(a), db = digits(b);
        Digits prod(2 * m_ - 1, 0);
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < m_; ++j)
                prod[i + j] = static_cast<Elem>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        const Digits r = mod_small(prod, modulus_, p_);
        Elem out = 0;
        for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pow_p_[i];
        return out;
    };

    const auto divisors = prime_divisors(q_ - 1);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Elem generator = 0;
    for (Elem g = 2; g < q_ && generator == 0; ++g) {
        bool primitive = true;
        for (const auto d : divisors)
            if (slow_pow(g, (q_ - 1) / d) == 1) {
                primitive = false;
                break;
            }
        if (primitive) generator = g;
    }

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, generator);
    }
}

Elem FieldCtx::from_int(std::int64_t v) const noexcept {
    const auto sp = static_cast<std::int64_t>(p_);
    return static_cast<Elem>(((v % sp) + sp) % sp);
}

Elem FieldCtx::from_repr(std::uint64_t v) const {
    if (v >= q_) throw Error(Errc::InvalidArgument, "element representative " + std::to_string(v) + " out of range");
    return static_cast<Elem>(v);
}

Elem FieldCtx::add_ext(Elem a, Elem b) const noexcept {
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const Elem s = (a % p_) + (b % p_);
        out += (s >= p_ ? s - p_ : s) * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return out;
}

Elem FieldCtx::neg_ext(Elem a) const noexcept {
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const Elem d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
        a /= p_;
    }
    return out;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "zero has no inverse");
    if (m_ == 1) return pow(a, p_ - 2);
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::pth_root(Elem a) const noexcept {
    if (m_ == 1) return a;
    return pow(a, q_ / p_);
}

std::uint64_t FieldCtx::order(Elem a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "zero has no multiplicative order");
    std::uint64_t t = q_ - 1;
    for (const auto d : prime_divisors(q_ - 1))
        while (t % d == 0 && pow(a, t / d) == 1) t /= d;
    return t;
}

std::vector<Elem> FieldCtx::digits(Elem a) const {
    std::vector<Elem> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw Error(Errc::InvalidArgument, "field element without a field");
    if (value_ >= field_->q()) throw Error(Errc::InvalidArgument, "element representative out of range");
}

void FieldElement::require_same(const FieldElement& o) const {
    if (!same_field(o)) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->div(value_, o.value_)};
}

std::uint64_t mul_order(const FieldElement& a) { return a.field()->order(a.value()); }

FieldElement find_omega(const Field& field, std::uint64_t l, const FieldElement& beta) {
    if (beta.field().get() != field.get()) throw Error(Errc::FieldMismatch, "beta is not an element of the given field");
    if (l == 0) throw Error(Errc::InvalidArgument, "l must be positive");
    const std::uint64_t r = mul_order(beta);
    const std::uint64_t rl = r * l;
    if ((field->q() - 1) % rl != 0)
        throw Error(Errc::CongruenceFailed, "q = " + std::to_string(field->q()) + " is not 1 mod r*l = " + std::to_string(rl));
    for (Elem v = 1; v < field->q(); ++v) {
        if (field->pow(v, l) != beta.value()) continue;
        if (field->order(v) == rl) return {field, v};
    }
    throw Error(Errc::NotFound, "no element of order " + std::to_string(rl) + " with omega^l = beta");
}

}  // namespace cc2d
