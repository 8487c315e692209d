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

#include "cc2d/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace cc2d {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto c : c_)
        if (c >= field_->q()) throw Error(Errc::InvalidArgument, "coefficient out of range");
    trim();
}

Poly Poly::monomial(const Field& field, std::size_t degree, Elem c) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(field, std::move(v));
}

Poly Poly::linear(const Field& field, Elem root) { return Poly(field, {field->neg(root), 1}); }

Poly Poly::binomial(const Field& field, std::size_t n, Elem c) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = field->neg(c);
    v[n] = field->add(v[n], 1);
    return Poly(field, std::move(v));
}

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (const auto c : coeffs) v.push_back(field->from_int(c));
    return Poly(field, std::move(v));
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same(const Poly& o) const {
    if (field_.get() != o.field_.get()) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    require_same(o);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    require_same(o);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
    return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    require_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_->add(v[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same(divisor);
    if (divisor.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    const auto& fd = *field_;
    std::vector<Elem> rem = c_;
    const std::size_t db = divisor.c_.size() - 1;
    if (rem.size() <= db) return {Poly(field_), *this};
    std::vector<Elem> quot(rem.size() - db, 0);
    const Elem inv_lead = fd.inv(divisor.lead());
    for (std::size_t i = rem.size(); i-- > db;) {
        const Elem f = fd.mul(rem[i], inv_lead);
        if (f == 0) continue;
        const std::size_t shift = i - db;
        quot[shift] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = fd.sub(rem[shift + j], fd.mul(f, divisor.c_[j]));
    }
    rem.resize(db);
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Elem Poly::eval(Elem x) const noexcept {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->p())));
    return Poly(field_, std::move(v));
}

Poly Poly::reciprocal() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "reciprocal of the zero polynomial");
    std::vector<Elem> v(c_.rbegin(), c_.rend());
    return Poly(field_, std::move(v));
}

Poly Poly::pow_mod(std::uint64_t e, const Poly& modulus) const {
    Poly result = Poly::constant(field_, 1) % modulus;
    Poly base = *this % modulus;
    while (e) {
        if (e & 1) result = (result * base) % modulus;
        base = (base * base) % modulus;
        e >>= 1;
    }
    return result;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (c_[i] != 1 || i == 0) out += field_->format(c_[i]);
        if (i >= 1) out += var;
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

Poly Poly::parse(const Field& field, std::string_view text, char var) {
    std::string s;
    for (const char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&](const std::string& why) -> Error {
        return Error(Errc::ParseError, "bad polynomial '" + std::string(text) + "': " + why);
    };
    if (s.empty()) throw fail("empty");

    std::vector<Elem> coeffs;
    std::size_t pos = 0;
    auto read_uint = [&](std::uint64_t& out) {
        const std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ULL << 40)) throw fail("number too large");
            ++pos;
        }
        if (pos == start) return false;
        out = v;
        return true;
    };

    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;

        std::uint64_t num = 1;
        const bool has_coeff = read_uint(num);
        if (has_coeff && pos < s.size() && s[pos] == '*') ++pos;
        std::size_t degree = 0;
        if (pos < s.size() && s[pos] == var) {
            ++pos;
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::uint64_t e = 0;
                if (!read_uint(e)) throw fail("missing exponent");
                if (e > 1000000) throw fail("exponent too large");
                degree = static_cast<std::size_t>(e);
            }
        } else if (!has_coeff) {
            throw fail("unexpected character at offset " + std::to_string(pos));
        }

        Elem c = field->m() == 1 ? field->from_int(static_cast<std::int64_t>(num % field->p())) : field->from_repr(num);
        if (negative) c = field->neg(c);
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
        coeffs[degree] = field->add(coeffs[degree], c);
    }
    return Poly(field, std::move(coeffs));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

Poly Factorization::expand() const {
    Poly acc = Poly::constant(unit.field(), unit.value());
    for (const auto& [f, e] : factors)
        for (unsigned i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

namespace {

bool is_one(const Poly& f) { return f.degree() == 0 && f.lead() == 1; }

// g with g^p = f, for f' = 0.
Poly poly_pth_root(const Poly& f) {
    const auto& fd = *f.field();
    const std::size_t p = fd.p();
    std::vector<Elem> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(fd.pth_root(f.coeffs()[i]));
    return Poly(f.field(), std::move(v));
}

// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
void squarefree(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.degree() <= 0) return;
    const unsigned p = f.field()->p();
    const Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree(poly_pth_root(f), scale * p, out);
        return;
    }
    Poly c = gcd(f, df);
    Poly w = f / c;
    unsigned i = 1;
    while (!is_one(w)) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) squarefree(poly_pth_root(c.monic()), scale * p, out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const auto& field = f.field();
    const Poly x = Poly::monomial(field, 1);
    Poly xq = x;
    for (std::size_t i = 1; f.degree() >= static_cast<long>(2 * i); ++i) {
        xq = xq.pow_mod(field->q(), f);
        Poly g = gcd(f, xq - x);
        if (!is_one(g)) {
            out.emplace_back(g, i);
            f = f / g;
            xq = xq % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<std::size_t>(f.degree()));
    return out;
}

Poly random_poly(const Field& field, std::size_t below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> dist(0, field->q() - 1);
    std::vector<Elem> v(below_degree);
    for (auto& c : v) c = dist(rng);
    return Poly(field, std::move(v));
}

// Cantor-Zassenhaus equal-degree splitting of a product of degree-d irreducibles.
void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (static_cast<std::size_t>(f.degree()) == d) {
        out.push_back(f);
        return;
    }
    const auto& field = f.field();
    const std::uint64_t q = field->q();
    for (;;) {
        const Poly a = random_poly(field, static_cast<std::size_t>(f.degree()), rng);
        if (a.degree() <= 0) continue;
        Poly b(field);
        if (q % 2 == 1) {
            // a^((q^d-1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            Poly norm = Poly::constant(field, 1);
            Poly frob = a % f;
            for (std::size_t i = 0; i < d; ++i) {
                norm = (norm * frob) % f;
                frob = frob.pow_mod(q, f);
            }
            b = norm.pow_mod((q - 1) / 2, f) - Poly::constant(field, 1);
        } else {
            // Absolute trace a + a^2 + ... + a^(2^(m*d - 1)).
            Poly t = a % f;
            Poly acc = t;
            for (std::size_t i = 1; i < field->m() * d; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            b = acc;
        }
        Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization result{FieldElement(f.field(), f.lead()), {}};
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree(f.monic(), 1, parts);
    for (const auto& [part, mult] : parts) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) result.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
    return result;
}

Factorization factor_binomial_general(const Field& field, std::size_t n, const FieldElement& c, std::uint64_t seed) {
    if (c.is_zero()) throw Error(Errc::ZeroConstant, "x^n - c needs c != 0");
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
    return factor(Poly::binomial(field, n, c.value()), seed);
}

Factorization factor_binomial(const Field& field, std::size_t n, const FieldElement& c, std::uint64_t seed) {
    if (c.is_zero()) throw Error(Errc::ZeroConstant, "x^n - c needs c != 0");
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
    if (c.field().get() != field.get()) throw Error(Errc::FieldMismatch, "constant is not in the given field");
    const std::uint64_t r = mul_order(c);
    if ((field->q() - 1) % (r * n) != 0) return factor_binomial_general(field, n, c, seed);

    const FieldElement omega = find_omega(field, n, c);
    Factorization result{FieldElement(field, 1), {}};
    for (std::size_t k = 0; k < n; ++k)
        result.factors.push_back({Poly::linear(field, omega.pow(1 + k * r).value()), 1});
    return result;
}

std::vector<Poly> monic_divisors(const Factorization& f) {
    const auto& field = f.unit.field();
    std::vector<Poly> out{Poly::constant(field, 1)};
    for (const auto& [g, e] : f.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (e + 1));
        for (const auto& d : out) {
            Poly acc = d;
            next.push_back(acc);
            for (unsigned i = 0; i < e; ++i) {
                acc = acc * g;
                next.push_back(acc);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace cc2d
