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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 6   run one
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cc2d/code2d.hpp"
#include "cc2d/codeops.hpp"
#include "cc2d/error.hpp"
#include "cc2d/idempotent.hpp"
#include "cc2d/poly.hpp"
#include "support.hpp"

using namespace cc2d;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitRef1 = 5.0;
constexpr double kLimitRef2 = 10.0;
constexpr double kLimitRef3 = 1.0;
constexpr double kLimitRef4 = 2.0;
constexpr double kLimitRef5 = 1.0;
constexpr double kLimitRef6Single = 60.0;
constexpr double kLimitRef6Four = 15.0;

constexpr std::size_t kRandomDualSpecs = 200;
constexpr std::size_t kOrthogonalityPairs = 500;
constexpr std::uint64_t kAcceptanceSeed = 0xacce97;

class Report {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return failures_.empty(); }
    std::size_t checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double secs) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << secs << "s";
    return o.str();
}

struct Code {
    Field field;
    CodeSpec spec;
    IdempotentSystem sys;
};

Code make_code(const Field& f, std::size_t s, std::size_t l, std::int64_t alpha, std::int64_t beta,
               const std::vector<std::string>& divisors) {
    std::vector<Poly> ps;
    for (const auto& d : divisors) ps.push_back(Poly::parse(f, d, 'x'));
    const FieldElement a = FieldElement::from_int(f, alpha), b = FieldElement::from_int(f, beta);
    CodeSpec spec = validate_spec(CodeParams{f, s, l, a, b, std::move(ps)});
    IdempotentSystem sys = build_system(f, l, b);
    return {f, std::move(spec), std::move(sys)};
}

bool eta_list_is(const IdempotentSystem& sys, const std::vector<std::string>& texts) {
    if (sys.eta().size() != texts.size()) return false;
    for (std::size_t k = 0; k < texts.size(); ++k)
        if (sys.eta(k) != Poly::parse(sys.field(), texts[k], 'y')) return false;
    return true;
}

std::string params(const LinearCodeView& c, const Distance& d) {
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + d.to_string() + "]";
}

void check_params(Report& r, const std::string& label, LinearCodeView& c, std::size_t k, std::size_t d,
                  std::optional<CodeClass> cls, const EnumOptions& opts) {
    const Distance got = c.min_distance(opts);
    const std::string want = "[" + std::to_string(c.n()) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
    r.check(c.k() == k && got == Distance(d), label + " is " + want + " (computed " + params(c, got) + ")");
    if (cls) {
        const CodeClass c_got = classify(c.n(), c.k(), got);
        r.check(c_got == *cls, label + " classified " + to_string(*cls) + " (computed " + to_string(c_got) + ")");
    }
}

// ---------------------------------------------------------------- 1 .. 6

void criterion1(Report& r, const EnumOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const Field f = FieldCtx::create(11);
    auto c = make_code(f, 2, 5, 1, -1, {"x+1", "x-1", "x-1", "x-1", "x+1"});
    r.check(c.sys.omega().value() == 2, "omega = 2");
    const auto fac = factor_binomial(f, 5, FieldElement::from_int(f, -1));
    std::vector<Poly> lin;
    for (const auto& fp : fac.factors) lin.push_back(fp.factor);
    std::vector<Poly> want;
    for (const char* t : {"y+9", "y+3", "y+1", "y+4", "y+5"}) want.push_back(Poly::parse(f, t, 'y'));
    r.check(lin == want, "y^5+1 = (y+9)(y+3)(y+1)(y+4)(y+5)");
    r.check(eta_list_is(c.sys, {"4y^4+8y^3+5y^2+10y+9", "5y^4+7y^3+y^2+8y+9", "9y^4+2y^3+9y^2+2y+9",
                                "3y^4+10y^3+4y^2+6y+9", "y^4+6y^3+3y^2+7y+9"}),
            "eta_0..eta_4 verbatim");
    LinearCodeView g = generator_matrix(c.spec, c.sys);
    LinearCodeView h = dual_matrix(c.spec, c.sys);
    check_params(r, "C1", g, 5, 6, CodeClass::MDS, opts);
    check_params(r, "dual", h, 5, 6, CodeClass::MDS, opts);
    r.check(g.weight_enumerator(opts) == h.weight_enumerator(opts), "W(C) = W(C-perp)");
    r.check(!is_self_dual(c.spec, c.sys).verdict, "is_self_dual = false");
    const double secs = seconds_since(t0);
    r.check(secs < kLimitRef1, "runtime " + fmt(secs) + " < 5s");
}

void criterion2(Report& r, const EnumOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const Field f = FieldCtx::create(11);
    auto c = make_code(f, 2, 5, 1, -1, {"x+1", "x-1", "1", "x-1", "x+1"});
    LinearCodeView g = generator_matrix(c.spec, c.sys);
    LinearCodeView h = dual_matrix(c.spec, c.sys);
    check_params(r, "C1", g, 6, 5, CodeClass::MDS, opts);
    check_params(r, "dual", h, 4, 7, CodeClass::MDS, opts);
    r.check(dual_generators(c.spec, c.sys).size() == 4, "dual has exactly 4 polynomial generators");
    r.check(h.k() == 4, "dual matrix has 4 rows");
    const double secs = seconds_since(t0);
    r.check(secs < kLimitRef2, "runtime " + fmt(secs) + " < 10s");
}

void criterion3(Report& r, const EnumOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const Field f = FieldCtx::create(7);
    auto c = make_code(f, 3, 2, -1, 2, {"x^2-x+1", "x+1"});
    r.check(eta_list_is(c.sys, {"6y+4", "y+4"}), "eta_0 = 6y+4, eta_1 = y+4");
    LinearCodeView g = generator_matrix(c.spec, c.sys);
    check_params(r, "C1", g, 3, 4, CodeClass::MDS, opts);
    LinearCodeView g2 = generator_matrix(c.spec, c.sys, View::C2);
    check_params(r, "C2", g2, 3, 4, CodeClass::MDS, opts);
    LinearCodeView dual = nullspace_dual(c.spec, c.sys);
    r.check(dual.k() == 3 && (g.generator() * dual.generator().transpose()).is_zero(), "nullspace dual has dimension 3");
    r.check(is_shift_closed(dual, c.spec.ambient(), f->inv(c.spec.ambient().alpha), f->inv(c.spec.ambient().beta)),
            "nullspace dual closed under inverse shifts");
    bool refused = false;
    try {
        (void)dual_matrix(c.spec, c.sys);
    } catch (const Error& e) {
        refused = e.code() == Errc::BetaNotPlusMinusOne;
    }
    r.check(refused, "dual_matrix refuses with BetaNotPlusMinusOne");
    const double secs = seconds_since(t0);
    r.check(secs < kLimitRef3, "runtime " + fmt(secs) + " < 1s");
}

void criterion4(Report& r, const EnumOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const Field f = FieldCtx::create(7);
    auto c = make_code(f, 3, 3, -1, -1, {"x^2-x+1", "x+1", "x^2-x+1"});
    LinearCodeView g = generator_matrix(c.spec, c.sys);
    LinearCodeView h = dual_matrix(c.spec, c.sys);
    check_params(r, "C1", g, 4, 4, CodeClass::NearMDS, opts);
    check_params(r, "dual", h, 5, 3, CodeClass::NearMDS, opts);
    const double secs = seconds_since(t0);
    r.check(secs < kLimitRef4, "runtime " + fmt(secs) + " < 2s");
}

void criterion5(Report& r, const EnumOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const Field f = FieldCtx::create(5);
    auto c = make_code(f, 2, 2, 1, -1, {"x-1", "x+1"});
    LinearCodeView g = generator_matrix(c.spec, c.sys);
    check_params(r, "C1", g, 2, 2, std::nullopt, opts);
    r.check(is_self_dual(c.spec, c.sys).verdict, "is_self_dual = true");
    r.check((g.generator() * g.generator().transpose()).is_zero(), "G G^T = 0");
    const double secs = seconds_since(t0);
    r.check(secs < kLimitRef5, "runtime " + fmt(secs) + " < 1s");
}

void criterion6(Report& r, const EnumOptions& opts) {
    const Field f = FieldCtx::create(13);
    auto c = make_code(f, 2, 6, 1, -1, {"x-1", "x-1", "x-1", "x+1", "x+1", "x+1"});
    r.check(is_self_dual(c.spec, c.sys).verdict, "is_self_dual = true");
    const LinearCodeView g = generator_matrix(c.spec, c.sys);
    r.check(g.k() == 6, "k = 6");
    for (const unsigned threads : {1U, 4U}) {
        const auto t0 = std::chrono::steady_clock::now();
        const Distance d = min_distance(g, {opts.budget, threads});
        const double secs = seconds_since(t0);
        const double limit = threads == 1 ? kLimitRef6Single : kLimitRef6Four;
        r.check(d == Distance(4), "d = 4 with " + std::to_string(threads) + " worker(s) (computed " + d.to_string() + ")");
        r.check(secs < limit, std::to_string(threads) + " worker(s): " + fmt(secs) + " < " + fmt(limit));
        r.note(std::to_string(threads) + "w " + fmt(secs));
    }
}

// ---------------------------------------------------------------- 7

struct Sample {
    Field field;
    std::string name;
};

std::vector<Sample> idempotent_fields() {
    return {{FieldCtx::create(5), "5"},
            {FieldCtx::create(7), "7"},
            {FieldCtx::create(3, 2, std::vector<std::int64_t>{1, 0, 1}), "9"},
            {FieldCtx::create(11), "11"},
            {FieldCtx::create(13), "13"}};
}

void criterion7(Report& r, const EnumOptions&) {
    std::size_t systems = 0, unit = 0;
    for (const auto& [f, name] : idempotent_fields())
        for (std::size_t l = 1; l <= 6; ++l)
            for (Elem b = 1; b < f->q(); ++b) {
                const FieldElement beta(f, b);
                if ((f->q() - 1) % (mul_order(beta) * l) != 0) continue;
                const auto sys = build_system(f, l, beta);
                const auto fails = audit(sys);
                r.check(fails.empty(), "q=" + name + " l=" + std::to_string(l) + " beta=" + std::to_string(b) + ": " +
                                           (fails.empty() ? "" : fails.front()));
                // Reciprocal map directly, for beta = +-1.
                if (b == 1 || b == f->neg(1)) {
                    ++unit;
                    r.check(sys.beta_is_unit_sign(), "reciprocal constants present for beta = +-1");
                    for (std::size_t k = 0; k < l; ++k) {
                        const auto [idx, sc] = eta_reciprocal(sys, k);
                        const std::size_t want = b == 1 ? (2 * l - 2 - k) % l : l - 1 - k;
                        r.check(idx == want && sys.eta(k).reciprocal() == sys.eta(idx).scaled(sc.value()),
                                "reciprocal map q=" + name + " l=" + std::to_string(l) + " k=" + std::to_string(k));
                    }
                }
                ++systems;
            }
    r.note(std::to_string(systems) + " systems, " + std::to_string(unit) + " with beta = +-1");
}

// ---------------------------------------------------------------- 8 .. 10

std::vector<Field> dual_fields() {
    return {FieldCtx::create(2),
            FieldCtx::create(3),
            FieldCtx::create(2, 2, std::vector<std::int64_t>{1, 1, 1}),
            FieldCtx::create(5),
            FieldCtx::create(7),
            FieldCtx::create(2, 3, std::vector<std::int64_t>{1, 1, 0, 1}),
            FieldCtx::create(3, 2, std::vector<std::int64_t>{1, 0, 1}),
            FieldCtx::create(11),
            FieldCtx::create(13)};
}

std::vector<Code> random_dual_specs(std::size_t count) {
    std::mt19937_64 rng(kAcceptanceSeed);
    const auto fields = dual_fields();
    std::vector<Code> out;
    while (out.size() < count) {
        const Field& f = fields[rng() % fields.size()];
        const std::size_t s = 1 + rng() % 6, l = 1 + rng() % 6;
        const Elem alpha = rng() % 2 ? 1 : f->neg(1);
        const Elem beta = rng() % 2 ? 1 : f->neg(1);
        const FieldElement b(f, beta);
        if ((f->q() - 1) % (mul_order(b) * l) != 0) continue;
        const auto divisors = monic_divisors(factor_binomial(f, s, FieldElement(f, alpha)));
        std::vector<Poly> ps;
        for (std::size_t j = 0; j < l; ++j) ps.push_back(divisors[rng() % divisors.size()]);
        CodeSpec spec = validate_spec(CodeParams{f, s, l, FieldElement(f, alpha), b, std::move(ps)});
        out.push_back({f, std::move(spec), build_system(f, l, b)});
    }
    return out;
}

std::string describe(const CodeSpec& spec) {
    std::string d = "q=" + std::to_string(spec.field()->q()) + " s=" + std::to_string(spec.s()) +
                    " l=" + std::to_string(spec.l()) + " alpha=" + std::to_string(spec.ambient().alpha) +
                    " beta=" + std::to_string(spec.ambient().beta) + " (";
    for (std::size_t j = 0; j < spec.l(); ++j) d += (j ? ", " : "") + spec.divisors()[j].to_string();
    return d + ")";
}

void criterion8(Report& r, const EnumOptions&) {
    std::size_t nontrivial = 0;
    for (const auto& c : random_dual_specs(kRandomDualSpecs)) {
        const LinearCodeView g = generator_matrix(c.spec, c.sys);
        const LinearCodeView h = dual_matrix(c.spec, c.sys);
        const RowSpace oracle(nullspace(g.generator()));
        r.check(h.row_space() == oracle, "H = nullspace(G) for " + describe(c.spec));
        r.check(h.k() == 0 || (g.generator() * h.generator().transpose()).is_zero(), "G H^T = 0 for " + describe(c.spec));
        r.check(g.k() + h.k() == c.spec.n(), "rank(G) + rank(H) = sl for " + describe(c.spec));
        nontrivial += g.k() != 0 && h.k() != 0;
    }
    r.note(std::to_string(kRandomDualSpecs) + " specs, " + std::to_string(nontrivial) + " with 0 < k < n");
}

// Calls fn on every divisor tuple of the screen's parameter grid.
void for_each_screen_spec(const std::function<void(const Code&)>& fn) {
    for (const std::uint64_t p : {5, 7, 11, 13}) {
        const Field f = FieldCtx::create(p);
        for (std::size_t s = 2; s <= 4; ++s) {
            if (std::gcd<std::uint64_t>(s, p) != 1) continue;
            for (const std::int64_t alpha : {1, -1}) {
                if (alpha == -1 && s % 2 == 0) continue;
                const auto divisors = monic_divisors(factor_binomial(f, s, FieldElement::from_int(f, alpha)));
                for (std::size_t l = 1; l <= 4; ++l) {
                    if ((p - 1) % l != 0) continue;
                    const FieldElement beta(f, 1);
                    const auto sys = build_system(f, l, beta);
                    std::vector<std::size_t> idx(l, 0);
                    for (;;) {
                        std::vector<Poly> ps;
                        for (auto i : idx) ps.push_back(divisors[i]);
                        CodeSpec spec = validate_spec(
                            CodeParams{f, s, l, FieldElement::from_int(f, alpha), beta, std::move(ps)});
                        fn(Code{f, std::move(spec), sys});
                        std::size_t j = l;
                        while (j > 0 && ++idx[j - 1] == divisors.size()) idx[--j] = 0;
                        if (j == 0) break;
                    }
                }
            }
        }
    }
}

void criterion9(Report& r, const EnumOptions&) {
    std::size_t tuples = 0;
    for_each_screen_spec([&](const Code& c) {
        ++tuples;
        r.check(theorem5_screen(c.spec), "screen applies to " + describe(c.spec));
        r.check(!is_self_dual(c.spec, c.sys).verdict, "not self-dual: " + describe(c.spec));
    });
    r.note(std::to_string(tuples) + " divisor tuples");
}

void check_closure(Report& r, const Code& c) {
    const Ambient& a = c.spec.ambient();
    const auto& f = *c.field;
    const LinearCodeView g1 = generator_matrix(c.spec, c.sys, View::C1);
    const LinearCodeView g2 = generator_matrix(c.spec, c.sys, View::C2);
    r.check(is_shift_closed(g1, a, a.alpha, a.beta), "G closed under sigma, tau: " + describe(c.spec));
    r.check(is_quasi_twisted(g1, c.spec.s(), a.alpha), "C1 alpha-quasi-twisted (s blocks): " + describe(c.spec));
    r.check(is_quasi_twisted(g2, c.spec.l(), a.beta), "C2 beta-quasi-twisted (l blocks): " + describe(c.spec));
    const LinearCodeView dual(nullspace(g1.generator()));
    r.check(is_shift_closed(dual, a, f.inv(a.alpha), f.inv(a.beta)),
            "nullspace(G) closed under inverse shifts: " + describe(c.spec));
}

void criterion10(Report& r, const EnumOptions&) {
    std::size_t specs = 0;
    for (const auto& c : random_dual_specs(kRandomDualSpecs)) {
        check_closure(r, c);
        ++specs;
    }
    for_each_screen_spec([&](const Code& c) {
        check_closure(r, c);
        ++specs;
    });
    r.note(std::to_string(specs) + " specs");
}

// ---------------------------------------------------------------- 11

void criterion11(Report& r, const EnumOptions&) {
    std::mt19937_64 rng(kAcceptanceSeed + 11);
    const std::vector<Field> fields{FieldCtx::create(2), FieldCtx::create(3), FieldCtx::create(5), FieldCtx::create(7),
                                    FieldCtx::create(3, 2, std::vector<std::int64_t>{1, 0, 1})};
    std::size_t zero = 0, nonzero = 0;
    for (std::size_t t = 0; t < kOrthogonalityPairs; ++t) {
        const Field& f = fields[rng() % fields.size()];
        const std::size_t s = 1 + rng() % 4, l = 1 + rng() % 4;
        const Ambient a{f, s, l, testing::random_nonzero(f, rng), testing::random_nonzero(f, rng)};
        RingElement2D x(a), y(a);
        switch (t % 3) {
            case 0:  // dense random
                x = testing::random_ring_element(a, rng);
                y = testing::random_ring_element(a, rng);
                break;
            case 1:  // sparse random
                x = testing::random_ring_element(a, rng, 0.25);
                y = testing::random_ring_element(a, rng, 0.25);
                break;
            default: {  // multiples of a complementary pair p(x), (x^s - alpha)/p(x)
                const auto ds = monic_divisors(factor_binomial(f, s, FieldElement(f, a.alpha)));
                const Poly& p = ds[rng() % ds.size()];
                const Poly cof = Poly::binomial(f, s, a.alpha) / p;
                const auto u = RingElement2D::product(a, p, testing::random_poly(f, l, rng));
                const auto v = RingElement2D::product(a, cof, testing::random_poly(f, l, rng));
                x = ring_mul(testing::random_ring_element(a, rng), u);
                y = ring_mul(testing::random_ring_element(a, rng), v);
            }
        }
        const bool product_zero = ring_mul(x, y).is_zero();
        (product_zero ? zero : nonzero)++;
        r.check(product_zero == orthogonality_criterion(x, y),
                "pair " + std::to_string(t) + " (q=" + std::to_string(f->q()) + ", s=" + std::to_string(s) +
                    ", l=" + std::to_string(l) + ")");
    }
    r.check(zero >= 100 && nonzero >= 100, "both outcomes exercised");
    r.note(std::to_string(zero) + " zero products, " + std::to_string(nonzero) + " nonzero");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance suite"};
    int only = 0;
    unsigned threads = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-11)")->check(CLI::Range(1, 11));
    app.add_option("--threads", threads, "Workers for enumeration in criteria 1-5 (0 = all cores)");
    CLI11_PARSE(app, argc, argv);

    const std::map<int, std::pair<std::string, std::function<void(Report&, const EnumOptions&)>>> criteria{
        {1, {"reference code 1 reproduction", criterion1}},
        {2, {"reference code 2 reproduction", criterion2}},
        {3, {"reference code 3 reproduction (beta = 2)", criterion3}},
        {4, {"reference code 4 reproduction", criterion4}},
        {5, {"reference code 5 reproduction", criterion5}},
        {6, {"reference code 6 reproduction and timing", criterion6}},
        {7, {"Idempotent identity suite", criterion7}},
        {8, {"Dual-oracle equivalence", criterion8}},
        {9, {"gcd(s,q) = 1 self-duality screen, exhaustive", criterion9}},
        {10, {"Closure properties", criterion10}},
        {11, {"Orthogonality criterion vs ring product", criterion11}},
    };

    const EnumOptions opts{kDefaultBudget, threads};
    bool all = true;
    for (const auto& [id, entry] : criteria) {
        if (only != 0 && id != only) continue;
        Report r;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            entry.second(r, opts);
        } catch (const Error& e) {
            r.check(false, "unexpected " + std::string(e.name()) + ": " + e.what());
        }
        const double secs = seconds_since(t0);
        all = all && r.ok();
        std::cout << (r.ok() ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << entry.first << "  ("
                  << r.checks() << " checks, " << fmt(secs);
        for (const auto& n : r.notes()) std::cout << "; " << n;
        std::cout << ")\n";
        const std::size_t shown = std::min<std::size_t>(r.failures().size(), 10);
        for (std::size_t i = 0; i < shown; ++i) std::cout << "        failed: " << r.failures()[i] << '\n';
        if (r.failures().size() > shown) std::cout << "        ... " << r.failures().size() - shown << " more\n";
    }
    return all ? 0 : 1;
}
