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

// Command-line front end: examples, idempotents, factor, build, search.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cc2d/code2d.hpp"
#include "cc2d/codeops.hpp"
#include "cc2d/error.hpp"
#include "cc2d/examples.hpp"
#include "cc2d/idempotent.hpp"
#include "cc2d/poly.hpp"
#include "cc2d/record.hpp"
#include "cc2d/spec_file.hpp"

namespace {

using namespace cc2d;

struct Globals {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultFactorSeed;
    unsigned threads = 0;
    std::string modulus;

    EnumOptions enumeration() const { return {budget, threads}; }
    std::optional<std::string> modulus_text() const {
        return modulus.empty() ? std::nullopt : std::optional<std::string>(modulus);
    }
};

struct FieldArgs {
    std::uint64_t p = 0;
    unsigned m = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& f) {
    cmd->add_option("-p,--p", f.p, "Field characteristic")->required();
    cmd->add_option("-m,--m", f.m, "Extension degree (needs --modulus when > 1)")->check(CLI::PositiveNumber);
}

std::string factorization_text(const Factorization& f, char var) {
    std::ostringstream out;
    if (!f.unit.is_one()) out << f.unit.to_string();
    for (const auto& fp : f.factors) {
        out << "(" << fp.factor.to_string(var) << ")";
        if (fp.multiplicity > 1) out << "^" << fp.multiplicity;
    }
    return out.str();
}

int cmd_examples(const Globals& g, int only) {
    bool all_pass = true;
    for (const auto& ref : reference_codes()) {
        if (only != 0 && ref.number != only) continue;
        const auto start = std::chrono::steady_clock::now();
        const auto claims = check_reference_code(ref.number, g.enumeration());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "Reference code " << ref.number << " (q=" << ref.spec.p << ", s=" << ref.spec.s << ", l=" << ref.spec.l
                  << ", alpha=" << ref.spec.alpha << ", beta=" << ref.spec.beta << ")  " << std::fixed
                  << std::setprecision(2) << secs << "s\n";
        for (const auto& c : claims) {
            all_pass = all_pass && c.pass;
            std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.text;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << '\n';
        }
    }
    std::cout << (all_pass ? "all claims reproduced\n" : "some claims FAILED\n");
    return all_pass ? 0 : 1;
}

int cmd_idempotents(const Globals& g, const FieldArgs& fa, std::size_t l, std::int64_t beta_int) {
    const Field field = make_field(fa.p, fa.m, g.modulus_text());
    const FieldElement beta = scalar_from_int(field, beta_int);
    const IdempotentSystem sys = build_system(field, l, beta);
    std::cout << "q = " << field->q() << ", l = " << l << ", beta = " << beta.to_string() << ", r = " << sys.r()
              << ", omega = " << sys.omega().to_string() << "\n";
    std::cout << "y^" << l << " - " << beta.to_string() << " = "
              << factorization_text(factor_binomial(field, l, beta, g.seed), 'y') << "\n";
    std::cout << "Q = " << sys.Q().to_string('y') << "\n";
    for (std::size_t k = 0; k < l; ++k) {
        std::cout << "eta_" << k << " = " << sys.eta(k).to_string('y') << "    root " << sys.root(k).to_string()
                  << ", c_" << k << " = " << sys.c()[k].to_string();
        if (sys.beta_is_unit_sign())
            std::cout << ", eta_" << k << "^* = " << sys.b()[k].to_string() << " eta_" << sys.recip_index()[k];
        std::cout << '\n';
    }
    const auto failures = audit(sys);
    for (const auto& f : failures) std::cout << "identity failed: " << f << '\n';
    std::cout << (failures.empty() ? "all identities hold\n" : "identity check FAILED\n");
    return failures.empty() ? 0 : 1;
}

int cmd_factor(const Globals& g, const FieldArgs& fa, const std::string& poly, std::size_t n, std::int64_t c,
               bool divisors) {
    const Field field = make_field(fa.p, fa.m, g.modulus_text());
    Factorization f = poly.empty() ? factor_binomial(field, n, scalar_from_int(field, c), g.seed)
                                   : factor(Poly::parse(field, poly, 'x'), g.seed);
    const Poly target = poly.empty() ? Poly::binomial(field, n, scalar_from_int(field, c).value()) : Poly::parse(field, poly, 'x');
    std::cout << target.to_string() << " = " << factorization_text(f, 'x') << "\n";
    if (f.expand() != target) throw Error(Errc::InternalDisagreement, "factorization does not multiply back");
    if (divisors) {
        const auto ds = monic_divisors(f);
        std::cout << ds.size() << " monic divisors:\n";
        for (const auto& d : ds) std::cout << "  " << d.to_string() << '\n';
    }
    return 0;
}

void print_report(const CodeSpec& spec, const SelfDualReport& r) {
    const std::size_t sum = spec.n() - spec.dimension();
    std::cout << "self-duality: sl = " << spec.n() << ", 2*sum(a_j) = " << 2 * sum
              << (r.dimension_ok ? " (ok)" : " (fails)") << '\n';
    for (std::size_t k = 0; k < r.partner.size(); ++k) {
        std::cout << "  k=" << k << " partner " << r.partner[k] << ": ";
        if (r.pair_witnesses[k])
            std::cout << "t = " << r.pair_witnesses[k]->t.to_string() << ", t' = " << r.pair_witnesses[k]->t_prime.to_string();
        else
            std::cout << "divisibility fails";
        std::cout << '\n';
    }
    std::cout << "  verdict: " << (r.verdict ? "self-dual" : "not self-dual") << '\n';
}

int cmd_build(const Globals& g, const std::string& path, AnalysisOptions opts, bool as_json) {
    SpecFile file = read_spec_file(path);
    if (!file.modulus) file.modulus = g.modulus_text();
    const Field field = make_field(file.p, file.m, file.modulus);
    const CodeSpec spec = validate_spec(to_params(file, field));
    const IdempotentSystem sys = build_system(field, spec.l(), spec.beta());
    opts.enumeration = g.enumeration();
    const Analysis a = analyze(spec, sys, opts);
    std::vector<CodeRecord> records{a.code};
    if (a.dual) records.push_back(*a.dual);
    if (as_json) {
        for (const auto& r : records) std::cout << to_json_line(r) << '\n';
        return 0;
    }
    std::cout << format_table(records);
    if (a.dual_from_nullspace) std::cout << "dual computed as the nullspace of G (alpha or beta outside {1,-1})\n";
    if (a.report) print_report(spec, *a.report);
    return 0;
}

struct SearchArgs {
    FieldArgs field;
    std::size_t s = 0, l = 0;
    std::int64_t alpha = 1, beta = 1;
    bool self_dual_only = false, mds_only = false, as_json = false;
    std::size_t max_codes = 0;
    std::string view = "c1";
};

int cmd_search(const Globals& g, const SearchArgs& sa) {
    const Field field = make_field(sa.field.p, sa.field.m, g.modulus_text());
    const FieldElement alpha = scalar_from_int(field, sa.alpha);
    const FieldElement beta = scalar_from_int(field, sa.beta);
    if (alpha.is_zero() || beta.is_zero()) throw Error(Errc::ZeroAlphaBeta, "alpha and beta must be nonzero");
    const IdempotentSystem sys = build_system(field, sa.l, beta);
    const auto divisors = monic_divisors(factor_binomial(field, sa.s, alpha, g.seed));

    std::uint64_t tuples = 1;
    for (std::size_t j = 0; j < sa.l; ++j) {
        if (tuples > g.budget / divisors.size())
            throw Error(Errc::BudgetExceeded, std::to_string(divisors.size()) + "^" + std::to_string(sa.l) +
                                                  " divisor tuples exceed the budget of " + std::to_string(g.budget));
        tuples *= divisors.size();
    }

    AnalysisOptions opts;
    opts.view = sa.view == "c2" ? View::C2 : View::C1;
    opts.enumeration = g.enumeration();
    opts.selfdual = true;
    std::vector<CodeRecord> found;
    std::vector<std::size_t> idx(sa.l, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::vector<Poly> ps;
        for (const auto i : idx) ps.push_back(divisors[i]);
        const CodeSpec spec = validate_spec(CodeParams{field, sa.s, sa.l, alpha, beta, std::move(ps)});
        opts.mindist = false;
        Analysis a = analyze(spec, sys, opts);
        if (!sa.self_dual_only || a.code.self_dual.value_or(false)) {
            opts.mindist = true;
            a = analyze(spec, sys, opts);
            if (!sa.mds_only || a.code.mds.value_or(false)) found.push_back(a.code);
        }
        for (std::size_t j = sa.l; j-- > 0;) {
            if (++idx[j] < divisors.size()) break;
            idx[j] = 0;
        }
    }

    auto dkey = [](const CodeRecord& r) -> long {
        return r.d && !r.d->is_infinite() ? static_cast<long>(r.d->value()) : -1;
    };
    std::stable_sort(found.begin(), found.end(), [&](const CodeRecord& a, const CodeRecord& b) {
        if (dkey(a) != dkey(b)) return dkey(a) > dkey(b);
        return a.k < b.k;
    });
    if (sa.max_codes != 0 && found.size() > sa.max_codes) found.resize(sa.max_codes);

    if (sa.as_json) {
        for (const auto& r : found) std::cout << to_json_line(r) << '\n';
    } else {
        std::cout << format_table(found);
        std::cout << found.size() << " code(s) listed from " << tuples << " divisor tuples\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-dimensional constacyclic codes over finite fields"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget", g.budget, "Maximum codewords (or column subsets, or divisor tuples) to enumerate")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for equal-degree factorization splitting")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for enumeration (0 = all cores)");
    app.add_option("--modulus", g.modulus, "Irreducible modulus in x over F_p for extension fields");

    int only = 0;
    auto* ex = app.add_subcommand("examples", "Rebuild the six reference codes and check every listed property");
    ex->add_option("--only", only, "Check a single reference code (1-6)")->check(CLI::Range(1, 6));

    FieldArgs idf;
    std::size_t id_l = 0;
    std::int64_t id_beta = 1;
    auto* id = app.add_subcommand("idempotents", "Print omega, Q and the eta_k idempotents of F_q[y]/(y^l - beta)");
    add_field_options(id, idf);
    id->add_option("-l,--l", id_l, "Degree l")->required()->check(CLI::PositiveNumber);
    id->add_option("--beta", id_beta, "beta (negative values allowed)")->required();

    FieldArgs ff;
    std::string poly;
    std::size_t fn = 0;
    std::int64_t fc = 1;
    bool fdiv = false;
    auto* fac = app.add_subcommand("factor", "Factor x^n - c (or --poly) over F_q");
    add_field_options(fac, ff);
    fac->add_option("-n,--n", fn, "Exponent n of x^n - c");
    fac->add_option("-c,--c", fc, "Constant c of x^n - c")->capture_default_str();
    fac->add_option("--poly", poly, "Arbitrary polynomial in x instead of a binomial");
    fac->add_flag("--divisors", fdiv, "Also list all monic divisors");

    std::string spec_path, view = "c1";
    AnalysisOptions bopts;
    bool bjson = false;
    auto* build = app.add_subcommand("build", "Build a code from a spec file");
    build->add_option("spec", spec_path, "Spec file")->required();
    build->add_flag("--dual", bopts.dual, "Also build the dual code");
    build->add_flag("--mindist", bopts.mindist, "Compute minimum distances");
    build->add_flag("--selfdual", bopts.selfdual, "Decide self-duality");
    build->add_option("--view", view, "Flattening: c1 (row-major) or c2 (column-major)")
        ->check(CLI::IsMember({"c1", "c2"}));
    build->add_flag("--json", bjson, "One JSON record per line");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Enumerate every divisor tuple for (q, s, l, alpha, beta)");
    add_field_options(search, sa.field);
    search->add_option("-s,--s", sa.s, "s")->required()->check(CLI::PositiveNumber);
    search->add_option("-l,--l", sa.l, "l")->required()->check(CLI::PositiveNumber);
    search->add_option("--alpha", sa.alpha, "alpha")->required();
    search->add_option("--beta", sa.beta, "beta")->required();
    search->add_flag("--self-dual-only", sa.self_dual_only, "Keep only self-dual codes");
    search->add_flag("--mds-only", sa.mds_only, "Keep only MDS codes");
    search->add_option("--max-codes", sa.max_codes, "Print at most N codes (0 = all)");
    search->add_option("--view", sa.view, "c1 or c2")->check(CLI::IsMember({"c1", "c2"}));
    search->add_flag("--json", sa.as_json, "One JSON record per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*ex) return cmd_examples(g, only);
        if (*id) return cmd_idempotents(g, idf, id_l, id_beta);
        if (*fac) {
            if (poly.empty() && fn == 0) throw Error(Errc::InvalidArgument, "give --n (with --c) or --poly");
            return cmd_factor(g, ff, poly, fn, fc, fdiv);
        }
        if (*build) {
            bopts.view = view == "c2" ? View::C2 : View::C1;
            return cmd_build(g, spec_path, bopts, bjson);
        }
        if (*search) return cmd_search(g, sa);
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return is_user_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
