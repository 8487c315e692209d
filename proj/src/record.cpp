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

#include "cc2d/record.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cc2d {

using json = nlohmann::ordered_json;

namespace {

json flag(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::optional<bool> read_flag(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<bool>();
}

std::string cell(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

}  // namespace

std::string to_json_line(const CodeRecord& r) {
    json j;
    j["q"] = r.q;
    j["p"] = r.p;
    j["m"] = r.m;
    j["s"] = r.s;
    j["l"] = r.l;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["divisors"] = r.divisors;
    j["view"] = r.view;
    j["role"] = r.role;
    j["n"] = r.n;
    j["k"] = r.k;
    if (!r.d)
        j["d"] = nullptr;
    else if (r.d->is_infinite())
        j["d"] = "inf";
    else
        j["d"] = r.d->value();
    j["mds"] = flag(r.mds);
    j["near_mds"] = flag(r.near_mds);
    j["self_dual"] = flag(r.self_dual);
    j["isodual_consistent"] = flag(r.isodual_consistent);
    j["theorem5_blocked"] = r.theorem5_blocked;
    return j.dump();
}

CodeRecord from_json_line(const std::string& line) {
    try {
        const json j = json::parse(line);
        CodeRecord r;
        r.q = j.at("q").get<std::uint64_t>();
        r.p = j.at("p").get<std::uint64_t>();
        r.m = j.at("m").get<unsigned>();
        r.s = j.at("s").get<std::size_t>();
        r.l = j.at("l").get<std::size_t>();
        r.alpha = j.at("alpha").get<Elem>();
        r.beta = j.at("beta").get<Elem>();
        r.divisors = j.at("divisors").get<std::vector<std::string>>();
        r.view = j.at("view").get<std::string>();
        r.role = j.at("role").get<std::string>();
        r.n = j.at("n").get<std::size_t>();
        r.k = j.at("k").get<std::size_t>();
        const auto& d = j.at("d");
        if (d.is_string()) {
            if (d.get<std::string>() != "inf") throw Error(Errc::ParseError, "d must be null, \"inf\" or an integer");
            r.d = Distance::infinite();
        } else if (!d.is_null()) {
            r.d = Distance(d.get<std::size_t>());
        }
        r.mds = read_flag(j, "mds");
        r.near_mds = read_flag(j, "near_mds");
        r.self_dual = read_flag(j, "self_dual");
        r.isodual_consistent = read_flag(j, "isodual_consistent");
        r.theorem5_blocked = j.at("theorem5_blocked").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("bad record: ") + e.what());
    }
}

std::string format_table(const std::vector<CodeRecord>& records) {
    std::ostringstream out;
    auto row = [&](const std::vector<std::string>& cells) {
        static constexpr int widths[] = {5, 3, 3, 6, 5, 5, 5, 4, 4, 4, 9, 10, 8, 4};
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i < std::size(widths))
                out << std::left << std::setw(widths[i]) << cells[i] << ' ';
            else
                out << cells[i];
        }
        out << '\n';
    };
    row({"q", "s", "l", "alpha", "beta", "view", "role", "n", "k", "d", "class", "self-dual", "isodual", "t5", "divisors"});
    for (const auto& r : records) {
        std::string cls = "-";
        if (r.mds && r.near_mds) cls = *r.mds ? "MDS" : (*r.near_mds ? "near-MDS" : "other");
        std::string divs;
        for (std::size_t i = 0; i < r.divisors.size(); ++i) divs += (i ? ", " : "") + r.divisors[i];
        row({std::to_string(r.q), std::to_string(r.s), std::to_string(r.l), std::to_string(r.alpha), std::to_string(r.beta),
             r.view, r.role, std::to_string(r.n), std::to_string(r.k), r.d ? r.d->to_string() : "-", cls,
             cell(r.self_dual), cell(r.isodual_consistent), r.theorem5_blocked ? "yes" : "no", divs});
    }
    return out.str();
}

std::vector<std::string> consistency_problems(const CodeRecord& r) {
    std::vector<std::string> out;
    if (r.self_dual.value_or(false) && !r.isodual_consistent.value_or(false))
        out.push_back("self_dual without isodual_consistent");
    if (r.theorem5_blocked && r.self_dual.value_or(false)) out.push_back("theorem5_blocked but self_dual");
    if (r.mds.value_or(false) && r.near_mds.value_or(false)) out.push_back("both MDS and near-MDS");
    if (r.d && r.mds) {
        const CodeClass c = classify(r.n, r.k, *r.d);
        if (*r.mds != (c == CodeClass::MDS) || r.near_mds != (c == CodeClass::NearMDS))
            out.push_back("MDS flags disagree with n, k, d");
    }
    return out;
}

std::vector<std::string> divisor_texts(const CodeSpec& spec) {
    std::vector<std::string> out;
    for (const auto& p : spec.divisors()) out.push_back(p.to_string('x'));
    return out;
}

namespace {

void set_distance(CodeRecord& r, const Distance& d) {
    r.d = d;
    const CodeClass c = classify(r.n, r.k, d);
    r.mds = c == CodeClass::MDS;
    r.near_mds = c == CodeClass::NearMDS;
}

bool within_budget(const LinearCodeView& code, const EnumOptions& opts) {
    const auto count = codeword_count(code);
    return count && *count <= opts.budget;
}

}  // namespace

Analysis analyze(const CodeSpec& spec, const IdempotentSystem& sys, const AnalysisOptions& opts) {
    Analysis out;
    CodeRecord& rec = out.code;
    const auto& field = spec.field();
    rec.q = field->q();
    rec.p = field->p();
    rec.m = field->m();
    rec.s = spec.s();
    rec.l = spec.l();
    rec.alpha = spec.ambient().alpha;
    rec.beta = spec.ambient().beta;
    rec.divisors = divisor_texts(spec);
    rec.view = opts.view == View::C1 ? "C1" : "C2";

    LinearCodeView g = generator_matrix(spec, sys, opts.view);
    rec.n = g.n();
    rec.k = g.k();

    try {
        rec.theorem5_blocked = theorem5_screen(spec);
    } catch (const Error& e) {
        if (e.code() != Errc::PreconditionUnmet) throw;
    }

    const bool unit_signs = spec.alpha_is_unit_sign() && spec.beta_is_unit_sign();
    if (opts.selfdual) {
        if (unit_signs) {
            out.report = is_self_dual(spec, sys);
            rec.self_dual = out.report->verdict;
        } else {
            rec.self_dual = g.row_space() == nullspace_dual(spec, sys, opts.view).row_space();
        }
        if (rec.theorem5_blocked && *rec.self_dual)
            throw Error(Errc::InternalDisagreement, "screened code reported self-dual");
    }

    std::optional<LinearCodeView> h;
    if (opts.dual) {
        if (unit_signs) {
            h.emplace(dual_matrix(spec, sys, opts.view));
        } else {
            h.emplace(nullspace_dual(spec, sys, opts.view));
            out.dual_from_nullspace = true;
            const Elem ai = field->inv(spec.ambient().alpha);
            const Elem bi = field->inv(spec.ambient().beta);
            if (!is_shift_closed(nullspace_dual(spec, sys, View::C1), spec.ambient(), ai, bi))
                throw Error(Errc::InternalDisagreement, "nullspace dual is not closed under the inverse shifts");
        }
        out.dual = rec;
        out.dual->role = "dual";
        out.dual->k = h->k();
    }

    if (opts.mindist) {
        set_distance(rec, min_distance_auto(g, opts.enumeration));
        if (h) {
            set_distance(*out.dual, min_distance_auto(*h, opts.enumeration));
            if (within_budget(g, opts.enumeration) && within_budget(*h, opts.enumeration))
                rec.isodual_consistent = g.weight_enumerator(opts.enumeration) == h->weight_enumerator(opts.enumeration);
        }
    }
    if (rec.self_dual.value_or(false)) rec.isodual_consistent = true;

    if (out.dual) {
        out.dual->self_dual = rec.self_dual;
        out.dual->isodual_consistent = rec.isodual_consistent;
        out.dual->theorem5_blocked = rec.theorem5_blocked;
    }
    return out;
}

}  // namespace cc2d
