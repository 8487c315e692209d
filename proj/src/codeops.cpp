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

#include "cc2d/codeops.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace cc2d {

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    Matrix m(field, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) throw Error(Errc::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::InvalidArgument, "matrix shape mismatch");
    const auto& fd = *field_;
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Elem a = (*this)(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = fd.add(out(i, j), fd.mul(a, o(t, j)));
        }
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
    return out;
}

RrefResult rref(const Matrix& m) {
    const auto& fd = *m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        const Elem inv = fd.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = fd.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Elem f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = fd.sub(a(i, j), fd.mul(f, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    const auto& fd = *m.field();
    const auto [form, rk, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (const auto c : pivots) is_pivot[c] = true;
    Matrix basis(m.field(), 0, n);
    std::vector<Elem> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = fd.neg(form(i, free));
        basis.append_row(v);
    }
    return basis;
}

RowSpace::RowSpace(const Matrix& spanning) : basis_(spanning.field(), 0, spanning.cols()) {
    auto [form, rk, pivots] = rref(spanning);
    for (std::size_t i = 0; i < rk; ++i) basis_.append_row(form.row(i));
    pivots_ = std::move(pivots);
}

bool RowSpace::contains(std::span<const Elem> v) const {
    if (v.size() != length()) throw Error(Errc::InvalidArgument, "vector length mismatch");
    const auto& fd = *basis_.field();
    std::vector<Elem> w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Elem f = w[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = fd.sub(w[j], fd.mul(f, basis_(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

std::size_t Distance::value() const {
    if (!d_) throw Error(Errc::InvalidArgument, "the zero code has no minimum distance");
    return *d_;
}

LinearCodeView::LinearCodeView(Matrix generator) : g_(std::move(generator)) {
    if (rank(g_) != g_.rows()) throw Error(Errc::InvalidArgument, "generator rows are linearly dependent");
}

LinearCodeView LinearCodeView::from_spanning(const Matrix& m) { return LinearCodeView(RowSpace(m).basis()); }

Distance LinearCodeView::min_distance(const EnumOptions& opts) {
    if (!d_) d_ = cc2d::min_distance(*this, opts);
    return *d_;
}

const std::vector<std::uint64_t>& LinearCodeView::weight_enumerator(const EnumOptions& opts) {
    if (!w_) {
        w_ = cc2d::weight_enumerator(*this, opts);
        if (!d_) {
            const auto it = std::find_if(w_->begin() + 1, w_->end(), [](std::uint64_t c) { return c != 0; });
            d_ = it == w_->end() ? Distance::infinite() : Distance(static_cast<std::size_t>(it - w_->begin()));
        }
    }
    return *w_;
}

std::optional<std::uint64_t> codeword_count(const LinearCodeView& code) {
    std::uint64_t total = 1;
    const std::uint64_t q = code.field()->q();
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (total > (std::numeric_limits<std::uint64_t>::max() >> 1) / q) return std::nullopt;
        total *= q;
    }
    return total;
}

namespace {

unsigned worker_count(const EnumOptions& opts, std::uint64_t total) {
    unsigned t = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
    if (total < 4096) t = 1;
    return t;
}

std::uint64_t require_budget(const LinearCodeView& code, const EnumOptions& opts) {
    const auto total = codeword_count(code);
    if (!total || *total > opts.budget) {
        throw Error(Errc::BudgetExceeded, "enumeration of q^k = " + std::to_string(code.field()->q()) + "^" +
                                              std::to_string(code.k()) + " codewords exceeds the budget of " +
                                              std::to_string(opts.budget));
    }
    return *total;
}

// Walks every F_p-combination of the F_p-spanning set {t * g_i}, where t runs
// over an F_p-basis of F_q, in odometer order. Each step adds one spanning
// vector, so the current codeword is updated in O(n).
template <class Visit>
void enumerate_block(const Field& field, const std::vector<std::vector<Elem>>& span, std::uint64_t lo, std::uint64_t hi,
                     Visit&& visit) {
    const auto& fd = *field;
    const std::uint32_t p = fd.p();
    const std::size_t n = span.empty() ? 0 : span.front().size();
    std::vector<std::uint32_t> digit(span.size(), 0);
    std::vector<Elem> word(n, 0);
    std::uint64_t v = lo;
    for (std::size_t i = 0; i < span.size(); ++i) {
        digit[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
        const Elem scalar = fd.from_int(digit[i]);
        if (scalar == 0) continue;
        for (std::size_t j = 0; j < n; ++j) word[j] = fd.add(word[j], fd.mul(scalar, span[i][j]));
    }
    std::size_t weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }));
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        visit(weight);
        for (std::size_t i = 0; i < span.size(); ++i) {
            const auto& g = span[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (g[j] == 0) continue;
                const bool was_zero = word[j] == 0;
                word[j] = fd.add(word[j], g[j]);
                const bool is_zero = word[j] == 0;
                if (was_zero != is_zero) {
                    if (is_zero)
                        --weight;
                    else
                        ++weight;
                }
            }
            if (++digit[i] < p) break;
            digit[i] = 0;
        }
    }
}

std::vector<std::vector<Elem>> prime_span(const LinearCodeView& code) {
    const auto& fd = *code.field();
    std::vector<std::vector<Elem>> span;
    Elem basis_elem = 1;
    for (unsigned t = 0; t < fd.m(); ++t) {
        for (std::size_t i = 0; i < code.k(); ++i) {
            const auto row = code.generator().row(i);
            std::vector<Elem> v(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) v[j] = fd.mul(basis_elem, row[j]);
            span.push_back(std::move(v));
        }
        basis_elem *= fd.p();
    }
    return span;
}

template <class Partial, class Run, class Merge>
void run_partitioned(std::uint64_t total, unsigned workers, std::vector<Partial>& partials, Run&& run, Merge&& merge) {
    partials.resize(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
        if (workers == 1)
            run(lo, hi, partials[w]);
        else
            pool.emplace_back([&, lo, hi, w] { run(lo, hi, partials[w]); });
    }
    for (auto& t : pool) t.join();
    for (auto& p : partials) merge(p);
}

}  // namespace

Distance min_distance(const LinearCodeView& code, const EnumOptions& opts) {
    if (code.k() == 0) return Distance::infinite();
    const std::uint64_t total = require_budget(code, opts);
    const auto span = prime_span(code);
    const unsigned workers = worker_count(opts, total);
    std::vector<std::size_t> partials;
    std::size_t best = code.n() + 1;
    run_partitioned(
        total, workers, partials,
        [&](std::uint64_t lo, std::uint64_t hi, std::size_t& out) {
            std::size_t local = code.n() + 1;
            enumerate_block(code.field(), span, lo, hi, [&](std::size_t w) {
                if (w != 0 && w < local) local = w;
            });
            out = local;
        },
        [&](std::size_t v) { best = std::min(best, v); });
    return Distance(best);
}

std::vector<std::uint64_t> weight_enumerator(const LinearCodeView& code, const EnumOptions& opts) {
    std::vector<std::uint64_t> result(code.n() + 1, 0);
    if (code.k() == 0) {
        result[0] = 1;
        return result;
    }
    const std::uint64_t total = require_budget(code, opts);
    const auto span = prime_span(code);
    const unsigned workers = worker_count(opts, total);
    std::vector<std::vector<std::uint64_t>> partials;
    run_partitioned(
        total, workers, partials,
        [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
            out.assign(code.n() + 1, 0);
            enumerate_block(code.field(), span, lo, hi, [&](std::size_t w) { ++out[w]; });
        },
        [&](const std::vector<std::uint64_t>& part) {
            for (std::size_t w = 0; w < part.size(); ++w) result[w] += part[w];
        });
    return result;
}

namespace {

// Sum of C(n, w) for w = 1..upto, saturating.
std::uint64_t subsets_up_to(std::size_t n, std::size_t upto) {
    std::uint64_t total = 0;
    long double binom = 1;
    for (std::size_t w = 1; w <= upto && w <= n; ++w) {
        binom = binom * static_cast<long double>(n - w + 1) / static_cast<long double>(w);
        total += static_cast<std::uint64_t>(std::min<long double>(binom + 0.5L, 1e18L));
        if (total > 1'000'000'000'000'000ULL) return total;
    }
    return total;
}

}  // namespace

Distance min_distance_by_columns(const LinearCodeView& code, const EnumOptions& opts) {
    if (code.k() == 0) return Distance::infinite();
    const std::size_t n = code.n();
    const Matrix h = nullspace(code.generator());
    std::uint64_t visited = 0;
    std::vector<std::size_t> cols;
    for (std::size_t w = 1; w <= n; ++w) {
        // Iterate the w-subsets of {0..n-1} in lexicographic order.
        cols.resize(w);
        for (std::size_t i = 0; i < w; ++i) cols[i] = i;
        for (;;) {
            if (++visited > opts.budget)
                throw Error(Errc::BudgetExceeded, "column-subset search exceeds the budget of " + std::to_string(opts.budget));
            if (rank(h.select_columns(cols)) < w) return Distance(w);
            std::size_t i = w;
            while (i > 0 && cols[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < w; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    throw Error(Errc::InternalDisagreement, "no dependent column set found");
}

Distance min_distance_auto(const LinearCodeView& code, const EnumOptions& opts) {
    if (code.k() == 0) return Distance::infinite();
    const auto words = codeword_count(code);
    const std::uint64_t column_cost = subsets_up_to(code.n(), code.n() - code.k() + 1);
    if (words && *words <= opts.budget && *words <= column_cost) return min_distance(code, opts);
    if (column_cost <= opts.budget) return min_distance_by_columns(code, opts);
    return min_distance(code, opts);
}

CodeClass classify(std::size_t n, std::size_t k, const Distance& d) {
    if (d.is_infinite()) return CodeClass::Other;
    if (d.value() + k == n + 1) return CodeClass::MDS;
    if (d.value() + k == n) return CodeClass::NearMDS;
    return CodeClass::Other;
}

CodeClass classify(LinearCodeView& code, const EnumOptions& opts) {
    return classify(code.n(), code.k(), code.min_distance(opts));
}

std::string to_string(CodeClass c) {
    switch (c) {
        case CodeClass::MDS: return "MDS";
        case CodeClass::NearMDS: return "near-MDS";
        case CodeClass::Other: return "other";
    }
    return "other";
}

std::vector<Elem> block_shift(const Field& field, std::span<const Elem> v, std::size_t blocks, Elem lambda) {
    if (blocks == 0 || v.size() % blocks != 0) throw Error(Errc::InvalidArgument, "length is not a multiple of the block count");
    const std::size_t len = v.size() / blocks;
    std::vector<Elem> out(v.size());
    for (std::size_t j = 0; j < len; ++j) out[j] = field->mul(lambda, v[(blocks - 1) * len + j]);
    std::copy(v.begin(), v.end() - static_cast<std::ptrdiff_t>(len), out.begin() + static_cast<std::ptrdiff_t>(len));
    return out;
}

bool is_quasi_twisted(const LinearCodeView& code, std::size_t blocks, Elem lambda) {
    const RowSpace space = code.row_space();
    for (std::size_t i = 0; i < code.k(); ++i)
        if (!space.contains(block_shift(code.field(), code.generator().row(i), blocks, lambda))) return false;
    return true;
}

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "vector length mismatch");
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = field->add(acc, field->mul(a[i], b[i]));
    return acc;
}

}  // namespace cc2d
