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

#include <doctest.h>

#include <functional>

#include "cc2d/codeops.hpp"
#include "cc2d/error.hpp"
#include "support.hpp"

using namespace cc2d;
using cc2d::testing::kSeed;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = testing::random_elem(f, rng);
    return m;
}

// Plain recursive enumeration of every message, single-threaded.
std::vector<std::uint64_t> naive_weights(const Matrix& g) {
    const auto& f = g.field();
    std::vector<std::uint64_t> w(g.cols() + 1, 0);
    std::vector<Elem> word(g.cols(), 0);
    std::function<void(std::size_t, std::vector<Elem>)> rec = [&](std::size_t i, std::vector<Elem> acc) {
        if (i == g.rows()) {
            std::size_t wt = 0;
            for (auto e : acc) wt += e != 0;
            ++w[wt];
            return;
        }
        for (Elem c = 0; c < f->q(); ++c) {
            auto next = acc;
            for (std::size_t j = 0; j < g.cols(); ++j) next[j] = f->add(next[j], f->mul(c, g(i, j)));
            rec(i + 1, std::move(next));
        }
    };
    rec(0, word);
    return w;
}

Matrix reed_solomon(const Field& f, std::size_t n, std::size_t k) {
    // Evaluations of 1, x, ..., x^{k-1} at n distinct nonzero points.
    Matrix g(f, k, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) g(i, j) = f->pow(static_cast<Elem>(j + 1), i);
    return g;
}

}  // namespace

TEST_CASE("rref and rank") {
    const Field f = FieldCtx::create(7);
    CHECK(rank(Matrix(f, 3, 4)) == 0);
    const Matrix id = Matrix::identity(f, 4);
    CHECK(rref(id).form == id);
    CHECK(rref(id).rank == 4);

    std::mt19937_64 rng(kSeed);
    for (const auto& fld : testing::sample_fields())
        for (int t = 0; t < 20; ++t) {
            const Matrix m = random_matrix(fld, 1 + t % 5, 1 + (t * 7) % 8, rng);
            const auto r = rref(m);
            CHECK(r.rank <= std::min(m.rows(), m.cols()));
            for (std::size_t i = 0; i < r.rank; ++i) {
                CHECK(r.form(i, r.pivots[i]) == 1);
                for (std::size_t k = 0; k < m.rows(); ++k)
                    if (k != i) CHECK(r.form(k, r.pivots[i]) == 0);
            }
            CHECK(RowSpace(m) == RowSpace(r.form));
        }
}

TEST_CASE("nullspace") {
    const Field f = FieldCtx::create(5);
    CHECK(nullspace(Matrix::identity(f, 3)).rows() == 0);
    const Matrix z = nullspace(Matrix(f, 0, 4));
    CHECK(RowSpace(z) == RowSpace(Matrix::identity(f, 4)));
    CHECK(nullspace(Matrix(f, 2, 4)).rows() == 4);

    std::mt19937_64 rng(kSeed);
    for (const auto& fld : testing::sample_fields())
        for (int t = 0; t < 20; ++t) {
            const Matrix m = random_matrix(fld, 1 + t % 4, 2 + t % 7, rng);
            const Matrix n = nullspace(m);
            CHECK(n.rows() == m.cols() - rank(m));
            if (n.rows() > 0) CHECK((m * n.transpose()).is_zero());
            CHECK(RowSpace(nullspace(n)) == RowSpace(m));
        }
}

TEST_CASE("row space membership") {
    const Field f = FieldCtx::create(3);
    const RowSpace s(Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}}, 3));
    CHECK(s.dimension() == 2);
    CHECK(s.contains(std::vector<Elem>{1, 2, 1}));
    CHECK(!s.contains(std::vector<Elem>{1, 0, 0}));
    CHECK_THROWS_AS(s.contains(std::vector<Elem>{1, 0}), Error);
}

TEST_CASE("distance marker") {
    CHECK(Distance::infinite().is_infinite());
    CHECK(Distance::infinite().to_string() == "inf");
    CHECK(Distance(3).value() == 3);
    CHECK_THROWS_AS(Distance::infinite().value(), Error);
    CHECK(!(Distance::infinite() == Distance(0)));
}

TEST_CASE("enumeration agrees with a naive oracle") {
    std::mt19937_64 rng(kSeed);
    for (const auto& fld : testing::sample_fields()) {
        if (fld->q() > 11) continue;
        for (int t = 0; t < 6; ++t) {
            const std::size_t k = 1 + t % 3, n = k + 2 + t % 4;
            const auto view = LinearCodeView::from_spanning(random_matrix(fld, k, n, rng));
            if (view.k() == 0) continue;
            const auto want = naive_weights(view.generator());
            for (unsigned threads : {1U, 2U, 3U, 7U}) {
                const EnumOptions opts{kDefaultBudget, threads};
                CHECK(weight_enumerator(view, opts) == want);
                std::size_t d = 1;
                while (want[d] == 0) ++d;
                CHECK(min_distance(view, opts) == Distance(d));
            }
            std::size_t d = 1;
            while (want[d] == 0) ++d;
            CHECK(min_distance_by_columns(view) == Distance(d));
            CHECK(min_distance_auto(view) == Distance(d));
            std::uint64_t total = 0;
            for (auto c : want) total += c;
            CHECK(want[0] == 1);
            CHECK(total == *codeword_count(view));
        }
    }
}

TEST_CASE("Reed-Solomon codes are MDS") {
    const Field f = FieldCtx::create(11);
    for (std::size_t k = 1; k <= 5; ++k) {
        LinearCodeView rs(reed_solomon(f, 10, k));
        CHECK(rs.min_distance() == Distance(11 - k));
        CHECK(classify(rs) == CodeClass::MDS);
        CHECK(min_distance_by_columns(rs) == Distance(11 - k));
    }
    const Field f16 = testing::sample_fields()[8];
    LinearCodeView rs16(reed_solomon(f16, 15, 3));
    CHECK(min_distance_by_columns(rs16) == Distance(13));
}

TEST_CASE("zero code and budget") {
    const Field f = FieldCtx::create(13);
    LinearCodeView zero(Matrix(f, 0, 5));
    CHECK(zero.min_distance().is_infinite());
    CHECK(min_distance_auto(zero).is_infinite());
    CHECK(min_distance_by_columns(zero).is_infinite());
    CHECK(zero.weight_enumerator() == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});
    CHECK(classify(zero) == CodeClass::Other);

    LinearCodeView big(Matrix::identity(f, 7));
    try {
        min_distance(big, {1000, 1});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
    }
    CHECK_THROWS_AS(weight_enumerator(big, {1000, 1}), Error);
    CHECK(min_distance_auto(big, {1000, 1}) == Distance(1));
    CHECK_THROWS_AS(LinearCodeView(Matrix::from_rows(f, {{1, 2}, {2, 4}}, 2)), Error);
    CHECK(LinearCodeView::from_spanning(Matrix::from_rows(f, {{1, 2}, {2, 4}}, 2)).k() == 1);
}

TEST_CASE("caching view") {
    const Field f = FieldCtx::create(7);
    LinearCodeView v(reed_solomon(f, 6, 2));
    CHECK(!v.cached_distance());
    CHECK(v.min_distance() == Distance(5));
    CHECK(v.cached_distance() == Distance(5));
    v.weight_enumerator();
    CHECK(v.cached_weights()->at(5) > 0);
}

TEST_CASE("classification") {
    CHECK(classify(10, 5, Distance(6)) == CodeClass::MDS);
    CHECK(classify(4, 2, Distance(2)) == CodeClass::NearMDS);
    CHECK(classify(12, 6, Distance(4)) == CodeClass::Other);
    // Singleton defect 2: neither MDS nor near-MDS under d = n-k+1 / d = n-k.
    CHECK(classify(9, 4, Distance(4)) == CodeClass::Other);
    CHECK(classify(5, 0, Distance::infinite()) == CodeClass::Other);
    CHECK(to_string(CodeClass::NearMDS) == "near-MDS");
}

TEST_CASE("block shift") {
    const Field f = FieldCtx::create(5);
    const std::vector<Elem> v{1, 2, 3, 4, 0, 1};
    CHECK(block_shift(f, v, 3, 2) == std::vector<Elem>{0, 2, 1, 2, 3, 4});
    CHECK(block_shift(f, v, 6, 1) == std::vector<Elem>{1, 1, 2, 3, 4, 0});
    CHECK_THROWS_AS(block_shift(f, v, 4, 1), Error);
    // The [3,1] repetition code is quasi-cyclic with 3 blocks, not 2-twisted.
    LinearCodeView rep(Matrix::from_rows(f, {{1, 1, 1}}, 3));
    CHECK(is_quasi_twisted(rep, 3, 1));
    CHECK(!is_quasi_twisted(rep, 3, 2));
    CHECK(dot(f, v, v) == (1 + 4 + 9 + 16 + 0 + 1) % 5);
}
