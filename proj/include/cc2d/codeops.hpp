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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cc2d/gf.hpp"

namespace cc2d {

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static Matrix from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);
    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Elem> r);
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const noexcept;
    /// Matrix formed by the given column indices, in order.
    Matrix select_columns(std::span<const std::size_t> cols) const;

    bool operator==(const Matrix& o) const {
        return field_.get() == o.field_.get() && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix form;  // same shape as the input, zero rows at the bottom
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : M v^T = 0}, one vector per row; cols(M) - rank(M) rows.
Matrix nullspace(const Matrix& m);

/// The row space of a matrix in canonical (reduced echelon) form.
class RowSpace {
public:
    explicit RowSpace(const Matrix& spanning);

    std::size_t dimension() const noexcept { return basis_.rows(); }
    std::size_t length() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    bool contains(std::span<const Elem> v) const;
    bool operator==(const RowSpace& o) const { return basis_ == o.basis_; }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Minimum distance with an explicit marker for the zero code, which has no
/// nonzero codewords.
class Distance {
public:
    static Distance infinite() { return Distance(); }
    explicit Distance(std::size_t d) : d_(d) {}

    bool is_infinite() const noexcept { return !d_.has_value(); }
    /// Throws InvalidArgument for the infinite marker.
    std::size_t value() const;
    std::string to_string() const { return d_ ? std::to_string(*d_) : "inf"; }
    bool operator==(const Distance& o) const { return d_ == o.d_; }

private:
    Distance() = default;
    std::optional<std::size_t> d_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumOptions {
    std::uint64_t budget = kDefaultBudget;  // max codewords (or column subsets) visited
    unsigned threads = 0;                   // 0 = hardware concurrency
};

/// A linear code given by a full-rank generator matrix, with lazily filled
/// distance and weight-enumerator caches.
class LinearCodeView {
public:
    /// Rows must be linearly independent (InvalidArgument otherwise).
    explicit LinearCodeView(Matrix generator);
    /// Keeps a basis of the row space of an arbitrary spanning matrix.
    static LinearCodeView from_spanning(const Matrix& m);

    const Field& field() const noexcept { return g_.field(); }
    std::size_t n() const noexcept { return g_.cols(); }
    std::size_t k() const noexcept { return g_.rows(); }
    const Matrix& generator() const noexcept { return g_; }
    RowSpace row_space() const { return RowSpace(g_); }

    Distance min_distance(const EnumOptions& opts = {});
    const std::vector<std::uint64_t>& weight_enumerator(const EnumOptions& opts = {});
    const std::optional<Distance>& cached_distance() const noexcept { return d_; }
    const std::optional<std::vector<std::uint64_t>>& cached_weights() const noexcept { return w_; }

private:
    Matrix g_;
    std::optional<Distance> d_;
    std::optional<std::vector<std::uint64_t>> w_;
};

/// q^k, or nullopt if it exceeds 2^63.
std::optional<std::uint64_t> codeword_count(const LinearCodeView& code);

/// Exhaustive minimum distance over all nonzero codewords. The message space
/// is split into contiguous blocks, one per worker. BudgetExceeded when q^k > budget.
Distance min_distance(const LinearCodeView& code, const EnumOptions& opts = {});

/// W[w] = number of codewords of weight w, w = 0..n. Same budget rule.
std::vector<std::uint64_t> weight_enumerator(const LinearCodeView& code, const EnumOptions& opts = {});

/// Minimum distance as the smallest number of linearly dependent columns of
/// a parity-check matrix; visits column subsets instead of codewords.
Distance min_distance_by_columns(const LinearCodeView& code, const EnumOptions& opts = {});

/// Picks whichever exhaustive route is cheaper for this code.
Distance min_distance_auto(const LinearCodeView& code, const EnumOptions& opts = {});

enum class CodeClass { MDS, NearMDS, Other };

/// MDS iff d = n-k+1, near-MDS iff d = n-k. The zero code is Other.
CodeClass classify(std::size_t n, std::size_t k, const Distance& d);
CodeClass classify(LinearCodeView& code, const EnumOptions& opts = {});
std::string to_string(CodeClass c);

/// (lambda a^(b-1) | a^(0) | ... | a^(b-2)) for v split into b equal blocks.
std::vector<Elem> block_shift(const Field& field, std::span<const Elem> v, std::size_t blocks, Elem lambda);

/// Closure of the code under block_shift with the given block count and twist.
bool is_quasi_twisted(const LinearCodeView& code, std::size_t blocks, Elem lambda);

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace cc2d
