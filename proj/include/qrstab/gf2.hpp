// Copyright 2026 The qrstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qrstab {

/// Dense binary matrix, row-major, 64 columns per word.
/// Bits past `cols()` in the last word of a row are always zero.
class Gf2Matrix {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return wpr_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) noexcept {
        Word mask = Word{1} << (c % kWordBits);
        Word &w = data_[r * wpr_ + c / kWordBits];
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) noexcept { data_[r * wpr_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    Word *row(std::size_t r) noexcept { return data_.data() + r * wpr_; }
    const Word *row(std::size_t r) const noexcept { return data_.data() + r * wpr_; }

    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    void swap_cols(std::size_t a, std::size_t b) noexcept;

    std::size_t row_weight(std::size_t r) const noexcept;
    bool row_is_zero(std::size_t r) const noexcept;
    bool is_zero() const noexcept;

    /// Copy of columns [first, first + count).
    Gf2Matrix col_block(std::size_t first, std::size_t count) const;

    friend bool operator==(const Gf2Matrix &a, const Gf2Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<Word> data_;
};

/// An element of F2[x]/(x^p - 1), kept as its sorted exponent support.
struct SupportPoly {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> support;

    SupportPoly() = default;
    /// Exponents are reduced mod p; pairs cancel.
    SupportPoly(std::uint32_t modulus, const std::vector<std::uint32_t> &exponents);

    friend bool operator==(const SupportPoly &, const SupportPoly &) = default;
};

SupportPoly poly_mul(const SupportPoly &f, const SupportPoly &g);
/// f(x^-1)
SupportPoly poly_reverse(const SupportPoly &f);

/// P^d: entry (i, (i + d) mod p) is one.
Gf2Matrix cpm(std::uint32_t p, std::uint64_t d);
Gf2Matrix circulant(const SupportPoly &poly);

struct RrefResult {
    Gf2Matrix matrix;
    std::vector<std::size_t> pivots;
    /// Original rows that were independent of all earlier rows, in row order.
    std::vector<std::size_t> independent_rows;
};

std::size_t rank(const Gf2Matrix &m);
RrefResult rref(const Gf2Matrix &m);
std::vector<std::size_t> independent_row_subset(const Gf2Matrix &m);

Gf2Matrix multiply(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix transpose(const Gf2Matrix &m);
Gf2Matrix add(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix hconcat(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix vconcat(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix select_rows(const Gf2Matrix &m, const std::vector<std::size_t> &rows);
Gf2Matrix select_cols(const Gf2Matrix &m, const std::vector<std::size_t> &cols);

/// Row space built one vector at a time, kept fully reduced on leading bits.
class IncrementalBasis {
  public:
    explicit IncrementalBasis(std::size_t bits);

    /// Adds v if it is independent of the current span; returns whether it was added.
    bool insert(const std::uint64_t *v);
    bool contains(const std::uint64_t *v) const;
    std::size_t size() const noexcept { return lead_.size(); }
    std::size_t words() const noexcept { return words_; }

  private:
    void reduce(std::uint64_t *x) const;

    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::size_t> lead_;
};

/// Basis of {x : x M = 0}, one vector per row of the result (rows(m) columns).
Gf2Matrix left_kernel(const Gf2Matrix &m);

inline std::size_t popcount_words(const std::uint64_t *w, std::size_t n) noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += static_cast<std::size_t>(std::popcount(w[i]));
    }
    return total;
}

}  // namespace qrstab
