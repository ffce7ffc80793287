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

#include "qrstab/gf2.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "qrstab/error.hpp"

namespace qrstab {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + Gf2Matrix::kWordBits - 1) / Gf2Matrix::kWordBits; }

}  // namespace

IncrementalBasis::IncrementalBasis(std::size_t bits) : words_(words_for(bits)) {}

void IncrementalBasis::reduce(std::uint64_t *x) const {
    for (std::size_t i = 0; i < lead_.size(); ++i) {
        std::size_t l = lead_[i];
        if ((x[l / 64] >> (l % 64)) & 1u) {
            const std::uint64_t *b = rows_.data() + i * words_;
            for (std::size_t w = 0; w < words_; ++w) {
                x[w] ^= b[w];
            }
        }
    }
}

bool IncrementalBasis::contains(const std::uint64_t *v) const {
    std::vector<std::uint64_t> x(v, v + words_);
    reduce(x.data());
    return std::all_of(x.begin(), x.end(), [](std::uint64_t w) { return w == 0; });
}

bool IncrementalBasis::insert(const std::uint64_t *v) {
    std::vector<std::uint64_t> x(v, v + words_);
    reduce(x.data());
    for (std::size_t w = 0; w < words_; ++w) {
        if (x[w] == 0) {
            continue;
        }
        std::size_t l = w * 64 + static_cast<std::size_t>(std::countr_zero(x[w]));
        for (std::size_t i = 0; i < lead_.size(); ++i) {
            std::uint64_t *b = rows_.data() + i * words_;
            if ((b[l / 64] >> (l % 64)) & 1u) {
                for (std::size_t u = 0; u < words_; ++u) {
                    b[u] ^= x[u];
                }
            }
        }
        rows_.insert(rows_.end(), x.begin(), x.end());
        lead_.push_back(l);
        return true;
    }
    return false;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) noexcept {
    Word *d = row(dst);
    const Word *s = row(src);
    for (std::size_t w = 0; w < wpr_; ++w) {
        d[w] ^= s[w];
    }
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a != b) {
        std::swap_ranges(row(a), row(a) + wpr_, row(b));
    }
}

void Gf2Matrix::swap_cols(std::size_t a, std::size_t b) noexcept {
    if (a == b) {
        return;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        bool va = get(r, a);
        bool vb = get(r, b);
        if (va != vb) {
            flip(r, a);
            flip(r, b);
        }
    }
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const noexcept { return popcount_words(row(r), wpr_); }

bool Gf2Matrix::row_is_zero(std::size_t r) const noexcept {
    const Word *w = row(r);
    return std::all_of(w, w + wpr_, [](Word x) { return x == 0; });
}

bool Gf2Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Word x) { return x == 0; });
}

Gf2Matrix Gf2Matrix::col_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) {
        throw Error(ErrorCode::ShapeMismatch, "column block out of range");
    }
    Gf2Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) {
            if (get(r, first + c)) {
                out.set(r, c, true);
            }
        }
    }
    return out;
}

SupportPoly::SupportPoly(std::uint32_t modulus, const std::vector<std::uint32_t> &exponents) : p(modulus) {
    std::vector<char> coef(modulus, 0);
    for (auto e : exponents) {
        coef[e % modulus] ^= 1;
    }
    for (std::uint32_t i = 0; i < modulus; ++i) {
        if (coef[i]) {
            support.push_back(i);
        }
    }
}

SupportPoly poly_mul(const SupportPoly &f, const SupportPoly &g) {
    if (f.p != g.p) {
        throw Error(ErrorCode::ShapeMismatch, "polynomials over different moduli");
    }
    std::vector<std::uint32_t> terms;
    terms.reserve(f.support.size() * g.support.size());
    for (auto a : f.support) {
        for (auto b : g.support) {
            terms.push_back((a + b) % f.p);
        }
    }
    return SupportPoly(f.p, terms);
}

SupportPoly poly_reverse(const SupportPoly &f) {
    std::vector<std::uint32_t> terms;
    for (auto a : f.support) {
        terms.push_back((f.p - a) % f.p);
    }
    return SupportPoly(f.p, terms);
}

Gf2Matrix cpm(std::uint32_t p, std::uint64_t d) {
    Gf2Matrix m(p, p);
    std::uint64_t shift = d % p;
    for (std::uint32_t i = 0; i < p; ++i) {
        m.set(i, (i + shift) % p, true);
    }
    return m;
}

Gf2Matrix circulant(const SupportPoly &poly) {
    Gf2Matrix m(poly.p, poly.p);
    for (std::uint32_t i = 0; i < poly.p; ++i) {
        for (auto d : poly.support) {
            m.flip(i, (i + d) % poly.p);
        }
    }
    return m;
}

RrefResult rref(const Gf2Matrix &input) {
    RrefResult out{input, {}, independent_row_subset(input)};
    Gf2Matrix &m = out.matrix;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && !m.get(piv, c)) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        m.swap_rows(r, piv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) {
                m.add_row(i, r);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const Gf2Matrix &input) {
    Gf2Matrix m = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && !m.get(piv, c)) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        m.swap_rows(r, piv);
        for (std::size_t i = piv + 1; i < m.rows(); ++i) {
            if (m.get(i, c)) {
                m.add_row(i, r);
            }
        }
        ++r;
    }
    return r;
}

std::vector<std::size_t> independent_row_subset(const Gf2Matrix &m) {
    IncrementalBasis basis(m.cols());
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (basis.insert(m.row(r))) {
            kept.push_back(r);
        }
    }
    return kept;
}

Gf2Matrix multiply(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "multiply: inner dimensions differ");
    }
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto *dst = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.get(i, k)) {
                const auto *src = b.row(k);
                for (std::size_t w = 0; w < out.words_per_row(); ++w) {
                    dst[w] ^= src[w];
                }
            }
        }
    }
    return out;
}

Gf2Matrix transpose(const Gf2Matrix &m) {
    Gf2Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

Gf2Matrix add(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "add: shapes differ");
    }
    Gf2Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto *d = out.row(r);
        const auto *s = b.row(r);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            d[w] ^= s[w];
        }
    }
    return out;
}

Gf2Matrix hconcat(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.rows() != b.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "hconcat: row counts differ");
    }
    Gf2Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.get(r, c)) {
                out.set(r, c, true);
            }
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (b.get(r, c)) {
                out.set(r, a.cols() + c, true);
            }
        }
    }
    return out;
}

Gf2Matrix vconcat(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "vconcat: column counts differ");
    }
    Gf2Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy_n(a.row(r), a.words_per_row(), out.row(r));
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::copy_n(b.row(r), b.words_per_row(), out.row(a.rows() + r));
    }
    return out;
}

Gf2Matrix select_rows(const Gf2Matrix &m, const std::vector<std::size_t> &rows) {
    Gf2Matrix out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= m.rows()) {
            throw Error(ErrorCode::RowIndexOutOfRange, "row index out of range");
        }
        std::copy_n(m.row(rows[i]), m.words_per_row(), out.row(i));
    }
    return out;
}

Gf2Matrix select_cols(const Gf2Matrix &m, const std::vector<std::size_t> &cols) {
    Gf2Matrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (m.get(r, cols[j])) {
                out.set(r, j, true);
            }
        }
    }
    return out;
}

Gf2Matrix left_kernel(const Gf2Matrix &m) {
    // [M | I]; rows whose M part vanishes after elimination carry kernel vectors.
    Gf2Matrix aug = hconcat(m, Gf2Matrix::identity(m.rows()));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < aug.rows(); ++c) {
        std::size_t piv = r;
        while (piv < aug.rows() && !aug.get(piv, c)) {
            ++piv;
        }
        if (piv == aug.rows()) {
            continue;
        }
        aug.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < aug.rows(); ++i) {
            if (aug.get(i, c)) {
                aug.add_row(i, r);
            }
        }
        ++r;
    }
    Gf2Matrix ker(aug.rows() - r, m.rows());
    for (std::size_t i = r; i < aug.rows(); ++i) {
        for (std::size_t c = 0; c < m.rows(); ++c) {
            if (aug.get(i, m.cols() + c)) {
                ker.set(i - r, c, true);
            }
        }
    }
    return ker;
}

}  // namespace qrstab
