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

#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "qrstab/error.hpp"
#include "qrstab/symplectic.hpp"
#include "qrstab/type2.hpp"

using namespace qrstab;

namespace {

const std::uint32_t kMinus[] = {7, 11, 19, 23};
const std::uint32_t kPlus[] = {5, 13, 17, 29};

std::vector<std::uint32_t> row_of(const ProtoMatrix &m, std::size_t i) {
    std::vector<std::uint32_t> out;
    for (std::size_t j = 0; j < m.k; ++j) {
        REQUIRE(m.cell(i, j).size() == 1);
        out.push_back(m.cell(i, j)[0]);
    }
    return out;
}

// Integer matrix of an exponent-set proto lifted with P^d at (r, r + d).
std::vector<std::vector<int>> int_lift(const std::vector<std::vector<std::set<std::uint32_t>>> &cells, std::uint32_t p) {
    const std::size_t k = cells.size();
    std::vector<std::vector<int>> m(p * k, std::vector<int>(p * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            for (auto d : cells[i][j]) {
                for (std::uint32_t r = 0; r < p; ++r) {
                    m[i * p + r][j * p + (r + d) % p] += 1;
                }
            }
        }
    }
    return m;
}

}  // namespace

TEST_CASE("QCS-A proto matrices") {
    auto [h1, h2] = build_proto_qcs_a(classify_prime(7));
    CHECK(row_of(h1, 0) == std::vector<std::uint32_t>{2, 4, 1});
    CHECK(row_of(h1, 1) == std::vector<std::uint32_t>{4, 1, 2});
    CHECK(row_of(h1, 2) == std::vector<std::uint32_t>{1, 2, 4});
    ProtoMatrix adj = adjoin_zero(h2);
    CHECK(adj.cell(0, 0) == std::vector<std::uint32_t>{0, 5});
    CHECK(adj.cell(0, 1) == std::vector<std::uint32_t>{0, 3});
    CHECK(adj.cell(0, 2) == std::vector<std::uint32_t>{0, 6});

    for (auto p : kMinus) {
        QrContext ctx = classify_prime(p);
        auto [a1, a2] = build_proto_qcs_a(ctx);
        CHECK(is_latin_square(a1));
        CHECK(is_latin_square(a2));
        CHECK(is_symmetric(a1));
        CHECK(is_symmetric(a2));
        std::set<std::uint32_t> row0;
        for (std::size_t i = 0; i < ctx.k; ++i) {
            for (std::size_t j = 0; j < ctx.k; ++j) {
                CHECK(a1.cell(i, j)[0] + a2.cell(i, j)[0] == p);
            }
            row0.insert(a1.cell(0, i)[0]);
        }
        CHECK(row0 == oracle::squares(p));
    }
    CHECK(row_of(build_proto_qcs_a(classify_prime(11)).first, 0) == std::vector<std::uint32_t>{4, 5, 9, 3, 1});
    CHECK_THROWS_AS(build_proto_qcs_a(classify_prime(13)), Error);
}

TEST_CASE("QCS-B proto matrices") {
    auto [h1, h2] = build_proto_qcs_b(classify_prime(13));
    CHECK(row_of(h1, 0) == std::vector<std::uint32_t>{4, 3, 12, 9, 10, 1});
    CHECK(row_of(h1, 1) == std::vector<std::uint32_t>{1, 4, 3, 12, 9, 10});
    CHECK(row_of(h2, 0) == std::vector<std::uint32_t>{8, 6, 11, 5, 7, 2});
    auto [b1, b2] = build_proto_qcs_b(classify_prime(5));
    CHECK(row_of(b1, 0) == std::vector<std::uint32_t>{4, 1});
    CHECK(row_of(b1, 1) == std::vector<std::uint32_t>{1, 4});
    CHECK(row_of(b2, 0) == std::vector<std::uint32_t>{3, 2});
    CHECK(row_of(b2, 1) == std::vector<std::uint32_t>{2, 3});
    for (auto p : kPlus) {
        auto [c1, c2] = build_proto_qcs_b(classify_prime(p));
        CHECK(is_latin_square(c1));
        CHECK(is_latin_square(c2));
        CHECK(is_symmetric(c2));
        if (p > 5) {
            CHECK_FALSE(is_symmetric(c1));
        }
    }
    CHECK_THROWS_AS(build_proto_qcs_b(classify_prime(7)), Error);
}

TEST_CASE("lifting") {
    auto [h1, h2] = build_proto_qcs_a(classify_prime(7));
    Gf2Matrix l = lift(h1);
    CHECK(l.rows() == 21);
    CHECK(select_rows(l, {0, 1, 2, 3, 4, 5, 6}).col_block(0, 7) == cpm(7, 2));
    CHECK(select_rows(l, {7, 8, 9, 10, 11, 12, 13}).col_block(14, 7) == cpm(7, 2));
    Gf2Matrix r = lift(adjoin_zero(h2));
    CHECK(select_rows(r, {0, 1, 2, 3, 4, 5, 6}).col_block(0, 7) == add(cpm(7, 0), cpm(7, 5)));
    for (std::size_t i = 0; i < 21; ++i) {
        CHECK(l.row_weight(i) == 3);
        CHECK(r.row_weight(i) == 6);
    }
    ProtoMatrix empty(7, 2);
    CHECK(lift(empty).is_zero());
}

TEST_CASE("integer identity for QCS-A") {
    for (std::uint32_t p : {7u, 11u}) {
        QrContext ctx = classify_prime(p);
        const std::size_t k = ctx.k;
        std::vector<std::vector<std::set<std::uint32_t>>> a(k, std::vector<std::set<std::uint32_t>>(k)), b = a;
        std::uint64_t bi = 1;
        for (std::size_t i = 0; i < k; ++i, bi = bi * ctx.beta % p) {
            std::uint64_t bj = 1;
            for (std::size_t j = 0; j < k; ++j) {
                bj = bj * ctx.beta % p;
                std::uint32_t e = static_cast<std::uint32_t>(bi * bj % p);
                a[i][j] = {e};
                b[i][j] = {(p - e) % p, 0};
            }
        }
        auto h1 = int_lift(a, p);
        auto h2 = int_lift(b, p);
        const std::size_t N = p * k;
        // Every block of H1 H2^T + H2 H1^T equals 2 (P + P^2 + ... + P^{p-1}).
        bool ok = true;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                int s = 0;
                for (std::size_t t = 0; t < N; ++t) {
                    s += h1[r][t] * h2[c][t] + h2[r][t] * h1[c][t];
                }
                ok = ok && s == (r % p == c % p ? 0 : 2);
            }
        }
        CHECK(ok);
        CHECK(oracle::from_matrix(qcs_matrix(ctx, QcsVariant::A, QcsLayout::H1Adj2)).size() == N);
        auto lifted = oracle::from_matrix(qcs_matrix(ctx, QcsVariant::A, QcsLayout::H1Adj2));
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                CHECK(lifted[r][c] == h1[r][c]);
                CHECK(lifted[r][N + c] == (h2[r][c] & 1));
            }
        }
    }
}

TEST_CASE("layouts and variants commute") {
    for (auto p : kMinus) {
        QrContext ctx = classify_prime(p);
        for (auto l : {QcsLayout::H1Adj2, QcsLayout::Adj2H1, QcsLayout::Adj1H2, QcsLayout::H2Adj1}) {
            CHECK(sip_check(qcs_matrix(ctx, QcsVariant::A, l)));
            CHECK(parse_qcs_layout(qcs_layout_name(l)) == l);
        }
        Gf2Matrix h = qcs_matrix(ctx, QcsVariant::A, QcsLayout::H1Adj2);
        const std::size_t N = p * ctx.k;
        CHECK(rank(h.col_block(0, N)) == rank(h.col_block(N, N)) + 1);
    }
    for (auto p : kPlus) {
        QrContext ctx = classify_prime(p);
        Gf2Matrix h = qcs_matrix(ctx, QcsVariant::B, QcsLayout::H1Adj2);
        CHECK(sip_check(h));
        const std::size_t N = p * ctx.k;
        CHECK(rank(h.col_block(0, N)) == rank(h.col_block(N, N)));
    }
}

TEST_CASE("lifted left half has the closed-form rank") {
    for (auto p : kMinus) {
        QrContext ctx = classify_prime(p);
        CHECK(rank(lift(build_proto_qcs_a(ctx).first)) == qcs_closed_form_rank(ctx, QcsVariant::A));
    }
    for (auto p : kPlus) {
        QrContext ctx = classify_prime(p);
        CHECK(rank(lift(build_proto_qcs_b(ctx).first)) == qcs_closed_form_rank(ctx, QcsVariant::B));
    }
}

TEST_CASE("default construction procedures") {
    struct Want {
        std::uint32_t p;
        QcsVariant v;
        std::size_t removed;
        std::size_t K;
    };
    for (auto w : {Want{5, QcsVariant::B, 1, 1}, Want{7, QcsVariant::A, 5, 5}, Want{11, QcsVariant::A, 4, 4},
                   Want{13, QcsVariant::B, 5, 5}, Want{17, QcsVariant::B, 15, 15}, Want{19, QcsVariant::A, 26, 26},
                   Want{23, QcsVariant::A, 21, 21}, Want{29, QcsVariant::B, 13, 13}}) {
        QrContext ctx = classify_prime(w.p);
        StabilizerCode code = build_qcs({ctx, w.v, QcsLayout::H1Adj2, std::nullopt});
        CHECK(code.removed_rows.size() == w.removed);
        CHECK(code.k_logical == w.K);
        CHECK(code.m() == *code.closed_form_rank);
        CHECK(rank(code.h) == code.m());
        CHECK(sip_check(code.h));
    }
}

TEST_CASE("explicit removal") {
    QrContext ctx = classify_prime(7);
    StabilizerCode c = build_qcs({ctx, QcsVariant::A, QcsLayout::H1Adj2, std::vector<std::size_t>{2, 3, 8, 11, 21}});
    CHECK(c.n_qubits == 21);
    CHECK(c.k_logical == 5);
    CHECK(c.m() == 16);
    StabilizerCode d = build_qcs({ctx, QcsVariant::A, QcsLayout::Adj1H2, std::vector<std::size_t>{7, 11, 12, 14, 15, 21}});
    CHECK(d.k_logical == 6);
    try {
        build_qcs({ctx, QcsVariant::A, QcsLayout::H1Adj2, std::vector<std::size_t>{22}});
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::RowIndexOutOfRange);
    }
    CHECK_THROWS_AS(build_qcs({ctx, QcsVariant::B, QcsLayout::H1Adj2, std::nullopt}), Error);
}
