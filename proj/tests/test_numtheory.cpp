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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "qrstab/error.hpp"
#include "qrstab/numtheory.hpp"

using namespace qrstab;

namespace {

std::set<std::uint32_t> as_set(const std::vector<std::uint32_t> &v) { return {v.begin(), v.end()}; }

std::vector<std::uint32_t> odd_primes_upto(std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 3; p <= hi; ++p) {
        if (oracle::naive_prime(p)) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("classify small primes") {
    QrContext c7 = classify_prime(7);
    CHECK(c7.form == PrimeForm::FourNMinus1);
    CHECK(c7.n == 2);
    CHECK(c7.qr == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(c7.qnr == std::vector<std::uint32_t>{3, 5, 6});

    QrContext c13 = classify_prime(13);
    CHECK(c13.form == PrimeForm::FourNPlus1);
    CHECK(c13.n == 3);
    CHECK(c13.qr == std::vector<std::uint32_t>{1, 3, 4, 9, 10, 12});

    QrContext c5 = classify_prime(5);
    CHECK(c5.n == 1);
    CHECK(c5.qr == std::vector<std::uint32_t>{1, 4});
}

TEST_CASE("classify rejects bad moduli") {
    auto code_of = [](std::uint64_t p) {
        try {
            classify_prime(p);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::Ok;
    };
    CHECK(code_of(4) == ErrorCode::NotPrime);
    CHECK(code_of(1) == ErrorCode::NotPrime);
    CHECK(code_of(91) == ErrorCode::NotPrime);
    CHECK(code_of(2) == ErrorCode::UnsupportedModulus);
    CHECK(code_of(kMaxModulus + 2) == ErrorCode::UnsupportedModulus);
}

TEST_CASE("residue sets match brute-force squares") {
    for (auto p : odd_primes_upto(200)) {
        QrContext ctx = classify_prime(p);
        auto sq = oracle::squares(p);
        CHECK(as_set(ctx.qr) == sq);
        CHECK(ctx.qr.size() + ctx.qnr.size() == p - 1);
        CHECK(ctx.k == (p - 1) / 2);
        for (auto v : ctx.qnr) {
            CHECK(sq.count(v) == 0);
        }
        CHECK(p == (ctx.form == PrimeForm::FourNPlus1 ? 4 * ctx.n + 1 : 4 * ctx.n - 1));
    }
}

TEST_CASE("primitive root is smallest generator") {
    for (auto p : odd_primes_upto(200)) {
        std::uint32_t a = smallest_primitive_root(p);
        std::set<std::uint64_t> seen;
        std::uint64_t x = 1;
        for (std::uint32_t i = 0; i + 1 < p; ++i) {
            x = x * a % p;
            seen.insert(x);
        }
        CHECK(seen.size() == p - 1);
        for (std::uint32_t b = 2; b < a; ++b) {
            std::uint64_t y = b;
            std::uint32_t ord = 1;
            while (y != 1) {
                y = y * b % p;
                ++ord;
            }
            CHECK(ord < p - 1);
        }
        QrContext ctx = classify_prime(p);
        CHECK(ctx.alpha == a);
        CHECK(ctx.beta == std::uint64_t{a} * a % p);
    }
}

TEST_CASE("legendre symbol") {
    QrContext c7 = classify_prime(7);
    CHECK(legendre(2, c7) == 1);
    CHECK(legendre(-1, c7) == -1);
    CHECK(legendre(0, c7) == 0);
    CHECK(legendre(14, c7) == 0);
    QrContext c13 = classify_prime(13);
    CHECK(legendre(12, c13) == 1);
    CHECK(legendre(-1, c13) == 1);
    CHECK(legendre(2, c13) == -1);
}

TEST_CASE("residues as powers of beta") {
    CHECK(qr_as_beta_powers(classify_prime(7)) == std::vector<std::uint32_t>{2, 4, 1});
    CHECK(qr_as_beta_powers(classify_prime(13)) == std::vector<std::uint32_t>{4, 3, 12, 9, 10, 1});
    CHECK(qr_as_beta_powers(classify_prime(5)) == std::vector<std::uint32_t>{4, 1});
    for (auto p : odd_primes_upto(200)) {
        QrContext ctx = classify_prime(p);
        const auto &pw = qr_as_beta_powers(ctx);
        CHECK(as_set(pw) == as_set(ctx.qr));
        std::uint64_t x = 1;
        for (std::size_t i = 0; i < pw.size(); ++i) {
            x = x * ctx.beta % p;
            CHECK(pw[i] == x);
        }
    }
}

TEST_CASE("multiplying by beta powers permutes each class") {
    for (auto p : odd_primes_upto(200)) {
        QrContext ctx = classify_prime(p);
        std::uint64_t b = 1;
        for (std::uint32_t i = 1; i <= ctx.k; ++i) {
            b = b * ctx.beta % p;
            std::set<std::uint32_t> r, nr;
            for (auto v : ctx.qr) {
                r.insert(static_cast<std::uint32_t>(b * v % p));
            }
            for (auto v : ctx.qnr) {
                nr.insert(static_cast<std::uint32_t>(b * v % p));
            }
            CHECK(r == as_set(ctx.qr));
            CHECK(nr == as_set(ctx.qnr));
        }
    }
}

TEST_CASE("residue products") {
    for (auto p : odd_primes_upto(200)) {
        QrContext ctx = classify_prime(p);
        auto sq = oracle::squares(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            for (std::uint64_t b = 1; b < p; ++b) {
                bool ra = sq.count(static_cast<std::uint32_t>(a)) > 0;
                bool rb = sq.count(static_cast<std::uint32_t>(b)) > 0;
                CHECK((ra == rb) == ctx.is_residue(a * b % p));
            }
        }
    }
}

TEST_CASE("classification is deterministic") {
    QrContext a = classify_prime(101);
    QrContext b = classify_prime(101);
    CHECK(a.alpha == b.alpha);
    CHECK(a.qr == b.qr);
    CHECK(a.qr_powers == b.qr_powers);
}

TEST_CASE("large prime modulus") {
    QrContext ctx = classify_prime(65537);
    CHECK(ctx.alpha == 3);
    CHECK(ctx.qr.size() == 32768);
    CHECK(is_prime(kMaxModulus));
    CHECK(smallest_primitive_root(kMaxModulus) == 7);
    CHECK_FALSE(is_prime(kMaxModulus - 2));
    CHECK(pow_mod(3, kMaxModulus - 1, kMaxModulus) == 1);
}
