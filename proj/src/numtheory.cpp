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

#include "qrstab/numtheory.hpp"

#include <algorithm>
#include <string>

#include "qrstab/error.hpp"

namespace qrstab {

bool is_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    if (v % 2 == 0) {
        return v == 2;
    }
    for (std::uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) {
                v /= d;
            }
        }
    }
    if (v > 1) {
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) {
        return 1;
    }
    auto factors = distinct_prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool primitive = std::all_of(factors.begin(), factors.end(),
                                     [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; });
        if (primitive) {
            return g;
        }
    }
    throw Error(ErrorCode::Internal, "no primitive root found for " + std::to_string(p));
}

QrContext classify_prime(std::uint64_t p) {
    if (p == 2) {
        throw Error(ErrorCode::UnsupportedModulus, "p = 2 has no 4n +/- 1 form");
    }
    if (p > kMaxModulus) {
        throw Error(ErrorCode::UnsupportedModulus, "modulus " + std::to_string(p) + " exceeds 2^31 - 1");
    }
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }

    QrContext ctx;
    ctx.p = static_cast<std::uint32_t>(p);
    if (p % 4 == 3) {
        ctx.form = PrimeForm::FourNMinus1;
        ctx.n = static_cast<std::uint32_t>((p + 1) / 4);
    } else {
        ctx.form = PrimeForm::FourNPlus1;
        ctx.n = static_cast<std::uint32_t>((p - 1) / 4);
    }
    ctx.k = static_cast<std::uint32_t>((p - 1) / 2);
    ctx.alpha = smallest_primitive_root(ctx.p);
    ctx.beta = static_cast<std::uint32_t>(pow_mod(ctx.alpha, 2, p));

    std::vector<char> residue(p, 0);
    for (std::uint64_t i = 1; i <= ctx.k; ++i) {
        residue[i * i % p] = 1;
    }
    for (std::uint32_t a = 1; a < p; ++a) {
        (residue[a] ? ctx.qr : ctx.qnr).push_back(a);
    }

    ctx.qr_powers.reserve(ctx.k);
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < ctx.k; ++i) {
        acc = acc * ctx.beta % p;
        ctx.qr_powers.push_back(static_cast<std::uint32_t>(acc));
    }
    return ctx;
}

bool QrContext::is_residue(std::uint64_t a) const {
    a %= p;
    return a != 0 && std::binary_search(qr.begin(), qr.end(), static_cast<std::uint32_t>(a));
}

int legendre(std::int64_t a, const QrContext &ctx) {
    std::int64_t m = static_cast<std::int64_t>(ctx.p);
    std::int64_t r = ((a % m) + m) % m;
    if (r == 0) {
        return 0;
    }
    return ctx.is_residue(static_cast<std::uint64_t>(r)) ? 1 : -1;
}

const std::vector<std::uint32_t> &qr_as_beta_powers(const QrContext &ctx) { return ctx.qr_powers; }

}  // namespace qrstab
