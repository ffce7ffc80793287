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

#include <cstdint>
#include <vector>

namespace qrstab {

/// Which side of 4n +/- 1 a prime falls on.
enum class PrimeForm { FourNMinus1, FourNPlus1 };

/// Largest modulus accepted by classify_prime (trial division stays exact below it).
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// A prime modulus together with its quadratic residue structure.
///
/// `qr` and `qnr` are sorted; `qr_powers[i]` is beta^(i+1) mod p, so the same
/// set is also available in generator order for building proto-matrices.
struct QrContext {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    PrimeForm form = PrimeForm::FourNMinus1;
    std::uint32_t alpha = 0;
    std::uint32_t beta = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> qr;
    std::vector<std::uint32_t> qnr;
    std::vector<std::uint32_t> qr_powers;

    bool is_residue(std::uint64_t a) const;
};

bool is_prime(std::uint64_t v);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Smallest primitive root of the prime p.
std::uint32_t smallest_primitive_root(std::uint32_t p);

/// Builds the residue context for an odd prime. Throws NotPrime for composites
/// (and 0, 1), UnsupportedModulus for p = 2 or p above kMaxModulus.
QrContext classify_prime(std::uint64_t p);

/// Legendre symbol (a/p): +1 for residues, -1 for non-residues, 0 when p | a.
int legendre(std::int64_t a, const QrContext &ctx);

/// The residues in generator order: element i is beta^(i+1) mod p.
const std::vector<std::uint32_t> &qr_as_beta_powers(const QrContext &ctx);

}  // namespace qrstab
