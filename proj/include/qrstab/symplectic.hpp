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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrstab/gf2.hpp"

namespace qrstab {

/// A Pauli operator up to phase, as (a|b) with a the X part and b the Z part.
struct SymplecticVector {
    std::size_t n_qubits = 0;
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;

    SymplecticVector() = default;
    explicit SymplecticVector(std::size_t n);

    bool x(std::size_t q) const noexcept { return (a[q / 64] >> (q % 64)) & 1u; }
    bool z(std::size_t q) const noexcept { return (b[q / 64] >> (q % 64)) & 1u; }
    void set_x(std::size_t q, bool v) noexcept;
    void set_z(std::size_t q, bool v) noexcept;

    friend bool operator==(const SymplecticVector &, const SymplecticVector &) = default;
};

/// Length-N string over I, X, Y, Z.
using PauliString = std::string;

int symplectic_product(const SymplecticVector &u, const SymplecticVector &v);
std::size_t weight(const SymplecticVector &u) noexcept;
SymplecticVector operator+(const SymplecticVector &u, const SymplecticVector &v);

/// True iff h1 h2^T + h2 h1^T = 0 over GF(2).
bool sip_check(const Gf2Matrix &h1, const Gf2Matrix &h2);
/// Same check on a combined m x 2N matrix [H1 | H2].
bool sip_check(const Gf2Matrix &h);

/// One bit per row of h: 1 where the row anticommutes with e.
std::vector<std::uint8_t> syndrome(const Gf2Matrix &h, const SymplecticVector &e);

PauliString to_pauli(const SymplecticVector &u);
SymplecticVector from_pauli(std::string_view s);

/// Row r of an m x 2N matrix read as a Pauli operator, and the reverse.
SymplecticVector row_vector(const Gf2Matrix &h, std::size_t r);
void set_row_vector(Gf2Matrix &h, std::size_t r, const SymplecticVector &v);

}  // namespace qrstab
