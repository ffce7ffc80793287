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

#include "qrstab/symplectic.hpp"

#include <bit>

#include "qrstab/error.hpp"

namespace qrstab {

SymplecticVector::SymplecticVector(std::size_t n) : n_qubits(n), a((n + 63) / 64, 0), b((n + 63) / 64, 0) {}

void SymplecticVector::set_x(std::size_t q, bool v) noexcept {
    std::uint64_t mask = std::uint64_t{1} << (q % 64);
    a[q / 64] = v ? (a[q / 64] | mask) : (a[q / 64] & ~mask);
}

void SymplecticVector::set_z(std::size_t q, bool v) noexcept {
    std::uint64_t mask = std::uint64_t{1} << (q % 64);
    b[q / 64] = v ? (b[q / 64] | mask) : (b[q / 64] & ~mask);
}

int symplectic_product(const SymplecticVector &u, const SymplecticVector &v) {
    if (u.n_qubits != v.n_qubits) {
        throw Error(ErrorCode::LengthMismatch, "symplectic product of operators on different qubit counts");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < u.a.size(); ++w) {
        acc ^= (u.a[w] & v.b[w]) ^ (v.a[w] & u.b[w]);
    }
    return std::popcount(acc) & 1;
}

std::size_t weight(const SymplecticVector &u) noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < u.a.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(u.a[w] | u.b[w]));
    }
    return total;
}

SymplecticVector operator+(const SymplecticVector &u, const SymplecticVector &v) {
    if (u.n_qubits != v.n_qubits) {
        throw Error(ErrorCode::LengthMismatch, "sum of operators on different qubit counts");
    }
    SymplecticVector out = u;
    for (std::size_t w = 0; w < u.a.size(); ++w) {
        out.a[w] ^= v.a[w];
        out.b[w] ^= v.b[w];
    }
    return out;
}

bool sip_check(const Gf2Matrix &h1, const Gf2Matrix &h2) {
    if (h1.rows() != h2.rows() || h1.cols() != h2.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "sip_check: halves differ in shape");
    }
    Gf2Matrix t1 = transpose(h1);
    Gf2Matrix t2 = transpose(h2);
    return add(multiply(h1, t2), multiply(h2, t1)).is_zero();
}

bool sip_check(const Gf2Matrix &h) {
    if (h.cols() % 2 != 0) {
        throw Error(ErrorCode::ShapeMismatch, "sip_check: odd column count");
    }
    std::size_t n = h.cols() / 2;
    return sip_check(h.col_block(0, n), h.col_block(n, n));
}

std::vector<std::uint8_t> syndrome(const Gf2Matrix &h, const SymplecticVector &e) {
    if (h.cols() != 2 * e.n_qubits) {
        throw Error(ErrorCode::ShapeMismatch, "syndrome: matrix width is not 2N");
    }
    std::vector<std::uint8_t> s(h.rows(), 0);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        s[r] = static_cast<std::uint8_t>(symplectic_product(row_vector(h, r), e));
    }
    return s;
}

PauliString to_pauli(const SymplecticVector &u) {
    static constexpr char kSymbols[4] = {'I', 'X', 'Z', 'Y'};
    PauliString s(u.n_qubits, 'I');
    for (std::size_t q = 0; q < u.n_qubits; ++q) {
        s[q] = kSymbols[(u.x(q) ? 1 : 0) | (u.z(q) ? 2 : 0)];
    }
    return s;
}

SymplecticVector from_pauli(std::string_view s) {
    SymplecticVector u(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
        case 'I':
            break;
        case 'X':
            u.set_x(q, true);
            break;
        case 'Z':
            u.set_z(q, true);
            break;
        case 'Y':
            u.set_x(q, true);
            u.set_z(q, true);
            break;
        default:
            throw Error(ErrorCode::InvalidSymbol,
                        "invalid Pauli symbol '" + std::string(1, s[q]) + "' at position " + std::to_string(q + 1));
        }
    }
    return u;
}

SymplecticVector row_vector(const Gf2Matrix &h, std::size_t r) {
    std::size_t n = h.cols() / 2;
    SymplecticVector v(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (h.get(r, q)) {
            v.set_x(q, true);
        }
        if (h.get(r, n + q)) {
            v.set_z(q, true);
        }
    }
    return v;
}

void set_row_vector(Gf2Matrix &h, std::size_t r, const SymplecticVector &v) {
    std::size_t n = v.n_qubits;
    if (h.cols() != 2 * n) {
        throw Error(ErrorCode::ShapeMismatch, "row width is not 2N");
    }
    for (std::size_t q = 0; q < n; ++q) {
        h.set(r, q, v.x(q));
        h.set(r, n + q, v.z(q));
    }
}

}  // namespace qrstab
