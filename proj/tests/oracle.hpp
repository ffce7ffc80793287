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

// Slow, byte-per-bit reference implementations. Nothing here calls into the
// library except to read a Gf2Matrix.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "qrstab/gf2.hpp"

namespace oracle {

using Bits = std::vector<std::uint8_t>;
using Rows = std::vector<Bits>;

inline Rows from_matrix(const qrstab::Gf2Matrix &m) {
    Rows out(m.rows(), Bits(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m.get(r, c);
        }
    }
    return out;
}

inline std::size_t rank(Rows rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv][c]) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c]) {
                for (std::size_t j = 0; j < cols; ++j) {
                    rows[i][j] ^= rows[r][j];
                }
            }
        }
        ++r;
    }
    return r;
}

inline bool in_span(const Rows &rows, const Bits &v) {
    Rows ext = rows;
    ext.push_back(v);
    return rank(ext) == rank(rows);
}

// Rows are (x_0..x_{n-1} | z_0..z_{n-1}).
inline int sip(const Bits &u, const Bits &v, std::size_t n) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        s ^= (u[j] & v[n + j]) ^ (u[n + j] & v[j]);
    }
    return s;
}

inline std::size_t weight(const Bits &u, std::size_t n) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
        w += (u[j] | u[n + j]) ? 1 : 0;
    }
    return w;
}

// Smallest w such that some Pauli of weight w commutes with every row and is
// not in their span. With no logical qubits, smallest nonzero stabilizer weight.
inline std::size_t increasing_weight_dmin(const Rows &h, std::size_t n) {
    const bool k_zero = rank(h) == n;
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> sel(w);
        for (std::size_t i = 0; i < w; ++i) {
            sel[i] = i;
        }
        while (true) {
            std::size_t combos = 1;
            for (std::size_t i = 0; i < w; ++i) {
                combos *= 3;
            }
            for (std::size_t code = 0; code < combos; ++code) {
                Bits v(2 * n, 0);
                std::size_t c = code;
                for (std::size_t i = 0; i < w; ++i) {
                    std::size_t s = c % 3 + 1;  // 1 X, 2 Z, 3 Y
                    c /= 3;
                    v[sel[i]] = s & 1;
                    v[n + sel[i]] = (s >> 1) & 1;
                }
                bool commutes = std::all_of(h.begin(), h.end(), [&](const Bits &r) { return sip(r, v, n) == 0; });
                if (!commutes) {
                    continue;
                }
                if (k_zero ? in_span(h, v) : !in_span(h, v)) {
                    return w;
                }
            }
            std::size_t i = w;
            while (i > 0 && sel[i - 1] == n - w + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++sel[i - 1];
            for (std::size_t j = i; j < w; ++j) {
                sel[j] = sel[j - 1] + 1;
            }
        }
    }
    return 0;
}

// Minimum nonzero weight over the span of h, by listing all 2^m combinations.
inline std::size_t span_min_weight(const Rows &h, std::size_t n) {
    std::size_t best = n + 1;
    const std::size_t m = h.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        Bits v(2 * n, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if ((mask >> i) & 1) {
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    v[j] ^= h[i][j];
                }
            }
        }
        std::size_t w = weight(v, n);
        if (w > 0) {
            best = std::min(best, w);
        }
    }
    return best;
}

inline std::set<std::uint32_t> squares(std::uint32_t p) {
    std::set<std::uint32_t> s;
    for (std::uint64_t i = 1; i < p; ++i) {
        s.insert(static_cast<std::uint32_t>(i * i % p));
    }
    return s;
}

inline bool naive_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

// Circulant with row r having ones at (r + e) mod p for e in support.
inline Rows circulant(std::uint32_t p, const std::set<std::uint32_t> &support) {
    Rows out(p, Bits(p, 0));
    for (std::uint32_t r = 0; r < p; ++r) {
        for (auto e : support) {
            out[r][(r + e) % p] ^= 1;
        }
    }
    return out;
}

}  // namespace oracle
