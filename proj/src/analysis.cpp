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

#include "qrstab/analysis.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "qrstab/error.hpp"

namespace qrstab {

namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Operators inside the searches are stored qubit-interleaved: bit 2j is x_j, bit 2j+1 is z_j,
// so the Pauli weight of a word is popcount((w | w >> 1) & kEvenBits).
inline std::size_t interleaved_weight(const std::uint64_t *v, std::size_t words) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words; ++i) {
        w += static_cast<std::size_t>(std::popcount((v[i] | (v[i] >> 1)) & kEvenBits));
    }
    return w;
}

inline int interleaved_product(const std::uint64_t *u, const std::uint64_t *v, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t swapped = ((v[i] & kEvenBits) << 1) | ((v[i] >> 1) & kEvenBits);
        acc ^= u[i] & swapped;
    }
    return std::popcount(acc) & 1;
}

// Row r of an m x 2N matrix, or a SymplecticVector, written interleaved with qubit order `order`
// (position j holds original qubit order[j]).
std::vector<std::uint64_t> interleave(const SymplecticVector &v, const std::vector<std::size_t> &order,
                                      std::size_t words) {
    std::vector<std::uint64_t> out(words, 0);
    for (std::size_t j = 0; j < order.size(); ++j) {
        std::size_t q = order[j];
        if (v.x(q)) {
            out[(2 * j) / 64] |= std::uint64_t{1} << ((2 * j) % 64);
        }
        if (v.z(q)) {
            out[(2 * j + 1) / 64] |= std::uint64_t{1} << ((2 * j + 1) % 64);
        }
    }
    return out;
}

SymplecticVector deinterleave(const std::uint64_t *w, const std::vector<std::size_t> &order) {
    SymplecticVector v(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        std::size_t q = order[j];
        v.set_x(q, (w[(2 * j) / 64] >> ((2 * j) % 64)) & 1u);
        v.set_z(q, (w[(2 * j + 1) / 64] >> ((2 * j + 1) % 64)) & 1u);
    }
    return v;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

unsigned worker_count(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned t = requested != 0 ? requested : (hw != 0 ? hw : 1);
    return std::max(1u, t);
}

struct GrayBest {
    std::size_t weight = kNone;
    std::uint64_t t = 0;
};

// Scans t in [t0, t1) over the span of `basis`, visiting the combination selected by gray(t).
// Combinations with (gray(t) >> skip_bits) == 0 are ignored.
template <std::size_t W>
GrayBest gray_chunk(const std::vector<std::array<std::uint64_t, W>> &basis, unsigned skip_bits, std::uint64_t t0,
                    std::uint64_t t1) {
    std::array<std::uint64_t, W> v{};
    std::uint64_t g = t0 ^ (t0 >> 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((g >> i) & 1u) {
            for (std::size_t w = 0; w < W; ++w) {
                v[w] ^= basis[i][w];
            }
        }
    }
    GrayBest best;
    auto visit = [&](std::uint64_t t) {
        if (t == 0 || (g >> skip_bits) == 0) {
            return;
        }
        std::size_t wt = interleaved_weight(v.data(), W);
        if (wt < best.weight) {
            best.weight = wt;
            best.t = t;
        }
    };
    visit(t0);
    for (std::uint64_t t = t0 + 1; t < t1; ++t) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(t));
        const auto &b = basis[bit];
        for (std::size_t w = 0; w < W; ++w) {
            v[w] ^= b[w];
        }
        g ^= std::uint64_t{1} << bit;
        if ((g >> skip_bits) == 0) {
            continue;
        }
        std::size_t wt = interleaved_weight(v.data(), W);
        if (wt < best.weight) {
            best.weight = wt;
            best.t = t;
        }
    }
    return best;
}

template <std::size_t W>
GrayBest gray_search_w(const std::vector<std::vector<std::uint64_t>> &rows, unsigned skip_bits, unsigned threads) {
    std::vector<std::array<std::uint64_t, W>> basis(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        basis[i].fill(0);
        std::copy(rows[i].begin(), rows[i].end(), basis[i].begin());
    }
    const std::uint64_t total = std::uint64_t{1} << rows.size();
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    const std::uint64_t span = (total + chunks - 1) / chunks;
    std::vector<GrayBest> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            std::uint64_t t0 = c * span;
            std::uint64_t t1 = std::min(total, t0 + span);
            if (t0 < t1) {
                results[c] = gray_chunk<W>(basis, skip_bits, t0, t1);
            }
        }
    };
    unsigned n = std::min<std::uint64_t>(worker_count(threads), chunks);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) {
        pool.emplace_back(work);
    }
    work();
    for (auto &th : pool) {
        th.join();
    }
    GrayBest best;
    for (const auto &r : results) {
        if (r.weight < best.weight || (r.weight == best.weight && r.weight != kNone && r.t < best.t)) {
            best = r;
        }
    }
    return best;
}

// Minimum weight over span(rows) minus span(rows[0 .. skip_bits)), with one witness.
std::pair<std::size_t, std::vector<std::uint64_t>> gray_min(const std::vector<std::vector<std::uint64_t>> &rows,
                                                            unsigned skip_bits, unsigned threads) {
    if (rows.size() > 62) {
        throw Error(ErrorCode::InvalidArgument, "exhaustive search over more than 2^62 combinations");
    }
    std::size_t words = rows.empty() ? 1 : rows[0].size();
    GrayBest best;
    if (words <= 1) {
        best = gray_search_w<1>(rows, skip_bits, threads);
    } else if (words <= 2) {
        best = gray_search_w<2>(rows, skip_bits, threads);
    } else if (words <= 4) {
        best = gray_search_w<4>(rows, skip_bits, threads);
    } else if (words <= 8) {
        best = gray_search_w<8>(rows, skip_bits, threads);
    } else if (words <= 16) {
        best = gray_search_w<16>(rows, skip_bits, threads);
    } else {
        throw Error(ErrorCode::InvalidArgument, "exhaustive search supports at most 512 qubits");
    }
    std::vector<std::uint64_t> witness(words, 0);
    if (best.weight != kNone) {
        std::uint64_t g = best.t ^ (best.t >> 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((g >> i) & 1u) {
                for (std::size_t w = 0; w < words; ++w) {
                    witness[w] ^= rows[i][w];
                }
            }
        }
    }
    return {best.weight, witness};
}

std::vector<std::vector<std::uint64_t>> interleaved_rows(const Gf2Matrix &m, std::size_t n) {
    auto order = identity_order(n);
    std::size_t words = std::max<std::size_t>(1, (2 * n + 63) / 64);
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(interleave(row_vector(m, r), order, words));
    }
    return rows;
}

struct IsdResult {
    std::size_t weight = kNone;
    SymplecticVector witness;
    std::uint64_t samples = 0;
};

// Lee-Brickell style search over span(gen): each round permutes qubits at random, row reduces the
// interleaved generator matrix and tries every combination of pivot rows touching at most two
// pivot qubits. With `logicals` non-empty a candidate only counts when it anticommutes with one of
// them, i.e. lies outside the stabilizer.
IsdResult isd_search(const Gf2Matrix &gen, std::size_t n, const std::vector<SymplecticVector> &logicals,
                     std::uint64_t budget, std::uint64_t seed) {
    IsdResult res;
    const std::size_t words = std::max<std::size_t>(1, (2 * n + 63) / 64);
    if (gen.rows() == 0 || n == 0) {
        return res;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order = identity_order(n);
    std::vector<SymplecticVector> gen_vectors;
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        gen_vectors.push_back(row_vector(gen, r));
    }

    std::vector<std::uint64_t> cand(words);
    while (res.samples < budget) {
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t rows = gen_vectors.size();
        std::vector<std::uint64_t> m(rows * words);
        for (std::size_t r = 0; r < rows; ++r) {
            auto v = interleave(gen_vectors[r], order, words);
            std::copy(v.begin(), v.end(), m.begin() + static_cast<std::ptrdiff_t>(r * words));
        }
        std::vector<std::vector<std::uint64_t>> logic;
        for (const auto &l : logicals) {
            logic.push_back(interleave(l, order, words));
        }

        // Row reduce; remember pivot rows per qubit position.
        std::vector<std::array<std::size_t, 2>> by_qubit(n, {kNone, kNone});
        std::size_t rank = 0;
        for (std::size_t c = 0; c < 2 * n && rank < rows; ++c) {
            std::size_t cw = c / 64;
            std::uint64_t cb = std::uint64_t{1} << (c % 64);
            std::size_t piv = rank;
            while (piv < rows && !(m[piv * words + cw] & cb)) {
                ++piv;
            }
            if (piv == rows) {
                continue;
            }
            if (piv != rank) {
                std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv * words),
                                 m.begin() + static_cast<std::ptrdiff_t>((piv + 1) * words),
                                 m.begin() + static_cast<std::ptrdiff_t>(rank * words));
            }
            for (std::size_t i = 0; i < rows; ++i) {
                if (i != rank && (m[i * words + cw] & cb)) {
                    for (std::size_t w = 0; w < words; ++w) {
                        m[i * words + w] ^= m[rank * words + w];
                    }
                }
            }
            auto &slot = by_qubit[c / 2];
            (slot[0] == kNone ? slot[0] : slot[1]) = rank;
            ++rank;
        }

        // Up to three nonzero combinations per pivot qubit.
        std::vector<std::vector<std::uint64_t>> combos;
        std::vector<std::size_t> combo_owner;
        std::size_t owners = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (by_qubit[q][0] == kNone) {
                continue;
            }
            const std::uint64_t *r0 = &m[by_qubit[q][0] * words];
            combos.emplace_back(r0, r0 + words);
            combo_owner.push_back(owners);
            if (by_qubit[q][1] != kNone) {
                const std::uint64_t *r1 = &m[by_qubit[q][1] * words];
                combos.emplace_back(r1, r1 + words);
                combo_owner.push_back(owners);
                std::vector<std::uint64_t> both(words);
                for (std::size_t w = 0; w < words; ++w) {
                    both[w] = r0[w] ^ r1[w];
                }
                combos.push_back(std::move(both));
                combo_owner.push_back(owners);
            }
            ++owners;
        }

        auto consider = [&](const std::uint64_t *v) {
            ++res.samples;
            std::size_t wt = interleaved_weight(v, words);
            if (wt == 0 || wt >= res.weight) {
                return;
            }
            if (!logic.empty()) {
                bool outside = std::any_of(logic.begin(), logic.end(),
                                           [&](const auto &l) { return interleaved_product(v, l.data(), words); });
                if (!outside) {
                    return;
                }
            }
            res.weight = wt;
            res.witness = deinterleave(v, order);
        };

        for (std::size_t i = 0; i < combos.size() && res.samples < budget; ++i) {
            consider(combos[i].data());
        }
        for (std::size_t i = 0; i < combos.size() && res.samples < budget; ++i) {
            for (std::size_t j = i + 1; j < combos.size() && res.samples < budget; ++j) {
                if (combo_owner[i] == combo_owner[j]) {
                    continue;
                }
                for (std::size_t w = 0; w < words; ++w) {
                    cand[w] = combos[i][w] ^ combos[j][w];
                }
                consider(cand.data());
            }
        }
    }
    return res;
}

// Number of Pauli operators of weight 1 .. below-1 on n qubits, saturating at limit + 1.
std::uint64_t operators_below(std::size_t n, std::size_t below, std::uint64_t limit) {
    long double total = 0;
    long double term = 1;
    for (std::size_t w = 1; w < below && w <= n; ++w) {
        term = term * 3 * static_cast<long double>(n - w + 1) / static_cast<long double>(w);
        total += term;
        if (total > static_cast<long double>(limit)) {
            return limit + 1;
        }
    }
    return static_cast<std::uint64_t>(total);
}

// Increasing-weight search below `below`. Every single-qubit Pauli gets a signature: its
// commutation bits against the generators followed by those against the logical operators.
// An operator lies in N(S) \ S when the generator part vanishes and the logical part does not;
// it lies in S when both vanish. Returns the first (lightest) match.
std::optional<SymplecticVector> lightest_below(const StabilizerCode &code, const std::vector<SymplecticVector> &logicals,
                                               std::size_t below, bool want_stabilizer) {
    const std::size_t n = code.n_qubits;
    const std::size_t m = code.m();
    const std::size_t bits = m + logicals.size();
    const std::size_t words = std::max<std::size_t>(1, (bits + 63) / 64);
    const std::size_t gen_words = m / 64;
    const std::uint64_t gen_tail = (m % 64) ? ((std::uint64_t{1} << (m % 64)) - 1) : 0;

    std::vector<SymplecticVector> checks;
    for (std::size_t r = 0; r < m; ++r) {
        checks.push_back(row_vector(code.h, r));
    }
    checks.insert(checks.end(), logicals.begin(), logicals.end());
    // sig[(q * 3 + t) * words ...], t: 0 = X, 1 = Z, 2 = Y
    std::vector<std::uint64_t> sig(n * 3 * words, 0);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t i = 0; i < bits; ++i) {
            bool anti_x = checks[i].z(q);
            bool anti_z = checks[i].x(q);
            std::uint64_t bit = std::uint64_t{1} << (i % 64);
            if (anti_x) {
                sig[(q * 3 + 0) * words + i / 64] |= bit;
            }
            if (anti_z) {
                sig[(q * 3 + 1) * words + i / 64] |= bit;
            }
            if (anti_x != anti_z) {
                sig[(q * 3 + 2) * words + i / 64] |= bit;
            }
        }
    }
    auto generator_part_zero = [&](const std::uint64_t *v) {
        for (std::size_t w = 0; w < gen_words; ++w) {
            if (v[w]) {
                return false;
            }
        }
        return gen_tail == 0 || (v[gen_words] & gen_tail) == 0;
    };
    auto all_zero = [&](const std::uint64_t *v) {
        return std::all_of(v, v + words, [](std::uint64_t x) { return x == 0; });
    };

    std::vector<std::size_t> qubits;
    std::vector<int> types;
    std::vector<std::uint64_t> acc((below + 1) * words, 0);
    std::optional<SymplecticVector> found;

    // Depth-first over qubit subsets in increasing index order.
    auto dfs = [&](auto &&self, std::size_t depth, std::size_t start, std::size_t target) -> bool {
        if (depth == target) {
            const std::uint64_t *v = &acc[depth * words];
            bool hit = want_stabilizer ? all_zero(v) : (generator_part_zero(v) && !all_zero(v));
            if (hit) {
                SymplecticVector e(n);
                for (std::size_t i = 0; i < qubits.size(); ++i) {
                    e.set_x(qubits[i], types[i] != 1);
                    e.set_z(qubits[i], types[i] != 0);
                }
                found = e;
            }
            return hit;
        }
        for (std::size_t q = start; q + (target - depth) <= n; ++q) {
            for (int t = 0; t < 3; ++t) {
                const std::uint64_t *prev = &acc[depth * words];
                const std::uint64_t *s = &sig[(q * 3 + static_cast<std::size_t>(t)) * words];
                std::uint64_t *next = &acc[(depth + 1) * words];
                for (std::size_t w = 0; w < words; ++w) {
                    next[w] = prev[w] ^ s[w];
                }
                qubits.push_back(q);
                types.push_back(t);
                bool hit = self(self, depth + 1, q + 1, target);
                qubits.pop_back();
                types.pop_back();
                if (hit) {
                    return true;
                }
            }
        }
        return false;
    };
    for (std::size_t w = 1; w < below && w <= n; ++w) {
        if (dfs(dfs, 0, 0, w)) {
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace

const char *distance_tag_name(DistanceTag t) noexcept {
    switch (t) {
    case DistanceTag::Exact:
        return "exact";
    case DistanceTag::Sampled:
        return "sampled";
    case DistanceTag::UpperBound:
        return "upper_bound";
    }
    return "unknown";
}

StandardForm standard_form(const StabilizerCode &code) {
    const std::size_t n = code.n_qubits;
    const std::size_t m = code.m();
    StandardForm sf;
    sf.matrix = code.h;
    sf.permutation = identity_order(n);
    Gf2Matrix &h = sf.matrix;

    auto swap_qubits = [&](std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        h.swap_cols(a, b);
        h.swap_cols(n + a, n + b);
        std::swap(sf.permutation[a], sf.permutation[b]);
    };
    // Brings a 1 from rows >= row, columns >= col (offset) to (row, col) and clears the column.
    auto pivot_on = [&](std::size_t row, std::size_t col, std::size_t offset) {
        for (std::size_t c = col; c < n; ++c) {
            for (std::size_t i = row; i < m; ++i) {
                if (h.get(i, offset + c)) {
                    swap_qubits(col, c);
                    h.swap_rows(row, i);
                    for (std::size_t j = 0; j < m; ++j) {
                        if (j != row && h.get(j, offset + col)) {
                            h.add_row(j, row);
                        }
                    }
                    return true;
                }
            }
        }
        return false;
    };

    std::size_t r = 0;
    while (r < m && pivot_on(r, r, 0)) {
        ++r;
    }
    sf.r = r;
    std::size_t s = r;
    while (s < m && pivot_on(s, s, n)) {
        ++s;
    }
    if (s != m) {
        throw Error(ErrorCode::Internal, "generator rows are dependent");
    }
    // pivot_on already cleared the Z pivot columns in the top rows (the C1 block).

    const std::size_t kl = n - m;
    std::vector<SymplecticVector> xs(kl, SymplecticVector(n));
    std::vector<SymplecticVector> zs(kl, SymplecticVector(n));
    for (std::size_t i = 0; i < kl; ++i) {
        const std::size_t col = m + i;
        // X = (0 E^T I | C2^T 0 0)
        xs[i].set_x(col, true);
        for (std::size_t j = r; j < m; ++j) {
            if (h.get(j, n + col)) {
                xs[i].set_x(j, true);
            }
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (h.get(j, n + col)) {
                xs[i].set_z(j, true);
            }
        }
        // Z = (0 0 0 | A2^T 0 I)
        zs[i].set_z(col, true);
        for (std::size_t j = 0; j < r; ++j) {
            if (h.get(j, col)) {
                zs[i].set_z(j, true);
            }
        }
    }
    auto unpermute = [&](const SymplecticVector &v) {
        SymplecticVector out(n);
        for (std::size_t j = 0; j < n; ++j) {
            out.set_x(sf.permutation[j], v.x(j));
            out.set_z(sf.permutation[j], v.z(j));
        }
        return out;
    };
    for (std::size_t i = 0; i < kl; ++i) {
        sf.logical_x.push_back(unpermute(xs[i]));
        sf.logical_z.push_back(unpermute(zs[i]));
    }
    return sf;
}

bool logical_relations_hold(const StabilizerCode &code, const StandardForm &sf) {
    const std::size_t kl = sf.logical_x.size();
    if (kl != code.k_logical || sf.logical_z.size() != kl) {
        return false;
    }
    for (std::size_t r = 0; r < code.m(); ++r) {
        SymplecticVector g = row_vector(code.h, r);
        for (std::size_t i = 0; i < kl; ++i) {
            if (symplectic_product(g, sf.logical_x[i]) || symplectic_product(g, sf.logical_z[i])) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < kl; ++i) {
        for (std::size_t j = 0; j < kl; ++j) {
            if (symplectic_product(sf.logical_x[i], sf.logical_x[j]) ||
                symplectic_product(sf.logical_z[i], sf.logical_z[j])) {
                return false;
            }
            if (symplectic_product(sf.logical_x[i], sf.logical_z[j]) != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

Gf2Matrix normalizer_basis(const Gf2Matrix &h) {
    const std::size_t n = h.cols() / 2;
    // v = (a|b) commutes with row (x|z) iff x.b + z.a = 0, i.e. [H2 | H1] v^T = 0.
    Gf2Matrix swapped = hconcat(h.col_block(n, n), h.col_block(0, n));
    Gf2Matrix kernel = left_kernel(transpose(swapped));
    IncrementalBasis span(2 * n);
    std::vector<std::size_t> from_h;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        if (span.insert(h.row(r))) {
            from_h.push_back(r);
        }
    }
    std::vector<std::size_t> from_kernel;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        if (span.insert(kernel.row(r))) {
            from_kernel.push_back(r);
        }
    }
    return vconcat(select_rows(h, from_h), select_rows(kernel, from_kernel));
}

DistanceValue d_dagger(const StabilizerCode &code, const DistanceOptions &opts) {
    DistanceValue out;
    const std::size_t n = code.n_qubits;
    bool exact = code.m() <= opts.exact_stabilizer_limit;
    if (opts.mode == DistanceMode::Exact && !exact) {
        throw Error(ErrorCode::InvalidArgument, "stabilizer has " + std::to_string(code.m()) +
                                                    " generators; exhaustive d-dagger is limited to " +
                                                    std::to_string(opts.exact_stabilizer_limit));
    }
    if (opts.mode == DistanceMode::Bound) {
        exact = false;
    }
    if (code.m() == 0) {
        out.value = 0;
        return out;
    }
    if (exact) {
        auto [w, witness] = gray_min(interleaved_rows(code.h, n), 0, opts.threads);
        out.value = w;
        out.tag = DistanceTag::Exact;
        out.witness = to_pauli(deinterleave(witness.data(), identity_order(n)));
        out.samples = (std::uint64_t{1} << code.m()) - 1;
        return out;
    }
    IsdResult res = isd_search(code.h, n, {}, opts.budget, opts.seed);
    out.value = res.weight;
    out.tag = DistanceTag::Sampled;
    out.witness = to_pauli(res.witness);
    out.samples = res.samples;
    if (res.weight != kNone && operators_below(n, res.weight, opts.certify_limit) <= opts.certify_limit) {
        StandardForm sf = standard_form(code);
        std::vector<SymplecticVector> logicals = sf.logical_x;
        logicals.insert(logicals.end(), sf.logical_z.begin(), sf.logical_z.end());
        if (auto lighter = lightest_below(code, logicals, res.weight, true)) {
            out.value = weight(*lighter);
            out.witness = to_pauli(*lighter);
        }
        out.tag = DistanceTag::Exact;
    }
    return out;
}

DistanceValue d_min_only(const StabilizerCode &code, const DistanceOptions &opts) {
    DistanceValue out;
    const std::size_t n = code.n_qubits;
    const std::size_t dual_dim = 2 * n - code.m();
    bool exact = dual_dim <= opts.exact_dual_limit;
    if (opts.mode == DistanceMode::Exact && !exact) {
        throw Error(ErrorCode::InvalidArgument, "normalizer dimension " + std::to_string(dual_dim) +
                                                    " exceeds the exhaustive limit " +
                                                    std::to_string(opts.exact_dual_limit));
    }
    if (opts.mode == DistanceMode::Bound) {
        exact = false;
    }
    if (code.k_logical == 0) {
        if (exact) {
            auto [w, witness] = gray_min(interleaved_rows(code.h, n), 0, opts.threads);
            out.value = w;
            out.witness = to_pauli(deinterleave(witness.data(), identity_order(n)));
            out.samples = (std::uint64_t{1} << code.m()) - 1;
            return out;
        }
        DistanceOptions bounded = opts;
        bounded.mode = DistanceMode::Bound;
        DistanceValue d = d_dagger(code, bounded);
        d.tag = d.tag == DistanceTag::Exact ? DistanceTag::Exact : DistanceTag::UpperBound;
        return d;
    }
    if (exact) {
        Gf2Matrix basis = normalizer_basis(code.h);
        auto [w, witness] = gray_min(interleaved_rows(basis, n), static_cast<unsigned>(code.m()), opts.threads);
        out.value = w;
        out.tag = DistanceTag::Exact;
        out.witness = to_pauli(deinterleave(witness.data(), identity_order(n)));
        out.samples = std::uint64_t{1} << dual_dim;
        return out;
    }

    StandardForm sf = standard_form(code);
    std::vector<SymplecticVector> logicals = sf.logical_x;
    logicals.insert(logicals.end(), sf.logical_z.begin(), sf.logical_z.end());
    Gf2Matrix gen(code.m() + logicals.size(), 2 * n);
    for (std::size_t r = 0; r < code.m(); ++r) {
        std::copy_n(code.h.row(r), code.h.words_per_row(), gen.row(r));
    }
    for (std::size_t i = 0; i < logicals.size(); ++i) {
        set_row_vector(gen, code.m() + i, logicals[i]);
    }
    IsdResult res = isd_search(gen, n, logicals, opts.budget, opts.seed);
    // The extracted logical operators are themselves elements of N(S) \ S.
    for (const auto &l : logicals) {
        if (weight(l) < res.weight) {
            res.weight = weight(l);
            res.witness = l;
        }
    }
    if (res.weight == kNone) {
        throw Error(ErrorCode::BudgetExhausted, "no element outside the stabilizer found within the budget");
    }
    out.value = res.weight;
    out.tag = DistanceTag::UpperBound;
    out.witness = to_pauli(res.witness);
    out.samples = res.samples;
    if (operators_below(n, res.weight, opts.certify_limit) <= opts.certify_limit) {
        if (auto lighter = lightest_below(code, logicals, res.weight, false)) {
            out.value = weight(*lighter);
            out.witness = to_pauli(*lighter);
        }
        out.tag = DistanceTag::Exact;
    }
    return out;
}

DistanceReport d_min(const StabilizerCode &code, const DistanceOptions &opts) {
    DistanceReport rep;
    rep.budget = opts.budget;
    rep.seed = opts.seed;
    rep.d_dagger = d_dagger(code, opts);
    rep.d_min = d_min_only(code, opts);
    if (rep.d_dagger.tag == DistanceTag::Exact && rep.d_min.tag == DistanceTag::Exact) {
        rep.degenerate = rep.d_dagger.value < rep.d_min.value;
    }
    return rep;
}

bool classify_degeneracy(const DistanceReport &report) {
    if (report.d_dagger.tag != DistanceTag::Exact || report.d_min.tag != DistanceTag::Exact) {
        throw Error(ErrorCode::InexactInputs, "degeneracy needs exact d-dagger and d_min");
    }
    return report.d_dagger.value < report.d_min.value;
}

}  // namespace qrstab
