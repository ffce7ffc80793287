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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qrstab/gf2.hpp"
#include "qrstab/numtheory.hpp"
#include "qrstab/stabilizer_code.hpp"

namespace qrstab {

/// k x k array of exponent sets mod p. Plain cells hold one exponent, adjoined cells two.
struct ProtoMatrix {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::vector<std::vector<std::uint32_t>> cells;

    ProtoMatrix() = default;
    ProtoMatrix(std::uint32_t modulus, std::uint32_t order) : p(modulus), k(order), cells(std::size_t{order} * order) {}

    std::vector<std::uint32_t> &cell(std::size_t i, std::size_t j) { return cells[i * k + j]; }
    const std::vector<std::uint32_t> &cell(std::size_t i, std::size_t j) const { return cells[i * k + j]; }

    friend bool operator==(const ProtoMatrix &, const ProtoMatrix &) = default;
};

enum class QcsVariant { A, B };

/// Arrangements of the QCS-A proto-matrix; "adj" marks the side carrying the extra exponent 0.
enum class QcsLayout { H1Adj2, Adj2H1, Adj1H2, H2Adj1 };

const char *qcs_layout_name(QcsLayout l) noexcept;
std::optional<QcsLayout> parse_qcs_layout(std::string_view s) noexcept;

/// Returns (H1proto, H2proto), no adjunction. Throws WrongForm unless p = 4n - 1.
std::pair<ProtoMatrix, ProtoMatrix> build_proto_qcs_a(const QrContext &ctx);
/// Returns (H1proto, H2proto). Throws WrongForm unless p = 4n + 1.
std::pair<ProtoMatrix, ProtoMatrix> build_proto_qcs_b(const QrContext &ctx);

/// Adds exponent 0 to every cell.
ProtoMatrix adjoin_zero(const ProtoMatrix &proto);

/// Cell (i, j) with exponent set S becomes block (i, j) = sum of P^d over d in S.
Gf2Matrix lift(const ProtoMatrix &proto);

/// Every row and column holds each value of the first row exactly once (singleton cells only).
bool is_latin_square(const ProtoMatrix &proto);
bool is_symmetric(const ProtoMatrix &proto);

struct QcsSpec {
    QrContext ctx;
    QcsVariant variant = QcsVariant::A;
    QcsLayout layout = QcsLayout::H1Adj2;
    /// 1-based rows of the lifted pk x 2pk matrix; the construction procedure applies when absent.
    std::optional<std::vector<std::size_t>> removed_rows;
};

/// The lifted pk x 2pk matrix [left | right] before any removal.
Gf2Matrix qcs_matrix(const QrContext &ctx, QcsVariant variant, QcsLayout layout);

/// Closed-form rank of the lifted left half.
std::size_t qcs_closed_form_rank(const QrContext &ctx, QcsVariant variant);

/// Rows removed by the construction procedure for this matrix, 1-based and sorted.
///   (1) A, n odd, 3 | k: the whole last circulant array, then one row from each of the first k - 2 arrays.
///   (2) n odd otherwise: one row from each of the first k - 1 arrays.
///   (3) n even: one row from each of the first k - 1 arrays, then one more from each of the k arrays.
/// Inside an array rows are tried from last to first and the first row that breaks a remaining
/// linear dependency is taken; if none does, the last unused row is taken.
std::vector<std::size_t> default_removal(const Gf2Matrix &h, const QrContext &ctx, QcsVariant variant);

/// Throws WrongForm, SipViolation, RowIndexOutOfRange.
StabilizerCode build_qcs(const QcsSpec &spec);

}  // namespace qrstab
