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
#include <string>
#include <vector>

#include "qrstab/gf2.hpp"

namespace qrstab {

enum class CodeFamily { TypeI, QcsA, QcsB, Imported };

const char *family_name(CodeFamily f) noexcept;

/// Parity-check matrix H = [H1 | H2] (m x 2N, independent rows) plus build metadata.
struct StabilizerCode {
    std::size_t n_qubits = 0;
    std::size_t k_logical = 0;
    Gf2Matrix h;

    CodeFamily family = CodeFamily::Imported;
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::string variant;
    std::string layout;
    /// 1-based, sorted.
    std::vector<std::size_t> removed_rows;
    /// Rank of the complete matrix before any row removal.
    std::size_t full_rank = 0;
    /// Rank predicted by the family's closed form, when one applies.
    std::optional<std::size_t> closed_form_rank;
    bool trivial = false;
    std::vector<std::string> notes;

    std::size_t m() const noexcept { return h.rows(); }
    Gf2Matrix h1() const { return h.col_block(0, n_qubits); }
    Gf2Matrix h2() const { return h.col_block(n_qubits, n_qubits); }
};

/// Wraps an arbitrary m x 2N matrix: checks SIP, keeps the first-wins independent rows.
StabilizerCode make_code(const Gf2Matrix &h);

/// Drops the 1-based `removed` rows of `full`, keeps an independent subset of the rest
/// and fills in N, K, removed_rows and full_rank. Throws RowIndexOutOfRange, SipViolation.
StabilizerCode reduce_rows(const Gf2Matrix &full, const std::vector<std::size_t> &removed);

}  // namespace qrstab
