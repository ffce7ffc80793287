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
#include <optional>
#include <string_view>
#include <vector>

#include "qrstab/gf2.hpp"
#include "qrstab/numtheory.hpp"
#include "qrstab/stabilizer_code.hpp"

namespace qrstab {

/// H1/H2 polynomial pairings.
///   ResiduePair     H1 = Qbar^r,  H2 = Q^r    (p = 4n - 1)
///   NonResiduePair  H1 = Qbar^nr, H2 = Q^nr   (p = 4n - 1)
///   PlusForm        H1 = Q^r,     H2 = Q^nr   (p = 4n + 1)
///   PlusFormSwapped H1 = Q^nr,    H2 = Q^r    (p = 4n + 1)
enum class Type1Variant { ResiduePair, NonResiduePair, PlusForm, PlusFormSwapped };

const char *type1_variant_name(Type1Variant v) noexcept;
std::optional<Type1Variant> parse_type1_variant(std::string_view s) noexcept;
/// ResiduePair for 4n - 1, PlusFormSwapped for 4n + 1.
Type1Variant default_type1_variant(const QrContext &ctx) noexcept;

struct Idempotents {
    SupportPoly qr;
    SupportPoly qnr;
    SupportPoly qr_bar;
    SupportPoly qnr_bar;
};

Idempotents idempotents(const QrContext &ctx);

struct Type1Spec {
    QrContext ctx;
    Type1Variant variant = Type1Variant::ResiduePair;
    /// 1-based rows of the p x 2p matrix to discard before the independent scan.
    std::optional<std::vector<std::size_t>> removed_rows;
    /// Permits the plus forms for even n (p = 5 mod 8).
    bool allow_unproven = false;
};

/// The full p x 2p matrix [circ(H1) | circ(H2)] for a variant.
Gf2Matrix type1_matrix(const QrContext &ctx, Type1Variant variant);

/// Throws WrongForm, UnsupportedForm, SipViolation, RowIndexOutOfRange.
StabilizerCode build_type1(const Type1Spec &spec);

}  // namespace qrstab
