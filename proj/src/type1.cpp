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

#include "qrstab/type1.hpp"

#include <string>

#include "qrstab/error.hpp"

namespace qrstab {

const char *type1_variant_name(Type1Variant v) noexcept {
    switch (v) {
    case Type1Variant::ResiduePair:
        return "residue";
    case Type1Variant::NonResiduePair:
        return "nonresidue";
    case Type1Variant::PlusForm:
        return "plus";
    case Type1Variant::PlusFormSwapped:
        return "plus-swapped";
    }
    return "unknown";
}

std::optional<Type1Variant> parse_type1_variant(std::string_view s) noexcept {
    for (auto v : {Type1Variant::ResiduePair, Type1Variant::NonResiduePair, Type1Variant::PlusForm,
                   Type1Variant::PlusFormSwapped}) {
        if (s == type1_variant_name(v)) {
            return v;
        }
    }
    return std::nullopt;
}

Type1Variant default_type1_variant(const QrContext &ctx) noexcept {
    return ctx.form == PrimeForm::FourNMinus1 ? Type1Variant::ResiduePair : Type1Variant::PlusFormSwapped;
}

Idempotents idempotents(const QrContext &ctx) {
    std::vector<std::uint32_t> qr_bar{0};
    qr_bar.insert(qr_bar.end(), ctx.qnr.begin(), ctx.qnr.end());
    std::vector<std::uint32_t> qnr_bar{0};
    qnr_bar.insert(qnr_bar.end(), ctx.qr.begin(), ctx.qr.end());
    return {SupportPoly(ctx.p, ctx.qr), SupportPoly(ctx.p, ctx.qnr), SupportPoly(ctx.p, qr_bar),
            SupportPoly(ctx.p, qnr_bar)};
}

Gf2Matrix type1_matrix(const QrContext &ctx, Type1Variant variant) {
    Idempotents e = idempotents(ctx);
    switch (variant) {
    case Type1Variant::ResiduePair:
        return hconcat(circulant(e.qr_bar), circulant(e.qr));
    case Type1Variant::NonResiduePair:
        return hconcat(circulant(e.qnr_bar), circulant(e.qnr));
    case Type1Variant::PlusForm:
        return hconcat(circulant(e.qr), circulant(e.qnr));
    case Type1Variant::PlusFormSwapped:
        return hconcat(circulant(e.qnr), circulant(e.qr));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Type-I variant");
}

StabilizerCode build_type1(const Type1Spec &spec) {
    const QrContext &ctx = spec.ctx;
    bool plus = spec.variant == Type1Variant::PlusForm || spec.variant == Type1Variant::PlusFormSwapped;
    if (plus && ctx.form != PrimeForm::FourNPlus1) {
        throw Error(ErrorCode::WrongForm, std::string(type1_variant_name(spec.variant)) + " requires p = 4n + 1");
    }
    if (!plus && ctx.form != PrimeForm::FourNMinus1) {
        throw Error(ErrorCode::WrongForm, std::string(type1_variant_name(spec.variant)) + " requires p = 4n - 1");
    }
    if (plus && ctx.n % 2 == 0 && !spec.allow_unproven) {
        throw Error(ErrorCode::UnsupportedForm,
                    "plus forms are only established for odd n; p = " + std::to_string(ctx.p) + " has n = " +
                        std::to_string(ctx.n));
    }

    StabilizerCode code = reduce_rows(type1_matrix(ctx, spec.variant), spec.removed_rows.value_or(std::vector<std::size_t>{}));
    code.family = CodeFamily::TypeI;
    code.p = ctx.p;
    code.n = ctx.n;
    code.k = ctx.k;
    code.variant = type1_variant_name(spec.variant);
    if (plus && ctx.n % 2 == 0) {
        code.notes.push_back("plus form built for even n");
    }
    return code;
}

}  // namespace qrstab
