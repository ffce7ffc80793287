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

#include "qrstab/type2.hpp"

#include <algorithm>
#include <string>

#include "qrstab/error.hpp"

namespace qrstab {

const char *qcs_layout_name(QcsLayout l) noexcept {
    switch (l) {
    case QcsLayout::H1Adj2:
        return "h1-adj2";
    case QcsLayout::Adj2H1:
        return "adj2-h1";
    case QcsLayout::Adj1H2:
        return "adj1-h2";
    case QcsLayout::H2Adj1:
        return "h2-adj1";
    }
    return "unknown";
}

std::optional<QcsLayout> parse_qcs_layout(std::string_view s) noexcept {
    for (auto l : {QcsLayout::H1Adj2, QcsLayout::Adj2H1, QcsLayout::Adj1H2, QcsLayout::H2Adj1}) {
        if (s == qcs_layout_name(l)) {
            return l;
        }
    }
    return std::nullopt;
}

std::pair<ProtoMatrix, ProtoMatrix> build_proto_qcs_a(const QrContext &ctx) {
    if (ctx.form != PrimeForm::FourNMinus1) {
        throw Error(ErrorCode::WrongForm, "QCS-A requires p = 4n - 1");
    }
    const auto &bp = ctx.qr_powers;
    ProtoMatrix h1(ctx.p, ctx.k);
    ProtoMatrix h2(ctx.p, ctx.k);
    std::uint64_t shift = 1;
    for (std::uint32_t i = 0; i < ctx.k; ++i) {
        for (std::uint32_t j = 0; j < ctx.k; ++j) {
            auto e = static_cast<std::uint32_t>(shift * bp[j] % ctx.p);
            h1.cell(i, j) = {e};
            h2.cell(i, j) = {ctx.p - e};
        }
        shift = shift * ctx.beta % ctx.p;
    }
    return {h1, h2};
}

std::pair<ProtoMatrix, ProtoMatrix> build_proto_qcs_b(const QrContext &ctx) {
    if (ctx.form != PrimeForm::FourNPlus1) {
        throw Error(ErrorCode::WrongForm, "QCS-B requires p = 4n + 1");
    }
    const auto &bp = ctx.qr_powers;
    const std::uint64_t gamma = ctx.qnr.front();
    ProtoMatrix h1(ctx.p, ctx.k);
    ProtoMatrix h2(ctx.p, ctx.k);
    for (std::uint32_t i = 0; i < ctx.k; ++i) {
        for (std::uint32_t j = 0; j < ctx.k; ++j) {
            h1.cell(i, j) = {bp[(j + ctx.k - i) % ctx.k]};
            h2.cell(i, j) = {static_cast<std::uint32_t>(gamma * bp[(j + i) % ctx.k] % ctx.p)};
        }
    }
    return {h1, h2};
}

ProtoMatrix adjoin_zero(const ProtoMatrix &proto) {
    ProtoMatrix out = proto;
    for (auto &c : out.cells) {
        c.insert(c.begin(), 0u);
    }
    return out;
}

Gf2Matrix lift(const ProtoMatrix &proto) {
    const std::size_t p = proto.p;
    Gf2Matrix m(p * proto.k, p * proto.k);
    for (std::size_t i = 0; i < proto.k; ++i) {
        for (std::size_t j = 0; j < proto.k; ++j) {
            for (std::uint32_t d : proto.cell(i, j)) {
                for (std::size_t r = 0; r < p; ++r) {
                    m.flip(i * p + r, j * p + (r + d) % p);
                }
            }
        }
    }
    return m;
}

bool is_latin_square(const ProtoMatrix &proto) {
    if (proto.k == 0) {
        return true;
    }
    std::vector<std::uint32_t> symbols;
    for (std::size_t j = 0; j < proto.k; ++j) {
        if (proto.cell(0, j).size() != 1) {
            return false;
        }
        symbols.push_back(proto.cell(0, j)[0]);
    }
    std::sort(symbols.begin(), symbols.end());
    for (std::size_t i = 0; i < proto.k; ++i) {
        std::vector<std::uint32_t> row;
        std::vector<std::uint32_t> col;
        for (std::size_t j = 0; j < proto.k; ++j) {
            if (proto.cell(i, j).size() != 1 || proto.cell(j, i).size() != 1) {
                return false;
            }
            row.push_back(proto.cell(i, j)[0]);
            col.push_back(proto.cell(j, i)[0]);
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        if (row != symbols || col != symbols) {
            return false;
        }
    }
    return true;
}

bool is_symmetric(const ProtoMatrix &proto) {
    for (std::size_t i = 0; i < proto.k; ++i) {
        for (std::size_t j = i + 1; j < proto.k; ++j) {
            if (proto.cell(i, j) != proto.cell(j, i)) {
                return false;
            }
        }
    }
    return true;
}

Gf2Matrix qcs_matrix(const QrContext &ctx, QcsVariant variant, QcsLayout layout) {
    if (variant == QcsVariant::B) {
        auto [h1, h2] = build_proto_qcs_b(ctx);
        return hconcat(lift(h1), lift(h2));
    }
    auto [h1, h2] = build_proto_qcs_a(ctx);
    switch (layout) {
    case QcsLayout::H1Adj2:
        return hconcat(lift(h1), lift(adjoin_zero(h2)));
    case QcsLayout::Adj2H1:
        return hconcat(lift(adjoin_zero(h2)), lift(h1));
    case QcsLayout::Adj1H2:
        return hconcat(lift(adjoin_zero(h1)), lift(h2));
    case QcsLayout::H2Adj1:
        return hconcat(lift(h2), lift(adjoin_zero(h1)));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown QCS layout");
}

std::size_t qcs_closed_form_rank(const QrContext &ctx, QcsVariant variant) {
    const std::size_t k = ctx.k;
    const std::size_t p = ctx.p;
    if (ctx.n % 2 == 0) {
        return k * (p - 2) + 1;
    }
    if (variant == QcsVariant::A && k % 3 == 0) {
        return k * (p - 3) + 1;
    }
    return k * (p - 1) + 1;
}

std::vector<std::size_t> default_removal(const Gf2Matrix &h, const QrContext &ctx, QcsVariant variant) {
    const std::size_t p = ctx.p;
    const std::size_t k = ctx.k;
    if (h.rows() != p * k) {
        throw Error(ErrorCode::ShapeMismatch, "matrix does not have pk rows");
    }
    // Row r of kt is column r of the left kernel: the dependencies row r takes part in.
    Gf2Matrix kt = transpose(left_kernel(h));
    IncrementalBasis broken(kt.cols());
    std::vector<char> used(h.rows(), 0);

    auto take = [&](std::size_t r) {
        used[r] = 1;
        if (kt.cols() > 0) {
            broken.insert(kt.row(r));
        }
    };
    auto take_one_from = [&](std::size_t array) {
        std::optional<std::size_t> fallback;
        for (std::size_t off = p; off-- > 0;) {
            std::size_t r = array * p + off;
            if (used[r]) {
                continue;
            }
            if (!fallback) {
                fallback = r;
            }
            if (kt.cols() > 0 && broken.size() < kt.cols() && !broken.contains(kt.row(r))) {
                take(r);
                return;
            }
        }
        if (fallback) {
            take(*fallback);
        }
    };

    if (ctx.n % 2 == 1) {
        if (variant == QcsVariant::A && k % 3 == 0) {
            for (std::size_t off = 0; off < p; ++off) {
                take((k - 1) * p + off);
            }
            for (std::size_t a = 0; a + 2 < k; ++a) {
                take_one_from(a);
            }
        } else {
            for (std::size_t a = 0; a + 1 < k; ++a) {
                take_one_from(a);
            }
        }
    } else {
        for (std::size_t a = 0; a + 1 < k; ++a) {
            take_one_from(a);
        }
        for (std::size_t a = 0; a < k; ++a) {
            take_one_from(a);
        }
    }

    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        if (used[r]) {
            out.push_back(r + 1);
        }
    }
    return out;
}

StabilizerCode build_qcs(const QcsSpec &spec) {
    const QrContext &ctx = spec.ctx;
    Gf2Matrix full = qcs_matrix(ctx, spec.variant, spec.layout);
    std::vector<std::size_t> removed =
        spec.removed_rows ? *spec.removed_rows : default_removal(full, ctx, spec.variant);

    StabilizerCode code = reduce_rows(full, removed);
    code.family = spec.variant == QcsVariant::A ? CodeFamily::QcsA : CodeFamily::QcsB;
    code.p = ctx.p;
    code.n = ctx.n;
    code.k = ctx.k;
    code.variant = spec.variant == QcsVariant::A ? "A" : "B";
    if (spec.variant == QcsVariant::A) {
        code.layout = qcs_layout_name(spec.layout);
    }
    code.closed_form_rank = qcs_closed_form_rank(ctx, spec.variant);
    if (code.m() != *code.closed_form_rank) {
        code.notes.push_back("rank " + std::to_string(code.m()) + " differs from closed form " +
                             std::to_string(*code.closed_form_rank));
    }
    if (code.full_rank != *code.closed_form_rank) {
        code.notes.push_back("unreduced matrix has rank " + std::to_string(code.full_rank));
    }
    return code;
}

}  // namespace qrstab
