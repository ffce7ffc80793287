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

#include "qrstab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "qrstab/analysis.hpp"
#include "qrstab/bounds.hpp"
#include "qrstab/error.hpp"
#include "qrstab/io.hpp"
#include "qrstab/numtheory.hpp"
#include "qrstab/symplectic.hpp"
#include "qrstab/tables.hpp"
#include "qrstab/type1.hpp"
#include "qrstab/type2.hpp"

struct qrstab_context {
    qrstab::QrContext ctx;
};

struct qrstab_code {
    qrstab::StabilizerCode code;
    std::optional<qrstab::StandardForm> sf;
    std::optional<qrstab::DistanceReport> report;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
int guarded(F &&f) {
    try {
        g_last_error.clear();
        f();
        return QRSTAB_OK;
    } catch (const qrstab::Error &e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return QRSTAB_E_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return QRSTAB_E_INTERNAL;
    }
}

void require(bool cond, const char *what) {
    if (!cond) {
        throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, what);
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qrstab::DistanceOptions convert(const qrstab_distance_options *opts) {
    qrstab::DistanceOptions o;
    if (!opts) {
        return o;
    }
    switch (opts->mode) {
    case QRSTAB_DISTANCE_AUTO:
        o.mode = qrstab::DistanceMode::Auto;
        break;
    case QRSTAB_DISTANCE_EXACT:
        o.mode = qrstab::DistanceMode::Exact;
        break;
    case QRSTAB_DISTANCE_BOUND:
        o.mode = qrstab::DistanceMode::Bound;
        break;
    default:
        throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "unknown distance mode");
    }
    o.budget = opts->budget;
    o.seed = opts->seed;
    o.threads = opts->threads;
    o.exact_dual_limit = opts->exact_dual_limit;
    o.exact_stabilizer_limit = opts->exact_stabilizer_limit;
    o.certify_limit = opts->certify_limit;
    return o;
}

int tag_code(qrstab::DistanceTag t) {
    switch (t) {
    case qrstab::DistanceTag::Exact:
        return QRSTAB_TAG_EXACT;
    case qrstab::DistanceTag::Sampled:
        return QRSTAB_TAG_SAMPLED;
    case qrstab::DistanceTag::UpperBound:
        return QRSTAB_TAG_UPPER_BOUND;
    }
    return QRSTAB_TAG_UPPER_BOUND;
}

std::vector<std::size_t> rows_of(const size_t *removed, size_t n) {
    require(n == 0 || removed != nullptr, "removed rows pointer is null");
    return std::vector<std::size_t>(removed, removed + n);
}

}  // namespace

extern "C" {

const char *qrstab_version(void) { return "1.0.0"; }

const char *qrstab_status_name(int status) {
    return qrstab::error_code_name(static_cast<qrstab::ErrorCode>(status));
}

const char *qrstab_last_error(void) { return g_last_error.c_str(); }

void qrstab_string_free(char *s) { std::free(s); }

int qrstab_context_create(uint64_t p, qrstab_context **out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = new qrstab_context{qrstab::classify_prime(p)};
    });
}

void qrstab_context_free(qrstab_context *ctx) { delete ctx; }

int qrstab_context_info_get(const qrstab_context *ctx, qrstab_context_info *out) {
    return guarded([&] {
        require(ctx && out, "null argument");
        const auto &c = ctx->ctx;
        *out = {c.p, c.n, c.form == qrstab::PrimeForm::FourNPlus1 ? 1 : 0, c.alpha, c.beta, c.k};
    });
}

int qrstab_context_set(const qrstab_context *ctx, int which, uint32_t *buf, size_t cap, size_t *len) {
    return guarded([&] {
        require(ctx && len, "null argument");
        const std::vector<std::uint32_t> *src = nullptr;
        switch (which) {
        case 0:
            src = &ctx->ctx.qr;
            break;
        case 1:
            src = &ctx->ctx.qnr;
            break;
        case 2:
            src = &qrstab::qr_as_beta_powers(ctx->ctx);
            break;
        default:
            throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "which must be 0, 1 or 2");
        }
        *len = src->size();
        require(cap == 0 || buf != nullptr, "buffer is null");
        for (std::size_t i = 0; i < src->size() && i < cap; ++i) {
            buf[i] = (*src)[i];
        }
    });
}

int qrstab_legendre(const qrstab_context *ctx, int64_t a, int *out) {
    return guarded([&] {
        require(ctx && out, "null argument");
        *out = qrstab::legendre(a, ctx->ctx);
    });
}

int qrstab_build_type1(uint64_t p, const char *variant, const size_t *removed, size_t n_removed, int allow_unproven,
                       qrstab_code **out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        qrstab::Type1Spec spec;
        spec.ctx = qrstab::classify_prime(p);
        spec.variant = qrstab::default_type1_variant(spec.ctx);
        if (variant) {
            auto v = qrstab::parse_type1_variant(variant);
            if (!v) {
                throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, std::string("unknown Type-I variant '") + variant + "'");
            }
            spec.variant = *v;
        }
        if (n_removed > 0) {
            spec.removed_rows = rows_of(removed, n_removed);
        }
        spec.allow_unproven = allow_unproven != 0;
        *out = new qrstab_code{qrstab::build_type1(spec), std::nullopt, std::nullopt};
    });
}

int qrstab_build_qcs(uint64_t p, const char *variant, const char *layout, int has_removed, const size_t *removed,
                     size_t n_removed, qrstab_code **out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        qrstab::QcsSpec spec;
        spec.ctx = qrstab::classify_prime(p);
        std::string v = variant ? variant : (spec.ctx.form == qrstab::PrimeForm::FourNMinus1 ? "A" : "B");
        if (v == "A" || v == "a") {
            spec.variant = qrstab::QcsVariant::A;
        } else if (v == "B" || v == "b") {
            spec.variant = qrstab::QcsVariant::B;
        } else {
            throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "QCS variant must be A or B");
        }
        if (layout) {
            if (spec.variant == qrstab::QcsVariant::B) {
                throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "QCS-B has no layout choice");
            }
            auto l = qrstab::parse_qcs_layout(layout);
            if (!l) {
                throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, std::string("unknown layout '") + layout + "'");
            }
            spec.layout = *l;
        }
        if (has_removed) {
            spec.removed_rows = rows_of(removed, n_removed);
        }
        *out = new qrstab_code{qrstab::build_qcs(spec), std::nullopt, std::nullopt};
    });
}

int qrstab_code_import(const char *text, const char *format, qrstab_code **out) {
    return guarded([&] {
        require(text && format && out, "null argument");
        std::string f = format;
        auto *handle = new qrstab_code{};
        try {
            if (f == "json") {
                handle->code = qrstab::code_from_record(qrstab::record_from_json(text));
            } else if (f == "alist") {
                handle->code = qrstab::make_code(qrstab::import_alist(text));
            } else if (f == "pauli") {
                handle->code = qrstab::make_code(qrstab::import_pauli(text));
            } else {
                throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "format must be json, alist or pauli");
            }
        } catch (...) {
            delete handle;
            throw;
        }
        *out = handle;
    });
}

void qrstab_code_free(qrstab_code *code) { delete code; }

int qrstab_code_info_get(const qrstab_code *code, qrstab_code_info *out) {
    return guarded([&] {
        require(code && out, "null argument");
        const auto &c = code->code;
        out->n_qubits = c.n_qubits;
        out->k_logical = c.k_logical;
        out->rank = c.m();
        out->full_rank = c.full_rank;
        out->closed_form_rank = c.closed_form_rank ? static_cast<long long>(*c.closed_form_rank) : -1;
        out->trivial = c.trivial ? 1 : 0;
        out->n_removed = c.removed_rows.size();
    });
}

int qrstab_code_removed_rows(const qrstab_code *code, size_t *buf, size_t cap, size_t *len) {
    return guarded([&] {
        require(code && len, "null argument");
        const auto &rows = code->code.removed_rows;
        *len = rows.size();
        require(cap == 0 || buf != nullptr, "buffer is null");
        for (std::size_t i = 0; i < rows.size() && i < cap; ++i) {
            buf[i] = rows[i];
        }
    });
}

int qrstab_code_sip_ok(const qrstab_code *code, int *out) {
    return guarded([&] {
        require(code && out, "null argument");
        *out = qrstab::sip_check(code->code.h) ? 1 : 0;
    });
}

void qrstab_distance_options_default(qrstab_distance_options *opts) {
    if (!opts) {
        return;
    }
    qrstab::DistanceOptions d;
    opts->mode = QRSTAB_DISTANCE_AUTO;
    opts->budget = d.budget;
    opts->seed = d.seed;
    opts->threads = d.threads;
    opts->exact_dual_limit = d.exact_dual_limit;
    opts->exact_stabilizer_limit = d.exact_stabilizer_limit;
    opts->certify_limit = d.certify_limit;
}

int qrstab_code_standard_form(qrstab_code *code, int *relations_ok) {
    return guarded([&] {
        require(code != nullptr, "null argument");
        code->sf = qrstab::standard_form(code->code);
        if (relations_ok) {
            *relations_ok = qrstab::logical_relations_hold(code->code, *code->sf) ? 1 : 0;
        }
    });
}

int qrstab_code_distance(qrstab_code *code, const qrstab_distance_options *opts, qrstab_distance_report *out) {
    return guarded([&] {
        require(code != nullptr, "null argument");
        code->report = qrstab::d_min(code->code, convert(opts));
        if (out) {
            const auto &r = *code->report;
            out->d_dagger = r.d_dagger.value;
            out->d_dagger_tag = tag_code(r.d_dagger.tag);
            out->d_min = r.d_min.value;
            out->d_min_tag = tag_code(r.d_min.tag);
            out->degenerate = r.degenerate ? (*r.degenerate ? 1 : 0) : -1;
            out->samples = r.d_min.samples;
        }
    });
}

int qrstab_code_witness(const qrstab_code *code, char **out) {
    return guarded([&] {
        require(code && out, "null argument");
        if (!code->report) {
            throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "no distance computed yet");
        }
        *out = dup_string(code->report->d_min.witness);
    });
}

int qrstab_code_export(const qrstab_code *code, const char *format, char **out) {
    return guarded([&] {
        require(code && format && out, "null argument");
        std::string f = format;
        if (f == "json") {
            auto rec = qrstab::make_record(code->code, code->sf ? &*code->sf : nullptr,
                                           code->report ? &*code->report : nullptr);
            *out = dup_string(qrstab::record_to_json(rec));
        } else if (f == "alist") {
            *out = dup_string(qrstab::export_alist(code->code.h));
        } else if (f == "pauli") {
            *out = dup_string(qrstab::export_pauli(code->code.h));
        } else {
            throw qrstab::Error(qrstab::ErrorCode::InvalidArgument, "format must be json, alist or pauli");
        }
    });
}

int qrstab_run_table(int which, const qrstab_distance_options *opts, char **report, int *all_pass) {
    return guarded([&] {
        require(report && all_pass, "null argument");
        auto rep = qrstab::run_table(which, convert(opts));
        *report = dup_string(rep.text());
        *all_pass = rep.pass() ? 1 : 0;
    });
}

int qrstab_bounds(size_t n, size_t k, size_t d, qrstab_bounds_report *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        auto r = qrstab::evaluate_bounds(n, k, d);
        *out = {r.t,
                r.delta_q,
                r.hamming_ok,
                r.hamming_tight,
                r.gv_ok,
                r.css_gv_rate_ok,
                r.singleton_ok,
                r.singleton_tight,
                r.hamming_rate,
                r.gv_rate,
                r.css_gv_rate,
                r.singleton_rate};
    });
}

int qrstab_bounds_csv(size_t resolution, char **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dup_string(qrstab::curves_csv(qrstab::asymptotic_curves(resolution)));
    });
}

}  // extern "C"
