/* Copyright 2026 The qrstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QRSTAB_H_
#define QRSTAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QRSTAB_BUILDING_LIBRARY)
#    define QRSTAB_API __declspec(dllexport)
#  else
#    define QRSTAB_API __declspec(dllimport)
#  endif
#else
#  define QRSTAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function returning int returns one of these. */
enum {
    QRSTAB_OK = 0,
    QRSTAB_E_NOT_PRIME = 1,
    QRSTAB_E_UNSUPPORTED_MODULUS = 2,
    QRSTAB_E_WRONG_FORM = 3,
    QRSTAB_E_UNSUPPORTED_FORM = 4,
    QRSTAB_E_SIP_VIOLATION = 5,
    QRSTAB_E_ROW_INDEX_OUT_OF_RANGE = 6,
    QRSTAB_E_LENGTH_MISMATCH = 7,
    QRSTAB_E_SHAPE_MISMATCH = 8,
    QRSTAB_E_INVALID_SYMBOL = 9,
    QRSTAB_E_INEXACT_INPUTS = 10,
    QRSTAB_E_BUDGET_EXHAUSTED = 11,
    QRSTAB_E_MALFORMED_ALIST = 12,
    QRSTAB_E_MALFORMED_RECORD = 13,
    QRSTAB_E_INVALID_ARGUMENT = 14,
    QRSTAB_E_IO = 15,
    QRSTAB_E_INTERNAL = 16
};

typedef struct qrstab_context qrstab_context;
typedef struct qrstab_code qrstab_code;

QRSTAB_API const char *qrstab_version(void);
QRSTAB_API const char *qrstab_status_name(int status);
/* Message for the most recent failure on the calling thread ("" if none). */
QRSTAB_API const char *qrstab_last_error(void);
/* Frees strings returned through char ** out-parameters. */
QRSTAB_API void qrstab_string_free(char *s);

/* ---- quadratic residues ---- */

typedef struct qrstab_context_info {
    uint32_t p;
    uint32_t n;
    int form_plus; /* 1 for p = 4n + 1, 0 for p = 4n - 1 */
    uint32_t alpha;
    uint32_t beta;
    uint32_t k;
} qrstab_context_info;

QRSTAB_API int qrstab_context_create(uint64_t p, qrstab_context **out);
QRSTAB_API void qrstab_context_free(qrstab_context *ctx);
QRSTAB_API int qrstab_context_info_get(const qrstab_context *ctx, qrstab_context_info *out);
/* which: 0 = sorted residues, 1 = sorted non-residues, 2 = residues as beta^1 .. beta^k.
 * Writes up to cap values; *len receives k. */
QRSTAB_API int qrstab_context_set(const qrstab_context *ctx, int which, uint32_t *buf, size_t cap, size_t *len);
QRSTAB_API int qrstab_legendre(const qrstab_context *ctx, int64_t a, int *out);

/* ---- construction ---- */

/* variant: "residue", "nonresidue", "plus", "plus-swapped" or NULL for the form's default.
 * removed: 1-based rows of the p x 2p matrix, may be NULL when n_removed is 0. */
QRSTAB_API int qrstab_build_type1(uint64_t p, const char *variant, const size_t *removed, size_t n_removed,
                                  int allow_unproven, qrstab_code **out);
/* variant: "A" or "B". layout: "h1-adj2", "adj2-h1", "adj1-h2", "h2-adj1" or NULL (h1-adj2).
 * has_removed = 0 applies the construction procedure; otherwise removed/n_removed are 1-based rows. */
QRSTAB_API int qrstab_build_qcs(uint64_t p, const char *variant, const char *layout, int has_removed,
                                const size_t *removed, size_t n_removed, qrstab_code **out);
/* format: "json", "alist" or "pauli". */
QRSTAB_API int qrstab_code_import(const char *text, const char *format, qrstab_code **out);
QRSTAB_API void qrstab_code_free(qrstab_code *code);

typedef struct qrstab_code_info {
    size_t n_qubits;
    size_t k_logical;
    size_t rank;
    size_t full_rank;
    long long closed_form_rank; /* -1 when no closed form applies */
    int trivial;
    size_t n_removed;
} qrstab_code_info;

QRSTAB_API int qrstab_code_info_get(const qrstab_code *code, qrstab_code_info *out);
/* 1-based removed rows; *len receives the count. */
QRSTAB_API int qrstab_code_removed_rows(const qrstab_code *code, size_t *buf, size_t cap, size_t *len);
QRSTAB_API int qrstab_code_sip_ok(const qrstab_code *code, int *out);

/* ---- analysis ---- */

enum { QRSTAB_DISTANCE_AUTO = 0, QRSTAB_DISTANCE_EXACT = 1, QRSTAB_DISTANCE_BOUND = 2 };
enum { QRSTAB_TAG_EXACT = 0, QRSTAB_TAG_SAMPLED = 1, QRSTAB_TAG_UPPER_BOUND = 2 };

typedef struct qrstab_distance_options {
    int mode;
    uint64_t budget;
    uint64_t seed;
    unsigned threads;
    size_t exact_dual_limit;
    size_t exact_stabilizer_limit;
    uint64_t certify_limit;
} qrstab_distance_options;

QRSTAB_API void qrstab_distance_options_default(qrstab_distance_options *opts);

/* Computes logical operators; kept on the handle and included in exports. */
QRSTAB_API int qrstab_code_standard_form(qrstab_code *code, int *relations_ok);

typedef struct qrstab_distance_report {
    size_t d_dagger;
    int d_dagger_tag;
    size_t d_min;
    int d_min_tag;
    int degenerate; /* -1 when either value is inexact */
    uint64_t samples;
} qrstab_distance_report;

/* Computes d-dagger and d_min; kept on the handle and included in exports. opts may be NULL. */
QRSTAB_API int qrstab_code_distance(qrstab_code *code, const qrstab_distance_options *opts,
                                    qrstab_distance_report *out);
/* Pauli string of the d_min witness; requires a prior qrstab_code_distance. */
QRSTAB_API int qrstab_code_witness(const qrstab_code *code, char **out);

/* format: "json", "alist" or "pauli". */
QRSTAB_API int qrstab_code_export(const qrstab_code *code, const char *format, char **out);

/* ---- reference tables ---- */

/* which: 1..4. *report receives a text report, *all_pass 1 when every counted check passed. */
QRSTAB_API int qrstab_run_table(int which, const qrstab_distance_options *opts, char **report, int *all_pass);

/* ---- bounds ---- */

typedef struct qrstab_bounds_report {
    size_t t;
    double delta_q;
    int hamming_ok;
    int hamming_tight;
    int gv_ok;
    int css_gv_rate_ok;
    int singleton_ok;
    int singleton_tight;
    double hamming_rate;
    double gv_rate;
    double css_gv_rate;
    double singleton_rate;
} qrstab_bounds_report;

QRSTAB_API int qrstab_bounds(size_t n, size_t k, size_t d, qrstab_bounds_report *out);
QRSTAB_API int qrstab_bounds_csv(size_t resolution, char **out);

#ifdef __cplusplus
}
#endif

#endif /* QRSTAB_H_ */
