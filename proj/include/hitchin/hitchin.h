/*
 * Copyright 2026 The hitchin-exact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the hitchin-exact library. All functions are thread-safe;
 * errors are reported through hx_status codes, with a thread-local message
 * available from hx_last_error(). Strings returned through char** out
 * parameters are owned by the caller and released with hx_string_free(). */
#ifndef HITCHIN_H
#define HITCHIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HX_API __declspec(dllexport)
#else
#define HX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hx_status {
    HX_OK = 0,
    HX_VERIFICATION_FAILED = 1,
    HX_INVALID_ARGUMENT = 2,
    HX_NON_GENERIC = 3,
    HX_INTERNAL_ERROR = 4
} hx_status;

typedef enum hx_group { HX_GROUP_SP = 0, HX_GROUP_SO_EVEN = 1, HX_GROUP_SO_ODD = 2 } hx_group;

typedef enum hx_format { HX_FORMAT_JSON = 0, HX_FORMAT_CSV = 1, HX_FORMAT_MD = 2 } hx_format;

typedef struct hx_field hx_field;
typedef struct hx_report_set hx_report_set;

typedef struct hx_dimension_row {
    hx_group group;
    int64_t m, g, n, deg_m;
    int64_t dim_hitchin;
    int64_t dim_moduli;
    int64_t prym;
    int64_t dim_higgs_moduli;
    int64_t spectral_genus;
    int64_t quotient_or_desingularized_genus;
    int64_t fixed_points_or_singularities;
    int rr_exact;
    int pass;
} hx_dimension_row;

HX_API const char* hx_version(void);
HX_API const char* hx_last_error(void);
HX_API void hx_string_free(char* s);

HX_API hx_status hx_group_parse(const char* tag, hx_group* out);
HX_API hx_status hx_format_parse(const char* name, hx_format* out);

/* Dimension identity chain for one (group, m, g, n). */
HX_API hx_status hx_dimension(hx_group group, int64_t m, int64_t g, int64_t n, int64_t deg_m, hx_dimension_row* out);

/* Sweep over a box of parameters; rows are sorted by (group, m, g, n). */
HX_API hx_status hx_sweep(const hx_group* groups, size_t group_count, int64_t m_lo, int64_t m_hi, int64_t g_lo,
                          int64_t g_hi, int64_t n_lo, int64_t n_hi, int64_t deg_m, int with_auxiliary,
                          unsigned threads, hx_report_set** out);
HX_API size_t hx_report_set_size(const hx_report_set* set);
HX_API hx_status hx_report_set_row(const hx_report_set* set, size_t index, hx_dimension_row* out);
/* 1 when every chain (and every auxiliary check, if requested) passed. */
HX_API int hx_report_set_all_pass(const hx_report_set* set);
HX_API hx_status hx_report_set_render(const hx_report_set* set, hx_format format, char** out);
HX_API void hx_report_set_free(hx_report_set* set);

/* Seeded random strongly parabolic Higgs field; marked points are "p/q" strings. */
HX_API hx_status hx_field_generate(hx_group group, int m, const char* const* marked_points, size_t marked_count,
                                   int degree_bound, uint64_t seed, hx_field** out);
HX_API hx_status hx_field_parse(const char* json, hx_field** out);
HX_API hx_status hx_field_to_json(const hx_field* field, char** out);
HX_API void hx_field_free(hx_field* field);

/* Runs the selected checks ("membership,charpoly,parity,strong,pfaffian,spectral"
 * or "all") on a Higgs field or reduction document. *all_pass is 1 iff every
 * check passed. */
HX_API hx_status hx_analyze(const char* json, const char* checks, char** report, int* all_pass);

/* Kernel-quotient reduction of an so-odd field; *all_pass reports its checks. */
HX_API hx_status hx_field_reduce_odd(const hx_field* field, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* HITCHIN_H */
