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

#include "hitchin/hitchin.h"

#include <cstring>
#include <optional>
#include <string>

#include "hitchin/analysis.hpp"
#include "hitchin/generator.hpp"
#include "hitchin/sweep.hpp"

struct hx_field {
    hx::HiggsField field;
    std::optional<hx::Json> provenance;
};

struct hx_report_set {
    std::vector<hx::DimensionReport> rows;
    std::optional<hx::AuxiliarySweep> auxiliary;
};

namespace {

thread_local std::string last_error;

hx_status record(hx_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
hx_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const hx::Error& e) {
        switch (e.kind()) {
            case hx::ErrorKind::InvalidArgument: return record(HX_INVALID_ARGUMENT, e.what());
            case hx::ErrorKind::NonGeneric: return record(HX_NON_GENERIC, e.what());
            case hx::ErrorKind::Internal: return record(HX_INTERNAL_ERROR, e.what());
        }
        return record(HX_INTERNAL_ERROR, e.what());
    } catch (const std::exception& e) {
        return record(HX_INTERNAL_ERROR, e.what());
    } catch (...) {
        return record(HX_INTERNAL_ERROR, "unknown error");
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hx::GroupKind to_kind(hx_group g) {
    switch (g) {
        case HX_GROUP_SP: return hx::GroupKind::SpEven;
        case HX_GROUP_SO_EVEN: return hx::GroupKind::SOEven;
        case HX_GROUP_SO_ODD: return hx::GroupKind::SOOdd;
    }
    hx::fail("unknown group code");
}

hx_group to_code(hx::GroupKind k) {
    switch (k) {
        case hx::GroupKind::SpEven: return HX_GROUP_SP;
        case hx::GroupKind::SOEven: return HX_GROUP_SO_EVEN;
        case hx::GroupKind::SOOdd: return HX_GROUP_SO_ODD;
    }
    return HX_GROUP_SP;
}

hx_dimension_row to_row(const hx::DimensionReport& r) {
    hx_dimension_row row{};
    row.group = to_code(r.group.kind);
    row.m = r.group.m;
    row.g = r.g;
    row.n = r.n;
    row.deg_m = r.degM;
    row.dim_hitchin = r.dim_hitchin;
    row.dim_moduli = r.dim_moduli;
    row.prym = r.prym_dim;
    row.dim_higgs_moduli = r.dim_higgs_moduli;
    row.spectral_genus = r.spectral_genus;
    row.quotient_or_desingularized_genus = r.quotient_or_desing_genus;
    row.fixed_points_or_singularities = r.fixed_points_or_singularities;
    row.rr_exact = r.rr_exact ? 1 : 0;
    row.pass = r.pass ? 1 : 0;
    return row;
}

void require_out(const void* p) { hx::require(p != nullptr, "null output pointer"); }

}  // namespace

extern "C" {

const char* hx_version(void) { return "1.0.0"; }

const char* hx_last_error(void) { return last_error.c_str(); }

void hx_string_free(char* s) { std::free(s); }

hx_status hx_group_parse(const char* tag, hx_group* out) {
    return guarded([&] {
        require_out(out);
        hx::require(tag != nullptr, "null group tag");
        *out = to_code(hx::parse_group_tag(tag));
        return HX_OK;
    });
}

hx_status hx_format_parse(const char* name, hx_format* out) {
    return guarded([&] {
        require_out(out);
        hx::require(name != nullptr, "null format name");
        switch (hx::parse_table_format(name)) {
            case hx::TableFormat::Json: *out = HX_FORMAT_JSON; break;
            case hx::TableFormat::Csv: *out = HX_FORMAT_CSV; break;
            case hx::TableFormat::Markdown: *out = HX_FORMAT_MD; break;
        }
        return HX_OK;
    });
}

hx_status hx_dimension(hx_group group, int64_t m, int64_t g, int64_t n, int64_t deg_m, hx_dimension_row* out) {
    return guarded([&] {
        require_out(out);
        hx::require(m >= 1 && m <= 1'000'000, "m out of range");
        const auto group_spec = hx::GroupSpec::make(to_kind(group), static_cast<int>(m));
        *out = to_row(hx::identity_suite(group_spec, hx::CurveParams{g, n, deg_m}));
        return HX_OK;
    });
}

hx_status hx_sweep(const hx_group* groups, size_t group_count, int64_t m_lo, int64_t m_hi, int64_t g_lo,
                   int64_t g_hi, int64_t n_lo, int64_t n_hi, int64_t deg_m, int with_auxiliary, unsigned threads,
                   hx_report_set** out) {
    return guarded([&] {
        require_out(out);
        hx::require(groups != nullptr || group_count == 0, "null group list");
        hx::SweepBox box;
        box.groups.clear();
        for (size_t i = 0; i < group_count; ++i) box.groups.push_back(to_kind(groups[i]));
        box.m = {m_lo, m_hi};
        box.g = {g_lo, g_hi};
        box.n = {n_lo, n_hi};
        box.degM = deg_m;
        hx::require(m_hi <= 1'000'000, "m out of range");
        auto set = std::make_unique<hx_report_set>();
        set->rows = hx::sweep_dimensions(box, threads);
        if (with_auxiliary) set->auxiliary = hx::sweep_auxiliary(box);
        *out = set.release();
        return HX_OK;
    });
}

size_t hx_report_set_size(const hx_report_set* set) { return set == nullptr ? 0 : set->rows.size(); }

hx_status hx_report_set_row(const hx_report_set* set, size_t index, hx_dimension_row* out) {
    return guarded([&] {
        require_out(out);
        hx::require(set != nullptr && index < set->rows.size(), "report index out of range");
        *out = to_row(set->rows[index]);
        return HX_OK;
    });
}

int hx_report_set_all_pass(const hx_report_set* set) {
    if (set == nullptr) return 0;
    for (const auto& r : set->rows)
        if (!r.pass) return 0;
    return (!set->auxiliary || set->auxiliary->pass) ? 1 : 0;
}

hx_status hx_report_set_render(const hx_report_set* set, hx_format format, char** out) {
    return guarded([&] {
        require_out(out);
        hx::require(set != nullptr, "null report set");
        std::string text;
        switch (format) {
            case HX_FORMAT_JSON:
                if (set->auxiliary) {
                    hx::Json rows = hx::Json::array();
                    for (const auto& r : set->rows) rows.push_back(hx::to_json(r));
                    text = hx::Json{{"reports", std::move(rows)}, {"auxiliary", set->auxiliary->report}}.dump(2) + "\n";
                } else {
                    text = hx::render_reports(set->rows, hx::TableFormat::Json);
                }
                break;
            case HX_FORMAT_CSV: text = hx::render_reports(set->rows, hx::TableFormat::Csv); break;
            case HX_FORMAT_MD:
                text = hx::render_reports(set->rows, hx::TableFormat::Markdown);
                if (set->auxiliary) {
                    const auto& a = set->auxiliary->report;
                    text += "\n| auxiliary check | checked | failed |\n|---|---|---|\n";
                    for (const char* key : {"genus_crosscheck", "eigenline_reconciliation", "sqrt_parity"}) {
                        text += "| " + std::string(key) + " | " + a[key]["checked"].dump() + " | " +
                                a[key]["failed"].dump() + " |\n";
                    }
                    text += "\nauxiliary verdict: " + a["verdict"].get<std::string>() + "\n";
                }
                break;
            default: hx::fail("unknown format");
        }
        *out = duplicate(text);
        return HX_OK;
    });
}

void hx_report_set_free(hx_report_set* set) { delete set; }

hx_status hx_field_generate(hx_group group, int m, const char* const* marked_points, size_t marked_count,
                            int degree_bound, uint64_t seed, hx_field** out) {
    return guarded([&] {
        require_out(out);
        hx::require(marked_points != nullptr || marked_count == 0, "null marked point list");
        std::vector<hx::Rational> pts;
        hx::Json pts_json = hx::Json::array();
        for (size_t i = 0; i < marked_count; ++i) {
            hx::require(marked_points[i] != nullptr, "null marked point");
            pts.push_back(hx::parse_rational(marked_points[i]));
            pts_json.push_back(hx::to_string(pts.back()));
        }
        const auto group_spec = hx::GroupSpec::make(to_kind(group), m);
        auto field = hx::random_strongly_parabolic_higgs(group_spec, pts, degree_bound, seed);
        hx::Json prov{{"seed", seed}, {"degree_bound", degree_bound}, {"marked_points", std::move(pts_json)}};
        *out = new hx_field{std::move(field), std::move(prov)};
        return HX_OK;
    });
}

hx_status hx_field_parse(const char* json, hx_field** out) {
    return guarded([&] {
        require_out(out);
        hx::require(json != nullptr, "null JSON text");
        *out = new hx_field{hx::higgs_from_json(hx::parse_json_text(json)), std::nullopt};
        return HX_OK;
    });
}

hx_status hx_field_to_json(const hx_field* field, char** out) {
    return guarded([&] {
        require_out(out);
        hx::require(field != nullptr, "null field");
        hx::Json j = hx::to_json(field->field);
        if (field->provenance) j["generator"] = *field->provenance;
        *out = duplicate(j.dump(2) + "\n");
        return HX_OK;
    });
}

void hx_field_free(hx_field* field) { delete field; }

hx_status hx_analyze(const char* json, const char* checks, char** report, int* all_pass) {
    return guarded([&] {
        require_out(report);
        require_out(all_pass);
        hx::require(json != nullptr, "null JSON text");
        const unsigned mask = hx::parse_check_list(checks != nullptr ? checks : "all");
        const hx::Analysis a = hx::analyze_document(hx::parse_json_text(json), mask);
        *report = duplicate(a.report.dump(2) + "\n");
        *all_pass = a.pass ? 1 : 0;
        return a.pass ? HX_OK : HX_VERIFICATION_FAILED;
    });
}

hx_status hx_field_reduce_odd(const hx_field* field, char** out, int* all_pass) {
    return guarded([&] {
        require_out(out);
        require_out(all_pass);
        hx::require(field != nullptr, "null field");
        const hx::Analysis a = hx::reduce_odd_document(field->field);
        *out = duplicate(a.report.dump(2) + "\n");
        *all_pass = a.pass ? 1 : 0;
        return a.pass ? HX_OK : HX_VERIFICATION_FAILED;
    });
}

}  // extern "C"
