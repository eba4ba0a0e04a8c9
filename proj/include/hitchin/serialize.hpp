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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>
#include "hitchin/divisor.hpp"
#include "hitchin/lie.hpp"
#include "hitchin/so_odd.hpp"
#include "hitchin/spectral.hpp"

namespace hx {

using Json = nlohmann::json;

// Rationals are "p/q" strings (integers also accepted on input); polynomials are
// ascending coefficient arrays; rational functions are {"num": [...], "den": [...]}.
Json to_json(const Rational& q);
Json to_json(const UniPoly& p);
Json to_json(const RationalFunction& f);
Json to_json(const FuncMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const CharData& c);
Json to_json(const HiggsField& phi);
Json to_json(const PlaneCurve& c);
Json to_json(const SingularReport& r);
Json to_json(const DimensionReport& r);
Json to_json(const OddReduction& r);
Json to_json(const PfaffianConventionReport& r);

Rational rational_from_json(const Json& j);
UniPoly poly_from_json(const Json& j);
RationalFunction ratfunc_from_json(const Json& j);
FuncMatrix func_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);
HiggsField higgs_from_json(const Json& j);
PlaneCurve curve_from_json(const Json& j);
SingularReport singular_report_from_json(const Json& j);
DimensionReport dimension_report_from_json(const Json& j);
OddReduction reduction_from_json(const Json& j);

/// Parses text, mapping parser failures to hx::Error.
Json parse_json_text(const std::string& text);

enum class TableFormat { Json, Csv, Markdown };
TableFormat parse_table_format(const std::string& name);

/// Fixed columns: group, m, g, n, dimH, dimM, prym, dimN, verdict.
std::string render_reports(const std::vector<DimensionReport>& reports, TableFormat format);
std::string csv_row(const DimensionReport& r);

}  // namespace hx
