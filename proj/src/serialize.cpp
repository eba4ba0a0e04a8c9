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

#include "hitchin/serialize.hpp"

#include <sstream>

namespace hx {

namespace {

const Json& at(const Json& j, const char* key) {
    require(j.is_object(), std::string("expected an object with key \"") + key + "\"");
    const auto it = j.find(key);
    require(it != j.end(), std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array_at(const Json& j, const char* key) {
    const Json& v = at(j, key);
    require(v.is_array(), std::string("\"") + key + "\" must be an array");
    return v;
}

long int_at(const Json& j, const char* key) {
    const Json& v = at(j, key);
    require(v.is_number_integer(), std::string("\"") + key + "\" must be an integer");
    return v.get<long>();
}

template <class T, class F>
Matrix<T> matrix_from(const Json& j, F&& entry) {
    require(j.is_array(), "matrix must be an array of rows");
    std::vector<std::vector<T>> rows;
    for (const auto& row : j) {
        require(row.is_array(), "matrix row must be an array");
        std::vector<T> r;
        for (const auto& e : row) r.push_back(entry(e));
        rows.push_back(std::move(r));
    }
    return Matrix<T>::from_rows(rows);
}

template <class T>
Json matrix_to(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json points_to(const std::vector<Rational>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

std::vector<Rational> points_from(const Json& j) {
    require(j.is_array(), "marked_points must be an array");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const UniPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const FuncMatrix& m) { return matrix_to(m); }
Json to_json(const RatMatrix& m) { return matrix_to(m); }

Json to_json(const CharData& c) {
    Json a = Json::array();
    for (const auto& s : c.s) a.push_back(to_json(s));
    return a;
}

Json to_json(const HiggsField& phi) {
    Json j{{"group", group_tag(phi.group().kind)},
           {"m", phi.group().m},
           {"marked_points", points_to(phi.marked_points())},
           {"matrix", to_json(phi.matrix())}};
    if (!(phi.gram() == GramForm::split(phi.group()))) j["gram"] = to_json(phi.gram().matrix());
    return j;
}

Json to_json(const PlaneCurve& c) {
    Json coeffs = Json::array();
    for (const auto& p : c.equation.coefficients()) coeffs.push_back(to_json(p));
    return Json{{"r", c.degree()}, {"coeffs", std::move(coeffs)}, {"twist", to_json(c.twist)}};
}

Json to_json(const SingularReport& r) {
    Json w = Json::array();
    for (const auto& p : r.witnesses) w.push_back(Json::array({to_json(p.t), to_json(p.x)}));
    return Json{{"status", to_string(r.status)},
                {"witnesses", std::move(w)},
                {"discriminant_squarefree", r.discriminant_squarefree}};
}

Json to_json(const DimensionReport& r) {
    return Json{{"group", group_tag(r.group.kind)},
                {"m", r.group.m},
                {"g", r.g},
                {"n", r.n},
                {"degM", r.degM},
                {"dimH", r.dim_hitchin},
                {"dimH_closed_form", r.dim_hitchin_closed},
                {"dimM", r.dim_moduli},
                {"dimN", r.dim_higgs_moduli},
                {"spectral_genus", r.spectral_genus},
                {"quotient_or_desingularized_genus", r.quotient_or_desing_genus},
                {"prym", r.prym_dim},
                {"fixed_points_or_singularities", r.fixed_points_or_singularities},
                {"rr_exact", r.rr_exact},
                {"top_exterior_identity", r.top_exterior_identity},
                {"verdict", r.pass ? "PASS" : "FAIL"},
                {"first_failure", r.first_failure}};
}

Json to_json(const OddReduction& r) {
    Json kernel = Json::array();
    for (const auto& p : r.kernel) kernel.push_back(to_json(p));
    return Json{{"kind", "so-odd-reduction"},
                {"m", r.source_group.m},
                {"marked_points", points_to(r.marked_points)},
                {"kernel", std::move(kernel)},
                {"dropped_index", r.dropped_index},
                {"matrix", to_json(r.quotient)},
                {"induced_form", to_json(r.induced_form)},
                {"source_charpoly", to_json(r.source_char)}};
}

Json to_json(const PfaffianConventionReport& r) {
    return Json{{"m", r.m},           {"g", r.g},         {"n", r.n},
                {"closed_form", r.closed_form}, {"adopted", r.adopted}, {"literal", r.literal},
                {"excess", r.excess}, {"verdict", r.pass ? "PASS" : "FAIL"}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    require(j.is_string(), "rational must be a \"p/q\" string or an integer");
    return parse_rational(j.get<std::string>());
}

UniPoly poly_from_json(const Json& j) {
    require(j.is_array(), "polynomial must be an ascending coefficient array");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return UniPoly(std::move(c));
}

RationalFunction ratfunc_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return RationalFunction(rational_from_json(j));
    const UniPoly num = poly_from_json(at(j, "num"));
    const UniPoly den = j.contains("den") ? poly_from_json(j.at("den")) : UniPoly(1);
    return RationalFunction(num, den);
}

FuncMatrix func_matrix_from_json(const Json& j) {
    return matrix_from<RationalFunction>(j, [](const Json& e) { return ratfunc_from_json(e); });
}

RatMatrix rat_matrix_from_json(const Json& j) {
    return matrix_from<Rational>(j, [](const Json& e) { return rational_from_json(e); });
}

HiggsField higgs_from_json(const Json& j) {
    const Json& tag = at(j, "group");
    require(tag.is_string(), "\"group\" must be a string");
    const GroupSpec group = GroupSpec::make(parse_group_tag(tag.get<std::string>()), static_cast<int>(int_at(j, "m")));
    FuncMatrix phi = func_matrix_from_json(array_at(j, "matrix"));
    std::vector<Rational> pts = j.contains("marked_points") ? points_from(j.at("marked_points")) : std::vector<Rational>{};
    if (j.contains("gram")) {
        GramForm gram = GramForm::make(rat_matrix_from_json(j.at("gram")), form_kind_for(group.kind));
        return HiggsField::make(group, std::move(gram), std::move(phi), std::move(pts));
    }
    return HiggsField::make(group, std::move(phi), std::move(pts));
}

PlaneCurve curve_from_json(const Json& j) {
    std::vector<UniPoly> coeffs;
    for (const auto& c : array_at(j, "coeffs")) coeffs.push_back(poly_from_json(c));
    PlaneCurve c = make_plane_curve(BiPoly(std::move(coeffs)),
                                    j.contains("twist") ? poly_from_json(j.at("twist")) : UniPoly(1));
    if (j.contains("r")) require(int_at(j, "r") == c.degree(), "\"r\" does not match the coefficient list");
    return c;
}

SingularReport singular_report_from_json(const Json& j) {
    SingularReport r;
    const std::string status = at(j, "status").get<std::string>();
    if (status == "smooth") {
        r.status = SmoothStatus::Smooth;
    } else if (status == "singular") {
        r.status = SmoothStatus::Singular;
    } else if (status == "inconclusive") {
        r.status = SmoothStatus::Inconclusive;
    } else {
        fail("unknown smoothness status \"" + status + "\"");
    }
    for (const auto& w : array_at(j, "witnesses")) {
        require(w.is_array() && w.size() == 2, "witness must be a [t, x] pair");
        r.witnesses.push_back({rational_from_json(w[0]), rational_from_json(w[1])});
    }
    r.discriminant_squarefree = at(j, "discriminant_squarefree").get<bool>();
    return r;
}

DimensionReport dimension_report_from_json(const Json& j) {
    DimensionReport r;
    r.group = GroupSpec::make(parse_group_tag(at(j, "group").get<std::string>()), static_cast<int>(int_at(j, "m")));
    r.g = int_at(j, "g");
    r.n = int_at(j, "n");
    r.degM = int_at(j, "degM");
    r.dim_hitchin = int_at(j, "dimH");
    r.dim_hitchin_closed = int_at(j, "dimH_closed_form");
    r.dim_moduli = int_at(j, "dimM");
    r.dim_higgs_moduli = int_at(j, "dimN");
    r.spectral_genus = int_at(j, "spectral_genus");
    r.quotient_or_desing_genus = int_at(j, "quotient_or_desingularized_genus");
    r.prym_dim = int_at(j, "prym");
    r.fixed_points_or_singularities = int_at(j, "fixed_points_or_singularities");
    r.rr_exact = at(j, "rr_exact").get<bool>();
    r.top_exterior_identity = at(j, "top_exterior_identity").get<bool>();
    r.pass = at(j, "verdict").get<std::string>() == "PASS";
    r.first_failure = at(j, "first_failure").get<std::string>();
    return r;
}

OddReduction reduction_from_json(const Json& j) {
    require(at(j, "kind") == "so-odd-reduction", "not an so-odd reduction");
    OddReduction r;
    r.source_group = GroupSpec::make(GroupKind::SOOdd, static_cast<int>(int_at(j, "m")));
    r.marked_points = points_from(at(j, "marked_points"));
    for (const auto& p : array_at(j, "kernel")) r.kernel.push_back(poly_from_json(p));
    r.dropped_index = static_cast<std::size_t>(int_at(j, "dropped_index"));
    r.quotient = func_matrix_from_json(array_at(j, "matrix"));
    r.induced_form = func_matrix_from_json(array_at(j, "induced_form"));
    for (const auto& s : array_at(j, "source_charpoly")) r.source_char.s.push_back(ratfunc_from_json(s));
    const auto size = static_cast<std::size_t>(2 * r.source_group.m);
    require(r.quotient.rows() == size && r.quotient.cols() == size, "reduced matrix has the wrong size");
    require(r.induced_form.rows() == size && r.induced_form.cols() == size, "induced form has the wrong size");
    require(r.kernel.size() == size + 1, "kernel vector has the wrong length");
    require(r.source_char.degree() == static_cast<int>(size) + 1, "source characteristic polynomial has the wrong degree");
    return r;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "json") return TableFormat::Json;
    if (name == "csv") return TableFormat::Csv;
    if (name == "md") return TableFormat::Markdown;
    fail("unknown format \"" + name + "\" (expected json, csv, md)");
}

std::string csv_row(const DimensionReport& r) {
    std::ostringstream os;
    os << group_tag(r.group.kind) << ',' << r.group.m << ',' << r.g << ',' << r.n << ',' << r.dim_hitchin << ','
       << r.dim_moduli << ',' << r.prym_dim << ',' << r.dim_higgs_moduli << ',' << (r.pass ? "PASS" : "FAIL");
    return os.str();
}

std::string render_reports(const std::vector<DimensionReport>& reports, TableFormat format) {
    std::ostringstream os;
    switch (format) {
        case TableFormat::Json: {
            Json a = Json::array();
            for (const auto& r : reports) a.push_back(to_json(r));
            os << a.dump(2) << '\n';
            break;
        }
        case TableFormat::Csv:
            os << "group,m,g,n,dimH,dimM,prym,dimN,verdict\n";
            for (const auto& r : reports) os << csv_row(r) << '\n';
            break;
        case TableFormat::Markdown:
            os << "| group | m | g | n | dimH | dimM | prym | dimN | verdict |\n";
            os << "|---|---|---|---|---|---|---|---|---|\n";
            for (const auto& r : reports) {
                os << "| " << group_tag(r.group.kind) << " | " << r.group.m << " | " << r.g << " | " << r.n << " | "
                   << r.dim_hitchin << " | " << r.dim_moduli << " | " << r.prym_dim << " | " << r.dim_higgs_moduli
                   << " | " << (r.pass ? "PASS" : "FAIL") << " |\n";
            }
            break;
    }
    return os.str();
}

}  // namespace hx
