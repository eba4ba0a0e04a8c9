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

#include "hitchin/analysis.hpp"

#include <sstream>

namespace hx {

namespace {

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

Json spectral_section(const HiggsField& phi, const CharData& c, bool& pass) {
    Json out;
    const GroupKind kind = phi.group().kind;
    PlaneCurve curve = build_plane_curve(c, phi.marked_divisor());
    out["curve"] = to_json(curve);
    const PlaneCurve symmetric = kind == GroupKind::SOOdd ? even_cofactor(curve) : curve;
    const bool involution = involution_check(symmetric);
    out["involution"] = verdict(involution);
    pass = pass && involution;
    if (!involution) return out;

    try {
        out["smoothness"] = to_json(smoothness_check(symmetric));
    } catch (const Error& e) {
        out["smoothness"] = Json{{"status", "non-reduced"}, {"detail", e.what()}};
    }
    if (!symmetric.equation.coeff(0).is_zero()) {
        const FixedPoints fp = involution_fixed_points(symmetric);
        Json w = Json::array();
        for (const auto& t : fp.witnesses) w.push_back(to_json(t));
        out["fixed_points"] = Json{{"count", fp.count}, {"rational_t", std::move(w)}};
    }
    if (kind == GroupKind::SOEven) {
        const PfaffianSquareVerdict pf = pfaffian_square_check(phi);
        const RationalFunction twisted =
            pf.pfaffian * RationalFunction(pow(phi.marked_divisor(), static_cast<unsigned>(phi.group().m)));
        if (!twisted.is_zero() && twisted.is_polynomial()) {
            const SingularityPattern pat = so_even_singularity_pattern(symmetric, twisted.num());
            Json w = Json::array();
            for (const auto& p : pat.witnesses) w.push_back(Json::array({to_json(p.t), to_json(p.x)}));
            out["singularity_pattern"] = Json{{"verdict", verdict(pat.pass)},
                                              {"count", pat.count},
                                              {"twisted_pfaffian", to_json(twisted.num())},
                                              {"witnesses", std::move(w)}};
            pass = pass && pat.pass;
        }
    }
    return out;
}

}  // namespace

unsigned parse_check_list(const std::string& list) {
    unsigned mask = 0;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "membership") mask |= kCheckMembership;
        else if (item == "charpoly") mask |= kCheckCharPoly;
        else if (item == "parity") mask |= kCheckParity;
        else if (item == "strong") mask |= kCheckStrongParabolic;
        else if (item == "pfaffian") mask |= kCheckPfaffian;
        else if (item == "spectral") mask |= kCheckSpectral;
        else if (item == "all") mask |= kCheckAll;
        else fail("unknown check \"" + item + "\"");
    }
    require(mask != 0, "empty check list");
    return mask;
}

Analysis analyze_field(const HiggsField& phi, unsigned checks) {
    Analysis a;
    Json& rep = a.report;
    rep["kind"] = "higgs-field";
    rep["group"] = group_tag(phi.group().kind);
    rep["m"] = phi.group().m;
    Json sections = Json::object();

    if (checks & kCheckMembership) {
        const bool ok = check_lie_membership(phi.matrix(), phi.gram().matrix());
        sections["membership"] = Json{{"verdict", verdict(ok)}};
        a.pass = a.pass && ok;
    }
    const CharData c = char_poly(phi.matrix());
    if (checks & kCheckCharPoly) sections["charpoly"] = Json{{"coefficients", to_json(c)}};
    if (checks & kCheckParity) {
        const ParityVerdict p = parity_classify(c, phi.group());
        Json s{{"verdict", verdict(p.pass)}};
        if (p.pass) {
            Json even = Json::array();
            for (const auto& e : p.even_part) even.push_back(to_json(e));
            s["even_part"] = std::move(even);
        } else {
            s["first_offending_index"] = p.first_offending;
        }
        sections["parity"] = std::move(s);
        a.pass = a.pass && p.pass;
    }
    if (checks & kCheckStrongParabolic) {
        const StrongParabolicVerdict v = strong_parabolic_check(phi);
        Json residues = Json::array();
        for (const auto& w : v.non_nilpotent_residues)
            residues.push_back(Json{{"point", to_json(w.point)}, {"residue", to_json(w.residue)}});
        Json poles = Json::array();
        for (const auto& w : v.pole_violations)
            poles.push_back(Json{{"point", to_json(w.point)}, {"index", w.index}, {"pole_order", w.pole_order}});
        sections["strong_parabolic"] = Json{{"verdict", verdict(v.pass)},
                                            {"non_nilpotent_residues", std::move(residues)},
                                            {"pole_violations", std::move(poles)}};
        a.pass = a.pass && v.pass;
    }
    if ((checks & kCheckPfaffian) && phi.group().kind == GroupKind::SOEven) {
        if (check_lie_membership(phi.matrix(), phi.gram().matrix())) {
            const PfaffianSquareVerdict v = pfaffian_square_check(phi);
            sections["pfaffian"] = Json{{"verdict", verdict(v.pass)},
                                        {"pfaffian", to_json(v.pfaffian)},
                                        {"top_coefficient", to_json(v.top_coefficient)}};
            a.pass = a.pass && v.pass;
        } else {
            sections["pfaffian"] = Json{{"verdict", "FAIL"}, {"detail", "field is not in the Lie algebra"}};
            a.pass = false;
        }
    }
    if (checks & kCheckSpectral) {
        if (strong_parabolic_check(phi).pass && parity_classify(c, phi.group()).pass &&
            check_lie_membership(phi.matrix(), phi.gram().matrix())) {
            bool ok = true;
            Json s = spectral_section(phi, c, ok);
            s["verdict"] = verdict(ok);
            sections["spectral"] = std::move(s);
            a.pass = a.pass && ok;
        } else {
            sections["spectral"] = Json{{"verdict", "FAIL"}, {"detail", "spectral checks need a strongly parabolic Lie-algebra field"}};
            a.pass = false;
        }
    }
    rep["checks"] = std::move(sections);
    rep["verdict"] = verdict(a.pass);
    return a;
}

Analysis analyze_reduction(const OddReduction& red) {
    const OddReductionChecks c = check_reduction(red);
    Analysis a;
    a.pass = c.all();
    a.report = Json{{"kind", "so-odd-reduction"},
                    {"m", red.source_group.m},
                    {"checks",
                     {{"char_identity", verdict(c.char_identity)},
                      {"form_skew", verdict(c.form_skew)},
                      {"lie_compatible", verdict(c.lie_compatible)},
                      {"parity", verdict(c.parity)},
                      {"form_nondegenerate", c.form_nondegenerate}}},
                    {"quotient_charpoly", to_json(char_poly(red.quotient))},
                    {"verdict", verdict(a.pass)}};
    return a;
}

Analysis analyze_document(const Json& doc, unsigned checks) {
    if (doc.is_object() && doc.contains("kind") && doc["kind"] == "so-odd-reduction") {
        return analyze_reduction(reduction_from_json(doc));
    }
    return analyze_field(higgs_from_json(doc), checks);
}

Analysis reduce_odd_document(const HiggsField& phi) {
    const OddReduction red = so_odd_reduce(phi);
    Analysis a = analyze_reduction(red);
    Json doc = to_json(red);
    doc["report"] = a.report;
    a.report = std::move(doc);
    return a;
}

}  // namespace hx
