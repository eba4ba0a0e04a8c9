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

#include "hitchin/divisor.hpp"

namespace hx {

namespace {

i64 halve_exact(i64 v, const char* what) {
    if (v % 2 != 0) throw Error(ErrorKind::InvalidArgument, what);
    return v / 2;
}

}  // namespace

CurveParams CurveParams::make(i64 g, i64 n, i64 degM) {
    require(g >= 2, "genus must be at least 2");
    require(n >= 1, "need at least one marked point");
    return CurveParams{g, n, degM};
}

void CurveParams::validate_for(const GroupSpec& group) const {
    require(g >= 2, "genus must be at least 2");
    require(n >= 1, "need at least one marked point");
    if (group.rank() % 2 == 1) require(degM % 2 == 0, "odd rank needs deg M even");
}

i64 lb_degree(const LineBundleClass& cls, const CurveParams& p) {
    const i64 twice = cls.a.twice * p.deg_K() + cls.b.twice * p.n + cls.c.twice * p.degM;
    return halve_exact(twice, "line bundle class has non-integral degree");
}

i64 euler_characteristic(const LineBundleClass& cls, const CurveParams& p) { return lb_degree(cls, p) + 1 - p.g; }

i64 h0_rr(const LineBundleClass& cls, const CurveParams& p) {
    const i64 d = lb_degree(cls, p);
    require(d > p.deg_K(), "Riemann-Roch inconclusive without h1 (degree " + std::to_string(d) + " <= 2g-2)");
    return d + 1 - p.g;
}

HitchinDim hitchin_dim(const GroupSpec& group, const CurveParams& p) {
    const i64 m = group.m;
    HitchinDim out;
    const i64 s_terms = group.kind == GroupKind::SOEven ? m - 1 : m;
    for (i64 i = 1; i <= s_terms; ++i) out.summation += h0_rr(LineBundleClass::of(2 * i, 2 * i - 1), p);
    if (group.kind == GroupKind::SOEven) {
        const auto pf = LineBundleClass::of(m, m - 1);
        if (lb_degree(pf, p) > p.deg_K()) {
            out.summation += h0_rr(pf, p);
        } else {
            out.summation += euler_characteristic(pf, p);
            out.rr_exact = false;
        }
        out.closed_form = m * (2 * m - 1) * (p.g - 1) + m * p.n * (m - 1);
    } else {
        out.closed_form = m * (2 * m + 1) * (p.g - 1) + m * m * p.n;
    }
    return out;
}

i64 moduli_dim(const GroupSpec& group, const CurveParams& p) {
    return (p.g - 1) * group.dim_group() + p.n * group.dim_flag_variety();
}

i64 higgs_moduli_dim(const GroupSpec& group, const CurveParams& p) { return 2 * moduli_dim(group, p); }

i64 spectral_genus(i64 r, const CurveParams& p) {
    require(r >= 1, "cover degree must be positive");
    return halve_exact(-r * p.n + r * r * p.deg_KD() + 2, "spectral genus is not an integer");
}

i64 rh_genus_crosscheck(i64 r, const CurveParams& p) {
    require(r >= 1, "cover degree must be positive");
    const i64 euler = r * p.deg_K() + r * (r - 1) * p.deg_KD();  // 2 g_s - 2
    return halve_exact(euler + 2, "Riemann-Hurwitz genus is not an integer");
}

i64 sp_fixed_points(i64 m, const CurveParams& p) {
    require(m >= 1, "m must be positive");
    return lb_degree(LineBundleClass::of(2 * m, 2 * m), p);
}

i64 sp_quotient_genus(i64 m, const CurveParams& p) {
    const i64 gs = spectral_genus(2 * m, p);
    // 2 g_s - 2 = 2 (2 g_q - 2) + #fixed points
    const i64 quotient_euler = halve_exact(2 * gs - 2 - sp_fixed_points(m, p), "quotient genus is not an integer");
    return halve_exact(quotient_euler + 2, "quotient genus is not an integer");
}

i64 so_even_singularities(i64 m, const CurveParams& p) {
    require(m >= 1, "m must be positive");
    return lb_degree(LineBundleClass::of(m, m), p);
}

i64 so_even_desingularized_genus(i64 m, const CurveParams& p) {
    return spectral_genus(2 * m, p) - so_even_singularities(m, p);
}

i64 prym_dim(const GroupSpec& group, const CurveParams& p) {
    const i64 m = group.m;
    if (group.kind == GroupKind::SOEven) {
        // Fixed-point-free double cover: 2 g_hat - 2 = 2 (2 g_q - 2), Prym = g_hat - g_q.
        const i64 ghat = so_even_desingularized_genus(m, p);
        const i64 gq = halve_exact(ghat + 1, "fixed-point-free quotient genus is not an integer");
        return ghat - gq;
    }
    return spectral_genus(2 * m, p) - sp_quotient_genus(m, p);
}

i64 ramification_degree(i64 r, const CurveParams& p) { return 2 * spectral_genus(r, p) - 2 - r * p.deg_K(); }

i64 eigenline_degree(const GrrInputs& in) { return in.deg_direct_image + in.r * (1 - in.g) + (in.g_s - 1); }

i64 eigenline_degree(const DualInputs& in) { return in.r * (in.g - 1) + (1 - in.g_s) - in.deg_dual; }

i64 eigenline_degree(const SquareRootInputs& in) {
    require(in.m >= 1, "m must be positive");
    const i64 r = 2 * in.m;
    const CurveParams p{in.g, in.n, in.degM};
    const i64 twice = -ramification_degree(r, p) + r * in.degM;
    return halve_exact(twice, "square-root parity violated");
}

Reconciliation eigenline_reconciliation(i64 r, const CurveParams& p) {
    require(r >= 1, "cover degree must be positive");
    const i64 deg_e = halve_exact(r * p.degM, "deg E = r degM / 2 is not an integer");
    const i64 gs = spectral_genus(r, p);
    Reconciliation out;
    out.grr = eigenline_degree(GrrInputs{deg_e, r, p.g, gs});
    out.dual = eigenline_degree(DualInputs{-deg_e, r, p.g, gs});
    out.difference = out.grr - out.dual;
    out.ramification = ramification_degree(r, p);
    out.pass = out.difference == out.ramification;
    return out;
}

bool sqrt_parity_check(i64 r, const CurveParams& p) {
    require(r >= 1, "cover degree must be positive");
    require(r % 2 == 0 || p.degM % 2 == 0, "precondition violated: odd rank with odd deg M");
    return (ramification_degree(r, p) - r * p.degM) % 2 == 0;
}

i64 pardeg_identity(i64 m, i64 degM) { return m * degM; }

DimensionReport identity_suite(const GroupSpec& group, const CurveParams& p) {
    p.validate_for(group);
    const i64 m = group.m;
    DimensionReport rep;
    rep.group = group;
    rep.g = p.g;
    rep.n = p.n;
    rep.degM = p.degM;
    const HitchinDim h = hitchin_dim(group, p);
    rep.dim_hitchin = h.summation;
    rep.dim_hitchin_closed = h.closed_form;
    rep.rr_exact = h.rr_exact;
    rep.dim_moduli = moduli_dim(group, p);
    rep.dim_higgs_moduli = higgs_moduli_dim(group, p);
    rep.spectral_genus = spectral_genus(2 * m, p);
    rep.prym_dim = prym_dim(group, p);
    if (group.kind == GroupKind::SOEven) {
        rep.quotient_or_desing_genus = so_even_desingularized_genus(m, p);
        rep.fixed_points_or_singularities = so_even_singularities(m, p);
    } else {
        rep.quotient_or_desing_genus = sp_quotient_genus(m, p);
        rep.fixed_points_or_singularities = sp_fixed_points(m, p);
    }
    if (group.kind == GroupKind::SOOdd) {
        // E_0 = M^(1/2) K(D)^(-m), det E = M^((2m+1)/2), so
        // deg wedge^2m E_1 = deg det E - deg E_0.
        const i64 deg_e0 = lb_degree({HalfInt::whole(-m), HalfInt::whole(-m), HalfInt::half(1)}, p);
        const i64 deg_det = lb_degree({HalfInt::whole(0), HalfInt::whole(0), HalfInt::half(2 * m + 1)}, p);
        rep.top_exterior_identity = deg_det - deg_e0 == lb_degree(LineBundleClass::of(m, m, m), p);
    }
    if (rep.dim_hitchin != rep.dim_hitchin_closed) {
        rep.first_failure = "dimH summation != closed form";
    } else if (rep.dim_hitchin != rep.dim_moduli) {
        rep.first_failure = "dimH != dimM";
    } else if (rep.dim_moduli != rep.prym_dim) {
        rep.first_failure = "dimM != prym";
    } else if (2 * rep.prym_dim != rep.dim_higgs_moduli) {
        rep.first_failure = "prym != dimN/2";
    } else if (!rep.top_exterior_identity) {
        rep.first_failure = "deg wedge^2m E1 != m(2g-2+n) + m degM";
    }
    rep.pass = rep.first_failure.empty();
    return rep;
}

PfaffianConventionReport pfaffian_convention_report(i64 m, const CurveParams& p) {
    const GroupSpec group = GroupSpec::make(GroupKind::SOEven, static_cast<int>(m));
    PfaffianConventionReport rep;
    rep.m = m;
    rep.g = p.g;
    rep.n = p.n;
    const HitchinDim h = hitchin_dim(group, p);
    rep.closed_form = h.closed_form;
    rep.adopted = h.summation;
    i64 literal = 0;
    for (i64 i = 1; i <= m - 1; ++i) literal += h0_rr(LineBundleClass::of(2 * i, 2 * i - 1), p);
    literal += h0_rr(LineBundleClass::of(m, m), p);
    rep.literal = literal;
    rep.excess = rep.literal - rep.closed_form;
    rep.pass = rep.adopted == rep.closed_form && rep.excess == p.n;
    return rep;
}

}  // namespace hx
