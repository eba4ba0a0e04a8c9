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

#include "hitchin/spectral.hpp"

#include <algorithm>

namespace hx {

PlaneCurve make_plane_curve(BiPoly equation, UniPoly twist) {
    require(equation.degree_x() >= 1 && equation.is_monic_x(), "plane curve must be monic in x of degree >= 1");
    require(!twist.is_zero(), "chart twist must be nonzero");
    return PlaneCurve{std::move(equation), std::move(twist)};
}

PlaneCurve build_plane_curve(const CharData& c, const UniPoly& twist) {
    const int r = c.degree();
    require(r >= 1, "empty characteristic polynomial");
    std::vector<UniPoly> coeffs(static_cast<std::size_t>(r) + 1);
    coeffs[static_cast<std::size_t>(r)] = UniPoly(1);
    UniPoly dpow(1);
    for (int i = 1; i <= r; ++i) {
        dpow *= twist;
        const RationalFunction twisted = c.coefficient(i) * RationalFunction(dpow);
        require(twisted.is_polynomial(), "pole-order violation: s_" + std::to_string(i) + " * d^" +
                                             std::to_string(i) + " is not polynomial");
        coeffs[static_cast<std::size_t>(r - i)] = twisted.num();
    }
    return PlaneCurve{BiPoly(std::move(coeffs)), twist};
}

PlaneCurve build_plane_curve(const HiggsField& phi) {
    return build_plane_curve(char_poly(phi.matrix()), phi.marked_divisor());
}

bool involution_check(const PlaneCurve& c) { return c.equation.reflect_x() == c.equation; }

PlaneCurve even_cofactor(const PlaneCurve& c) {
    const auto& v = c.equation.coefficients();
    require(!v.empty() && v.front().is_zero(), "curve is not divisible by x");
    return PlaneCurve{BiPoly(std::vector<UniPoly>(v.begin() + 1, v.end())), c.twist};
}

const char* to_string(SmoothStatus s) {
    switch (s) {
        case SmoothStatus::Smooth: return "smooth";
        case SmoothStatus::Singular: return "singular";
        case SmoothStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

bool vanishes_with_partials(const PlaneCurve& c, const BiPoly& fx, const BiPoly& ft, const Rational& t,
                            const Rational& x) {
    return c.equation(t, x) == 0 && fx(t, x) == 0 && ft(t, x) == 0;
}

}  // namespace

SingularReport smoothness_check(const PlaneCurve& c) {
    SingularReport rep;
    const BiPoly& f = c.equation;
    if (f.degree_x() < 2) {
        // x + a(t): a graph, always smooth.
        rep.status = SmoothStatus::Smooth;
        rep.discriminant_squarefree = true;
        return rep;
    }
    const UniPoly disc = discriminant_x(f);
    require(!disc.is_zero(), "non-reduced curve");
    rep.discriminant_squarefree = is_squarefree(disc);
    if (rep.discriminant_squarefree) {
        rep.status = SmoothStatus::Smooth;
        return rep;
    }
    const BiPoly fx = f.derivative_x();
    const BiPoly ft = f.derivative_t();
    UniPoly eliminant = disc;
    if (!ft.is_zero()) {
        const UniPoly rt = resultant_x(f, ft);
        if (!rt.is_zero()) eliminant = gcd(disc, rt);
    }
    for (const auto& t0 : rational_roots(eliminant).roots) {
        UniPoly common = gcd(f.at_t(t0), fx.at_t(t0));
        common = gcd(common, ft.at_t(t0));
        if (common.degree() < 1) continue;
        for (const auto& x0 : rational_roots(common).roots) {
            if (vanishes_with_partials(c, fx, ft, t0, x0)) rep.witnesses.push_back({t0, x0});
        }
    }
    rep.status = rep.witnesses.empty() ? SmoothStatus::Inconclusive : SmoothStatus::Singular;
    return rep;
}

FixedPoints involution_fixed_points(const PlaneCurve& c) {
    require(involution_check(c), "curve is not symmetric under x -> -x");
    const UniPoly& c0 = c.equation.coeff(0);
    FixedPoints fp;
    if (c0.is_zero()) {
        // The whole zero section lies on the curve.
        throw Error(ErrorKind::NonGeneric, "zero section is a component of the curve");
    }
    fp.count = c0.degree();
    fp.witnesses = rational_roots(c0).roots;
    return fp;
}

SingularityPattern so_even_singularity_pattern(const PlaneCurve& c, const UniPoly& twisted_pfaffian) {
    require(involution_check(c), "curve is not symmetric under x -> -x");
    require(!twisted_pfaffian.is_zero(), "zero Pfaffian");
    const UniPoly& c0 = c.equation.coeff(0);
    const UniPoly sq = twisted_pfaffian * twisted_pfaffian;
    SingularityPattern out;
    if (c0.is_zero() || c0.degree() != sq.degree()) fail("not an SO(2m) spectral polynomial");
    out.unit = c0.leading() / sq.leading();
    if (c0 != sq * UniPoly(out.unit)) fail("not an SO(2m) spectral polynomial");
    out.count = twisted_pfaffian.degree();
    const BiPoly fx = c.equation.derivative_x();
    const BiPoly ft = c.equation.derivative_t();
    out.pass = true;
    for (const auto& t0 : rational_roots(twisted_pfaffian).roots) {
        const Rational zero(0);
        if (vanishes_with_partials(c, fx, ft, t0, zero)) {
            out.witnesses.push_back({t0, zero});
        } else {
            out.pass = false;
        }
    }
    return out;
}

int ramification_degree_affine(const PlaneCurve& c) {
    const UniPoly disc = discriminant_x(c.equation);
    require(!disc.is_zero(), "zero discriminant");
    return disc.degree();
}

int hyperelliptic_genus_oracle(const UniPoly& f) {
    require(f.degree() >= 1, "hyperelliptic oracle needs deg f >= 1");
    require(is_squarefree(f), "hyperelliptic oracle needs f squarefree");
    return (f.degree() - 1) / 2;
}

}  // namespace hx
