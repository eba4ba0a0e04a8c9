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

#include <utility>
#include <vector>

#include "hitchin/bipoly.hpp"
#include "hitchin/lie.hpp"

namespace hx {

/// Affine spectral curve F(t, y) = 0, monic in y, in the chart y = d(t) x
/// that clears the poles at the marked points.
struct PlaneCurve {
    BiPoly equation;
    UniPoly twist = UniPoly(1);  // d(t); 1 when no chart twist was applied

    int degree() const { return equation.degree_x(); }
    friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;
};

/// Requires F monic in y with polynomial coefficients.
PlaneCurve make_plane_curve(BiPoly equation, UniPoly twist = UniPoly(1));

/// F(t, y) = y^r + sum s_i(t) d(t)^i y^(r-i). Throws if some s_i d^i is not
/// polynomial (a pole-order violation).
PlaneCurve build_plane_curve(const CharData& c, const UniPoly& twist);
PlaneCurve build_plane_curve(const HiggsField& phi);

/// F(t, -x) == F(t, x).
bool involution_check(const PlaneCurve& c);

/// F / x for curves of the form x * (even), as produced by SO(2m+1) fields.
PlaneCurve even_cofactor(const PlaneCurve& c);

struct RationalPoint {
    Rational t;
    Rational x;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

enum class SmoothStatus { Smooth, Singular, Inconclusive };
const char* to_string(SmoothStatus s);

struct SingularReport {
    SmoothStatus status = SmoothStatus::Inconclusive;
    std::vector<RationalPoint> witnesses;  // F = F_x = F_t = 0 at each
    bool discriminant_squarefree = false;

    friend bool operator==(const SingularReport&, const SingularReport&) = default;
};

/// Squarefree discriminant certifies smoothness of the affine curve;
/// otherwise rational singular points are searched for, and the honest answer
/// may be "inconclusive". Throws "non-reduced curve" when disc_x F == 0.
SingularReport smoothness_check(const PlaneCurve& c);

struct FixedPoints {
    int count = 0;                   // deg F(t, 0), with multiplicity
    std::vector<Rational> witnesses;  // rational t0 with F(t0, 0) = 0
};

/// Fixed points (t0, 0) of x -> -x. Requires involution_check.
FixedPoints involution_fixed_points(const PlaneCurve& c);

struct SingularityPattern {
    bool pass = false;
    int count = 0;  // roots of the twisted Pfaffian, with multiplicity
    std::vector<RationalPoint> witnesses;
    Rational unit;  // F(t, 0) = unit * p^2
};

/// Checks F(t, 0) = unit * p^2 and that every rational root t0 of p gives a
/// singular point (t0, 0).
SingularityPattern so_even_singularity_pattern(const PlaneCurve& c, const UniPoly& twisted_pfaffian);

/// deg_t disc_x F.
int ramification_degree_affine(const PlaneCurve& c);

/// Genus of the smooth projective model of x^2 = f(t), f squarefree.
int hyperelliptic_genus_oracle(const UniPoly& f);

}  // namespace hx
