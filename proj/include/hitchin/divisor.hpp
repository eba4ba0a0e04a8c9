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

#include <cstdint>
#include <string>
#include <vector>

#include "hitchin/lie.hpp"

namespace hx {

using i64 = std::int64_t;

/// Genus, number of marked points, and degree of the fixed line bundle M.
struct CurveParams {
    i64 g = 2;
    i64 n = 1;
    i64 degM = 0;

    static CurveParams make(i64 g, i64 n, i64 degM = 0);
    /// Adds the odd-rank constraint that deg M is even.
    void validate_for(const GroupSpec& group) const;

    i64 deg_K() const { return 2 * g - 2; }
    i64 deg_KD() const { return 2 * g - 2 + n; }
};

/// Exact half-integer, stored doubled.
struct HalfInt {
    i64 twice = 0;

    static constexpr HalfInt whole(i64 v) { return {2 * v}; }
    static constexpr HalfInt half(i64 numerator) { return {numerator}; }
    bool is_integer() const { return twice % 2 == 0; }
    friend bool operator==(HalfInt, HalfInt) = default;
};

/// K^a (D^b) (x) M^c with exponents that may be half-integers where square
/// roots are taken.
struct LineBundleClass {
    HalfInt a;  // K
    HalfInt b;  // O(D)
    HalfInt c;  // M

    static LineBundleClass of(i64 a, i64 b, i64 c = 0) {
        return {HalfInt::whole(a), HalfInt::whole(b), HalfInt::whole(c)};
    }
};

/// a(2g-2) + b n + c degM; throws if the result is not an integer.
i64 lb_degree(const LineBundleClass& cls, const CurveParams& p);

/// deg + 1 - g, valid only when deg > 2g - 2.
i64 h0_rr(const LineBundleClass& cls, const CurveParams& p);

/// deg + 1 - g with no regime restriction (the holomorphic Euler characteristic).
i64 euler_characteristic(const LineBundleClass& cls, const CurveParams& p);

struct HitchinDim {
    i64 summation = 0;   // sum of h0 over the invariant-polynomial spaces
    i64 closed_form = 0;
    bool rr_exact = true;  // false when a term sits at degree 2g-2 (SO(2): h0(K) = g, chi(K) = g - 1)
};

HitchinDim hitchin_dim(const GroupSpec& group, const CurveParams& p);
i64 moduli_dim(const GroupSpec& group, const CurveParams& p);
i64 higgs_moduli_dim(const GroupSpec& group, const CurveParams& p);

/// (-r n + r^2 (2g - 2 + n) + 2) / 2, via adjunction.
i64 spectral_genus(i64 r, const CurveParams& p);
/// Solves 2 g_s - 2 = r(2g - 2) + r(r - 1)(2g - 2 + n) for g_s.
i64 rh_genus_crosscheck(i64 r, const CurveParams& p);

i64 sp_fixed_points(i64 m, const CurveParams& p);
i64 sp_quotient_genus(i64 m, const CurveParams& p);
/// g(X_s) minus the m(2g - 2 + n) singular points on x = 0.
i64 so_even_desingularized_genus(i64 m, const CurveParams& p);
i64 so_even_singularities(i64 m, const CurveParams& p);
i64 prym_dim(const GroupSpec& group, const CurveParams& p);

/// (2 g_s - 2) - r(2g - 2).
i64 ramification_degree(i64 r, const CurveParams& p);

struct GrrInputs {
    i64 deg_direct_image;
    i64 r;
    i64 g;
    i64 g_s;
};
struct DualInputs {
    i64 deg_dual;
    i64 r;
    i64 g;
    i64 g_s;
};
struct SquareRootInputs {
    i64 m;
    i64 g;
    i64 n;
    i64 degM;
};

/// deg L from Grothendieck-Riemann-Roch: deg pi_*L + r(1 - g) + (g_s - 1).
i64 eigenline_degree(const GrrInputs& in);
/// deg L from the dual sequence: r(g - 1) + (1 - g_s) - deg E*.
i64 eigenline_degree(const DualInputs& in);
/// deg L in the symplectic case: -(ramification)/2 + r degM / 2 with r = 2m.
i64 eigenline_degree(const SquareRootInputs& in);

struct Reconciliation {
    i64 grr = 0;
    i64 dual = 0;
    i64 difference = 0;
    i64 ramification = 0;
    bool pass = false;
};

/// GRR-mode minus DUAL-mode with deg pi_*L = deg E = r degM / 2 and
/// deg E* = -deg E; must equal the ramification degree.
Reconciliation eigenline_reconciliation(i64 r, const CurveParams& p);

/// Whether K_{X_s} (x) pi^*K^* (x) pi^*M^* has even degree, i.e. admits a square
/// root degree-wise. Throws for odd r with odd degM.
bool sqrt_parity_check(i64 r, const CurveParams& p);

/// par-deg(E) forced by E = E^* (x) M with M parabolically trivial.
i64 pardeg_identity(i64 m, i64 degM);

struct DimensionReport {
    GroupSpec group;
    i64 g = 0;
    i64 n = 0;
    i64 degM = 0;
    i64 dim_hitchin = 0;
    i64 dim_hitchin_closed = 0;
    i64 dim_moduli = 0;
    i64 dim_higgs_moduli = 0;
    i64 spectral_genus = 0;
    i64 quotient_or_desing_genus = 0;
    i64 prym_dim = 0;
    i64 fixed_points_or_singularities = 0;
    bool rr_exact = true;
    /// SO(2m+1) only: deg(wedge^2m E_1) against deg(K(D)^m M^m).
    bool top_exterior_identity = true;
    bool pass = false;
    std::string first_failure;  // empty on PASS

    friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

DimensionReport identity_suite(const GroupSpec& group, const CurveParams& p);

/// SO(2m) Hitchin base dimension under both readings of the Pfaffian space.
struct PfaffianConventionReport {
    i64 m = 0;
    i64 g = 0;
    i64 n = 0;
    i64 closed_form = 0;
    i64 adopted = 0;  // Pfaffian in K^m(D^(m-1))
    i64 literal = 0;  // Pfaffian in K(D)^m
    i64 excess = 0;   // literal - closed_form
    bool pass = false;  // adopted == closed_form and excess == n
};

PfaffianConventionReport pfaffian_convention_report(i64 m, const CurveParams& p);

}  // namespace hx
