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

#include "hitchin/so_odd.hpp"

namespace hx {

namespace {

// Clears denominators, removes the polynomial gcd, and makes the first
// nonzero coordinate monic.
std::vector<UniPoly> primitive_vector(const std::vector<RationalFunction>& v) {
    UniPoly l(1);
    for (const auto& f : v) l = lcm(l, f.den());
    std::vector<UniPoly> out;
    out.reserve(v.size());
    UniPoly g;
    for (const auto& f : v) {
        out.push_back(f.num() * exact_div(l, f.den()));
        g = gcd(g, out.back());
    }
    Rational scale = 0;
    for (auto& p : out) {
        p = exact_div(p, g);
        if (scale == 0 && !p.is_zero()) scale = 1 / p.leading();
    }
    for (auto& p : out) p = p * UniPoly(scale);
    return out;
}

}  // namespace

OddReduction so_odd_reduce(const HiggsField& phi) {
    require(phi.group().kind == GroupKind::SOOdd, "wrong group: reduction needs an so-odd field");
    const FuncMatrix& a = phi.matrix();
    const auto basis = kernel_basis(a);
    if (basis.size() != 1) {
        throw Error(ErrorKind::NonGeneric,
                    "non-generic field: kernel has dimension " + std::to_string(basis.size()) + ", expected 1");
    }
    OddReduction red;
    red.source_group = phi.group();
    red.marked_points = phi.marked_points();
    red.kernel = primitive_vector(basis.front());
    red.source_char = char_poly(a);

    const std::size_t r = a.rows();
    std::size_t k = 0;
    int best = -1;
    for (std::size_t i = 0; i < r; ++i) {
        if (red.kernel[i].degree() > best) {
            best = red.kernel[i].degree();
            k = i;
        }
    }
    red.dropped_index = k;

    // Modulo v0: e_k == -sum_{i != k} (v_i / v_k) e_i.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r; ++i)
        if (i != k) keep.push_back(i);
    const RationalFunction vk(red.kernel[k]);
    const FuncMatrix b = to_func_matrix(phi.gram().matrix());
    const FuncMatrix g_full = a.transpose() * b;
    red.quotient = FuncMatrix(r - 1, r - 1);
    red.induced_form = FuncMatrix(r - 1, r - 1);
    for (std::size_t ii = 0; ii < keep.size(); ++ii) {
        const std::size_t i = keep[ii];
        const RationalFunction ratio = RationalFunction(red.kernel[i]) / vk;
        for (std::size_t jj = 0; jj < keep.size(); ++jj) {
            const std::size_t j = keep[jj];
            red.quotient(ii, jj) = a(i, j) - a(k, j) * ratio;
            red.induced_form(ii, jj) = g_full(i, j);
        }
    }
    return red;
}

OddReductionChecks check_reduction(const OddReduction& red) {
    OddReductionChecks c;
    c.form_skew = is_antisymmetric(red.induced_form);
    c.lie_compatible = check_lie_membership(red.quotient, red.induced_form);
    c.form_nondegenerate = !is_zero(bareiss_determinant(red.induced_form));
    const CharData q = char_poly(red.quotient);
    c.parity = parity_classify(q, GroupSpec::make(GroupKind::SpEven, red.source_group.m)).pass;
    // x * (x^2m + q_1 x^(2m-1) + ... + q_2m) has coefficients (q_1, ..., q_2m, 0).
    const CharData& full = red.source_char;
    bool same = full.degree() == q.degree() + 1 && full.s.back().is_zero();
    for (int i = 1; same && i <= q.degree(); ++i) same = full.coefficient(i) == q.coefficient(i);
    c.char_identity = same;
    return c;
}

}  // namespace hx
