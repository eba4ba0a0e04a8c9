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

#include <vector>

#include "hitchin/lie.hpp"

namespace hx {

/// Reduction of an so(2m+1) field to its action on the quotient by the kernel
/// line, together with the skew form (v, w) = <Phi v, w> it induces there.
struct OddReduction {
    GroupSpec source_group;
    std::vector<Rational> marked_points;
    std::vector<UniPoly> kernel;  // primitive polynomial vector spanning ker Phi
    std::size_t dropped_index = 0;   // complement basis is e_j, j != dropped_index
    FuncMatrix quotient;          // 2m x 2m
    FuncMatrix induced_form;      // G_ij = <Phi b_i, b_j>
    CharData source_char;         // char(Phi) of the field that was reduced

    friend bool operator==(const OddReduction&, const OddReduction&) = default;
};

/// Throws ErrorKind::NonGeneric "non-generic field" unless ker Phi is a line.
OddReduction so_odd_reduce(const HiggsField& phi);

struct OddReductionChecks {
    bool char_identity = false;    // x * char(quotient) == char(Phi)
    bool form_skew = false;        // G^T == -G
    bool lie_compatible = false;   // quotient^T G + G quotient == 0
    bool form_nondegenerate = false;  // det G is not the zero function
    bool parity = false;           // char(quotient) is even

    bool all() const { return char_identity && form_skew && lie_compatible && parity; }
};

/// The characteristic-polynomial identity is checked against red.source_char.
OddReductionChecks check_reduction(const OddReduction& red);

}  // namespace hx
