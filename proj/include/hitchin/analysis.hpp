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

#include "hitchin/serialize.hpp"

namespace hx {

enum Check : unsigned {
    kCheckMembership = 1U << 0,
    kCheckCharPoly = 1U << 1,
    kCheckParity = 1U << 2,
    kCheckStrongParabolic = 1U << 3,
    kCheckPfaffian = 1U << 4,
    kCheckSpectral = 1U << 5,
    kCheckAll = (1U << 6) - 1,
};

/// Comma-separated names: membership, charpoly, parity, strong, pfaffian, spectral, all.
unsigned parse_check_list(const std::string& list);

struct Analysis {
    Json report;
    bool pass = true;
};

/// Runs the selected checks on a Higgs field. Checks that do not apply to the
/// group (Pfaffian off so-even) are skipped silently.
Analysis analyze_field(const HiggsField& phi, unsigned checks);

/// Skewness, Lie compatibility, parity, and the char-poly identity of a reduction.
Analysis analyze_reduction(const OddReduction& red);

/// Dispatches on the "kind" key ("so-odd-reduction"; anything else is a Higgs field).
Analysis analyze_document(const Json& doc, unsigned checks);

/// so_odd_reduce plus its checks, serialized for the reduce-odd command.
Analysis reduce_odd_document(const HiggsField& phi);

}  // namespace hx
