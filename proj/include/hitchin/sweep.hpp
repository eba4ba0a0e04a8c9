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

#include "hitchin/divisor.hpp"
#include "hitchin/serialize.hpp"

namespace hx {

struct IntRange {
    i64 lo = 0;
    i64 hi = 0;

    bool empty() const { return hi < lo; }
};

struct SweepBox {
    std::vector<GroupKind> groups{GroupKind::SpEven, GroupKind::SOEven, GroupKind::SOOdd};
    IntRange m{1, 4};
    IntRange g{2, 6};
    IntRange n{1, 4};
    i64 degM = 0;

    void validate() const;
};

/// One report per (group, m, g, n), sorted lexicographically with groups in
/// enum order. Work fans out over `threads` workers (0 = hardware concurrency).
std::vector<DimensionReport> sweep_dimensions(const SweepBox& box, unsigned threads = 0);

/// Genus cross-check, eigenline reconciliation, square-root parity and the
/// Pfaffian convention report over the same box (covers r = 1..2*max(m)+2).
struct AuxiliarySweep {
    Json report;
    bool pass = true;
};

AuxiliarySweep sweep_auxiliary(const SweepBox& box);

}  // namespace hx
