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
#include <random>
#include <vector>

#include "hitchin/lie.hpp"

namespace hx {

/// Seeded source of small integers. Draws use the raw engine output so a seed
/// reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long draw(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

/// Random element of the Lie algebra of the split form, entries in [-range, range].
RatMatrix random_lie_element(const GroupSpec& group, Rng& rng, long range = 3);
/// Random element of the nilradical of the standard Borel of the split form.
RatMatrix random_nilradical_element(const GroupSpec& group, Rng& rng, long range = 3);
/// Random Cayley group element of the split form (retries on Cayley poles).
RatMatrix random_group_element(const GroupSpec& group, Rng& rng);

/// Phi(t) = sum_k N_k / (t - a_k) + P(t): each N_k a conjugate of a nilradical
/// element by a Cayley group element, P of degree <= degree_bound with
/// Lie-algebra coefficients. Deterministic per seed.
HiggsField random_strongly_parabolic_higgs(const GroupSpec& group, std::vector<Rational> marked_points,
                                           int degree_bound, std::uint64_t seed);

/// Negative control: as above, but the residue at the first marked point is a
/// conjugate of a regular semisimple Cartan element, so it is not nilpotent.
HiggsField random_semisimple_residue_higgs(const GroupSpec& group, std::vector<Rational> marked_points,
                                           int degree_bound, std::uint64_t seed);

}  // namespace hx
