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

#include "hitchin/generator.hpp"

#include <set>

namespace hx {

namespace {

// Block layout [[A, X, u], [Y, -A^T, v], [-v^T, -u^T, 0]] of the split Lie algebra;
// X, Y symmetric for sp and antisymmetric for so. The last row/column only
// exists for SO(2m+1).
struct Blocks {
    RatMatrix a, x, y;
    std::vector<Rational> u, v;
};

RatMatrix assemble(const GroupSpec& group, const Blocks& b) {
    const auto m = static_cast<std::size_t>(group.m);
    const auto r = static_cast<std::size_t>(group.rank());
    RatMatrix out(r, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out(i, j) = b.a(i, j);
            out(m + i, m + j) = -b.a(j, i);
            out(i, m + j) = b.x(i, j);
            out(m + i, j) = b.y(i, j);
        }
    if (group.kind == GroupKind::SOOdd) {
        for (std::size_t i = 0; i < m; ++i) {
            out(i, 2 * m) = b.u[i];
            out(m + i, 2 * m) = b.v[i];
            out(2 * m, i) = -b.v[i];
            out(2 * m, m + i) = -b.u[i];
        }
    }
    return out;
}

RatMatrix random_paired_block(std::size_t m, bool symmetric, Rng& rng, long range) {
    RatMatrix s(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (symmetric) s(i, i) = rng.draw(-range, range);
        for (std::size_t j = i + 1; j < m; ++j) {
            const long e = rng.draw(-range, range);
            s(i, j) = e;
            s(j, i) = symmetric ? e : -e;
        }
    }
    return s;
}

Blocks empty_blocks(std::size_t m) {
    return {RatMatrix(m, m), RatMatrix(m, m), RatMatrix(m, m), std::vector<Rational>(m), std::vector<Rational>(m)};
}

RatMatrix conjugate(const RatMatrix& q, const RatMatrix& x) {
    const auto qinv = inverse(q);
    if (!qinv) throw Error(ErrorKind::Internal, "singular group element");
    return q * x * *qinv;
}

std::vector<Rational> validated_points(const std::vector<Rational>& pts) {
    std::set<Rational> seen(pts.begin(), pts.end());
    require(seen.size() == pts.size(), "duplicate marked points");
    return pts;
}

FuncMatrix build_field(const GroupSpec& group, const std::vector<Rational>& pts,
                       const std::vector<RatMatrix>& residues, int degree_bound, Rng& rng) {
    const auto r = static_cast<std::size_t>(group.rank());
    FuncMatrix phi(r, r);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const UniPoly den = UniPoly::linear_factor(pts[k]);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (residues[k](i, j) != 0) phi(i, j) += RationalFunction(UniPoly(residues[k](i, j)), den);
            }
    }
    for (int d = 0; d <= degree_bound; ++d) {
        const RatMatrix coeff = random_lie_element(group, rng);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (coeff(i, j) != 0) phi(i, j) += RationalFunction(UniPoly::monomial(coeff(i, j), static_cast<std::size_t>(d)));
            }
    }
    return phi;
}

}  // namespace

RatMatrix random_lie_element(const GroupSpec& group, Rng& rng, long range) {
    const auto m = static_cast<std::size_t>(group.m);
    const bool symmetric = group.kind == GroupKind::SpEven;
    Blocks b = empty_blocks(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b.a(i, j) = rng.draw(-range, range);
    b.x = random_paired_block(m, symmetric, rng, range);
    b.y = random_paired_block(m, symmetric, rng, range);
    if (group.kind == GroupKind::SOOdd) {
        for (std::size_t i = 0; i < m; ++i) {
            b.u[i] = rng.draw(-range, range);
            b.v[i] = rng.draw(-range, range);
        }
    }
    return assemble(group, b);
}

RatMatrix random_nilradical_element(const GroupSpec& group, Rng& rng, long range) {
    const auto m = static_cast<std::size_t>(group.m);
    Blocks b = empty_blocks(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) b.a(i, j) = rng.draw(-range, range);
    b.x = random_paired_block(m, group.kind == GroupKind::SpEven, rng, range);
    if (group.kind == GroupKind::SOOdd) {
        for (std::size_t i = 0; i < m; ++i) b.u[i] = rng.draw(-range, range);
    }
    return assemble(group, b);
}

RatMatrix random_group_element(const GroupSpec& group, Rng& rng) {
    const GramForm gram = GramForm::split(group);
    for (;;) {
        try {
            return cayley_group_element(random_lie_element(group, rng, 2), gram);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NonGeneric) throw;
        }
    }
}

HiggsField random_strongly_parabolic_higgs(const GroupSpec& group, std::vector<Rational> marked_points,
                                           int degree_bound, std::uint64_t seed) {
    require(degree_bound >= 0, "degree bound must be non-negative");
    const auto pts = validated_points(marked_points);
    Rng rng(seed);
    std::vector<RatMatrix> residues;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const RatMatrix q = random_group_element(group, rng);
        residues.push_back(conjugate(q, random_nilradical_element(group, rng)));
    }
    FuncMatrix phi = build_field(group, pts, residues, degree_bound, rng);
    return HiggsField::make(group, std::move(phi), pts);
}

HiggsField random_semisimple_residue_higgs(const GroupSpec& group, std::vector<Rational> marked_points,
                                           int degree_bound, std::uint64_t seed) {
    require(degree_bound >= 0, "degree bound must be non-negative");
    require(!marked_points.empty(), "negative control needs a marked point");
    const auto pts = validated_points(marked_points);
    Rng rng(seed);
    std::vector<RatMatrix> residues;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const RatMatrix q = random_group_element(group, rng);
        if (k == 0) {
            // diag(h, -h[, 0]) with distinct positive h_i.
            const auto m = static_cast<std::size_t>(group.m);
            Blocks b = empty_blocks(m);
            long h = 0;
            for (std::size_t i = 0; i < m; ++i) {
                h += rng.draw(1, 3);
                b.a(i, i) = h;
            }
            residues.push_back(conjugate(q, assemble(group, b)));
        } else {
            residues.push_back(conjugate(q, random_nilradical_element(group, rng)));
        }
    }
    FuncMatrix phi = build_field(group, pts, residues, degree_bound, rng);
    return HiggsField::make(group, std::move(phi), pts);
}

}  // namespace hx
