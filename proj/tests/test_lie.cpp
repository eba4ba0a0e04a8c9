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

#include <gtest/gtest.h>

#include "hitchin/error.hpp"
#include "hitchin/generator.hpp"
#include "hitchin/lie.hpp"
#include "oracles.hpp"

using namespace hx;

namespace {
UniPoly P(std::initializer_list<long> c) { return UniPoly::from_ints(c); }
RationalFunction over(const UniPoly& num, const UniPoly& den) { return RationalFunction(num, den); }
RatMatrix R(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> q;
    for (auto& r : rows) q.emplace_back(r.begin(), r.end());
    return RatMatrix::from_rows(q);
}
FuncMatrix F(std::vector<std::vector<RationalFunction>> rows) { return FuncMatrix::from_rows(rows); }
const GroupSpec kSp2 = GroupSpec::make(GroupKind::SpEven, 1);
const GroupSpec kSo2 = GroupSpec::make(GroupKind::SOEven, 1);

std::vector<GroupSpec> all_groups(int max_m) {
    std::vector<GroupSpec> out;
    for (int m = 1; m <= max_m; ++m)
        for (auto k : {GroupKind::SpEven, GroupKind::SOEven, GroupKind::SOOdd}) out.push_back(GroupSpec::make(k, m));
    return out;
}
}  // namespace

TEST(Group, DimensionsAndTags) {
    EXPECT_EQ(GroupSpec::make(GroupKind::SpEven, 2).dim_group(), 10);
    EXPECT_EQ(GroupSpec::make(GroupKind::SOEven, 2).dim_group(), 6);
    EXPECT_EQ(GroupSpec::make(GroupKind::SOOdd, 2).dim_group(), 10);
    EXPECT_EQ(GroupSpec::make(GroupKind::SOOdd, 2).rank(), 5);
    EXPECT_EQ(GroupSpec::make(GroupKind::SOEven, 2).dim_flag_variety(), 2);
    EXPECT_EQ(parse_group_tag("so-odd"), GroupKind::SOOdd);
    EXPECT_EQ(group_tag(GroupKind::SOEven), "so-even");
    EXPECT_THROW(parse_group_tag("gl"), Error);
    EXPECT_THROW(GroupSpec::make(GroupKind::SpEven, 0), Error);
}

TEST(Gram, SplitFormsAndValidation) {
    EXPECT_EQ(GramForm::split(kSp2).matrix(), R({{0, 1}, {-1, 0}}));
    EXPECT_EQ(GramForm::split(kSo2).matrix(), R({{0, 1}, {1, 0}}));
    EXPECT_EQ(GramForm::split(GroupSpec::make(GroupKind::SOOdd, 1)).matrix(), R({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    EXPECT_THROW(GramForm::make(R({{0, 1}, {1, 0}}), FormKind::Symplectic), Error);
    EXPECT_THROW(GramForm::make(R({{1, 0}, {0, 0}}), FormKind::Symmetric), Error);
}

TEST(Lie, MembershipExamples) {
    const RatMatrix j = R({{0, 1}, {-1, 0}});
    EXPECT_TRUE(check_lie_membership(R({{1, 2}, {3, -1}}), j));
    EXPECT_FALSE(check_lie_membership(RatMatrix::identity(2), j));
    EXPECT_FALSE(check_lie_membership(RatMatrix::identity(3), RatMatrix::identity(3)));
    EXPECT_TRUE(check_lie_membership(RatMatrix(2, 2), j));
}

TEST(Lie, CharPolyExamples) {
    const CharData c = char_poly(to_func_matrix(R({{1, 2}, {3, -1}})));
    EXPECT_EQ(c.s, (std::vector<RationalFunction>{0, -7}));
    EXPECT_EQ(char_poly(FuncMatrix(3, 3)).s, (std::vector<RationalFunction>{0, 0, 0}));
    const CharData nil = char_poly(F({{0, over(P({1}), P({0, 1}))}, {0, 0}}));
    EXPECT_EQ(nil.s, (std::vector<RationalFunction>{0, 0}));
}

TEST(Lie, ParityExamples) {
    const ParityVerdict sp = parity_classify(CharData{{0, -7}}, kSp2);
    EXPECT_TRUE(sp.pass);
    EXPECT_EQ(sp.even_part, (std::vector<RationalFunction>{-7}));

    const ParityVerdict odd = parity_classify(CharData{{0, 14, 0}}, GroupSpec::make(GroupKind::SOOdd, 1));
    EXPECT_TRUE(odd.pass);
    EXPECT_EQ(odd.even_part, (std::vector<RationalFunction>{14}));

    const ParityVerdict bad = parity_classify(CharData{{1, 0}}, kSp2);
    EXPECT_FALSE(bad.pass);
    EXPECT_EQ(bad.first_offending, 1);
}

TEST(Lie, ThreeByThreeAntisymmetricCharPoly) {
    // lambda^3 + (a^2 + b^2 + c^2) lambda for the hat map of (a, b, c).
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                const CharData ch = char_poly(to_func_matrix(R({{0, -c, b}, {c, 0, -a}, {-b, a, 0}})));
                EXPECT_EQ(ch.s, (std::vector<RationalFunction>{0, Rational(a * a + b * b + c * c), 0}));
            }
}

TEST(Lie, PfaffianSquareExamples) {
    const UniPoly a = P({2, 1});
    const HiggsField phi = HiggsField::make(kSo2, F({{a, 0}, {0, -a}}), {});
    const PfaffianSquareVerdict v = pfaffian_square_check(phi);
    EXPECT_TRUE(v.pass);
    EXPECT_EQ(v.pfaffian, RationalFunction(-a));
    EXPECT_EQ(v.top_coefficient, RationalFunction(-a * a));

    const HiggsField zero = HiggsField::make(GroupSpec::make(GroupKind::SOEven, 2), FuncMatrix(4, 4), {});
    const PfaffianSquareVerdict z = pfaffian_square_check(zero);
    EXPECT_TRUE(z.pass);
    EXPECT_TRUE(z.pfaffian.is_zero());
    EXPECT_THROW(pfaffian_square_check(HiggsField::make(kSp2, FuncMatrix(2, 2), {})), Error);
}

TEST(Lie, PfaffianSquareOnRandomSo4) {
    const GroupSpec so4 = GroupSpec::make(GroupKind::SOEven, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const HiggsField phi = random_strongly_parabolic_higgs(so4, {Rational(0), Rational(2)}, 1, seed);
        const PfaffianSquareVerdict v = pfaffian_square_check(phi);
        ASSERT_TRUE(v.pass) << seed;
        // Brute force: det(Phi) against Pf(B Phi)^2 with det B = 1 for the split so(4) form.
        EXPECT_EQ(oracle::leibniz_determinant(phi.matrix()), v.pfaffian * v.pfaffian);
        FuncMatrix bphi = to_func_matrix(phi.gram().matrix()) * phi.matrix();
        EXPECT_EQ(oracle::pfaffian_expansion(bphi), v.pfaffian);
    }
}

TEST(Lie, ResidueExamples) {
    const RationalFunction inv_t = over(P({1}), P({0, 1}));
    const HiggsField phi = HiggsField::make(kSp2, F({{P({0, 1}), inv_t}, {P({0, 1}), P({0, -1})}}), {Rational(0)});
    EXPECT_EQ(residue_at(phi, Rational(0)), R({{0, 1}, {0, 0}}));

    const HiggsField poly = HiggsField::make(kSp2, F({{P({0, 1}), 1}, {0, P({0, -1})}}), {Rational(3)});
    EXPECT_EQ(residue_at(poly, Rational(3)), RatMatrix(2, 2));

    const RationalFunction inv = over(P({1}), P({-1, 1}));
    const HiggsField diag = HiggsField::make(kSp2, F({{inv, 0}, {0, -inv}}), {Rational(1)});
    EXPECT_EQ(residue_at(diag, Rational(1)), R({{1, 0}, {0, -1}}));
    EXPECT_THROW(residue_at(diag, Rational(2)), Error);
}

TEST(Lie, StrongParabolicExamples) {
    const RationalFunction inv_t = over(P({1}), P({0, 1}));
    const HiggsField good = HiggsField::make(kSp2, F({{P({0, 1}), inv_t}, {P({0, 1}), P({0, -1})}}), {Rational(0)});
    EXPECT_TRUE(strong_parabolic_check(good).pass);
    EXPECT_EQ(char_poly(good.matrix()).coefficient(2), RationalFunction(P({-1, 0, -1})));

    const HiggsField neg = HiggsField::make(kSo2, F({{inv_t, 0}, {0, -inv_t}}), {Rational(0)});
    const StrongParabolicVerdict v = strong_parabolic_check(neg);
    EXPECT_FALSE(v.pass);
    ASSERT_EQ(v.non_nilpotent_residues.size(), 1U);
    EXPECT_EQ(v.non_nilpotent_residues[0].residue, R({{1, 0}, {0, -1}}));
    ASSERT_EQ(v.pole_violations.size(), 1U);
    EXPECT_EQ(v.pole_violations[0].index, 2);
    EXPECT_EQ(v.pole_violations[0].pole_order, 2);

    const HiggsField poly = HiggsField::make(kSp2, F({{P({1, 1}), 2}, {P({0, 3}), P({-1, -1})}}), {Rational(5)});
    EXPECT_TRUE(strong_parabolic_check(poly).pass);
}

TEST(Lie, HiggsFieldValidation) {
    const RationalFunction inv_t = over(P({1}), P({0, 1}));
    EXPECT_THROW(HiggsField::make(kSp2, F({{inv_t, 0}, {0, -inv_t}}), {}), Error);  // pole off D
    EXPECT_THROW(HiggsField::make(kSp2, FuncMatrix(2, 2), {Rational(1), Rational(1)}), Error);
    EXPECT_THROW(HiggsField::make(kSp2, FuncMatrix(3, 3), {}), Error);
    EXPECT_THROW(HiggsField::make(kSp2, F({{over(P({1}), P({0, 0, 1})), 0}, {0, 0}}), {Rational(0)}), Error);
}

TEST(Lie, CayleyExamples) {
    const GramForm id = GramForm::make(RatMatrix::identity(2), FormKind::Symmetric);
    const RatMatrix q = cayley_group_element(R({{0, 1}, {-1, 0}}), id);
    EXPECT_EQ(q, R({{0, -1}, {1, 0}}));
    EXPECT_EQ(q.transpose() * q, RatMatrix::identity(2));
    EXPECT_EQ(cayley_group_element(RatMatrix(2, 2), id), RatMatrix::identity(2));
    const GramForm j = GramForm::split(kSp2);
    EXPECT_THROW(cayley_group_element(R({{1, 0}, {0, -1}}), j), Error);  // I + A singular
}

TEST(Lie, CayleyPreservesTheForm) {
    for (const GroupSpec& g : all_groups(3)) {
        Rng rng(99);
        const RatMatrix b = GramForm::split(g).matrix();
        for (int k = 0; k < 20; ++k) {
            const RatMatrix q = random_group_element(g, rng);
            EXPECT_EQ(q.transpose() * b * q, b);
        }
    }
}

TEST(Generator, DeterministicPerSeed) {
    for (const GroupSpec& g : all_groups(2)) {
        const auto a = random_strongly_parabolic_higgs(g, {Rational(0), Rational(1)}, 2, 42);
        const auto b = random_strongly_parabolic_higgs(g, {Rational(0), Rational(1)}, 2, 42);
        const auto c = random_strongly_parabolic_higgs(g, {Rational(0), Rational(1)}, 2, 43);
        EXPECT_EQ(a, b);
        EXPECT_NE(a, c);
    }
}

TEST(Generator, OutputsSatisfyTheCheckers) {
    for (const GroupSpec& g : all_groups(3)) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const auto phi =
                random_strongly_parabolic_higgs(g, {Rational(0), Rational(1), Rational(-1, 2)}, 1 + seed % 3, seed);
            EXPECT_TRUE(check_lie_membership(phi.matrix(), phi.gram().matrix()));
            EXPECT_TRUE(strong_parabolic_check(phi).pass);
            EXPECT_TRUE(parity_classify(char_poly(phi.matrix()), g).pass);
        }
    }
}

TEST(Generator, NilradicalAndLieElements) {
    for (const GroupSpec& g : all_groups(4)) {
        Rng rng(5);
        const RatMatrix b = GramForm::split(g).matrix();
        const RatMatrix x = random_lie_element(g, rng);
        EXPECT_TRUE(check_lie_membership(x, b));
        const RatMatrix n = random_nilradical_element(g, rng);
        EXPECT_TRUE(check_lie_membership(n, b));
        EXPECT_TRUE(matrix_power(n, static_cast<unsigned>(g.rank())).is_zero());
    }
}

TEST(Generator, NegativeControlFails) {
    for (const GroupSpec& g : all_groups(3)) {
        const auto phi = random_semisimple_residue_higgs(g, {Rational(0), Rational(1)}, 2, 7);
        EXPECT_TRUE(check_lie_membership(phi.matrix(), phi.gram().matrix()));
        const auto v = strong_parabolic_check(phi);
        EXPECT_FALSE(v.pass);
        EXPECT_FALSE(v.non_nilpotent_residues.empty());
    }
}
