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

#include <random>

#include "hitchin/error.hpp"
#include "hitchin/lie.hpp"
#include "oracles.hpp"

using hx::FuncMatrix;
using hx::RatMatrix;
using hx::Rational;
using hx::RationalFunction;
using hx::UniPoly;

namespace {
RatMatrix R(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> q;
    for (auto& r : rows) q.emplace_back(r.begin(), r.end());
    return RatMatrix::from_rows(q);
}
}  // namespace

TEST(Matrix, PfaffianExamples) {
    FuncMatrix two(2, 2);
    const RationalFunction a(UniPoly::from_ints({0, 1}));
    two(0, 1) = a;
    two(1, 0) = -a;
    EXPECT_EQ(hx::pfaffian(two), a);

    const RatMatrix four = R({{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}});
    EXPECT_EQ(hx::pfaffian(four), Rational(8));
    EXPECT_EQ(hx::bareiss_determinant(four), Rational(64));
    EXPECT_EQ(hx::oracle::leibniz_determinant(four), Rational(64));

    const RatMatrix blocks = R({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    EXPECT_EQ(hx::pfaffian(blocks), Rational(1));
    EXPECT_EQ(hx::oracle::pfaffian_expansion(blocks), Rational(1));
}

TEST(Matrix, PfaffianRejectsBadInput) {
    EXPECT_THROW(hx::pfaffian(R({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})), hx::Error);
    EXPECT_THROW(hx::pfaffian(R({{0, 1}, {1, 0}})), hx::Error);
    EXPECT_EQ(hx::pfaffian(RatMatrix(0, 0)), Rational(1));
}

TEST(Matrix, PfaffianSquaresToDeterminant) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 * (1 + rng() % 4);
        const RatMatrix a = hx::oracle::random_antisymmetric(n, rng, trial % 2 == 0 ? 1 : 6);
        const Rational pf = hx::pfaffian(a);
        EXPECT_EQ(pf, hx::oracle::pfaffian_expansion(a));
        EXPECT_EQ(pf * pf, hx::bareiss_determinant(a));
    }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        RatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
        EXPECT_EQ(hx::bareiss_determinant(a), hx::oracle::leibniz_determinant(a));
    }
}

TEST(Matrix, CharPolyMatchesDeterminantAtSamplePoints) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        FuncMatrix phi(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const UniPoly num = hx::oracle::random_poly(rng, 2, 3);
                phi(i, j) = (rng() % 2 == 0) ? RationalFunction(num) : RationalFunction(num, UniPoly::from_ints({-1, 1}));
            }
        const hx::CharData c = hx::char_poly(phi);
        for (long t : {2L, -3L}) {
            for (long x : {0L, 1L, 5L}) {
                RatMatrix xi_minus(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        xi_minus(i, j) = (i == j ? Rational(x) : Rational(0)) - phi(i, j)(Rational(t));
                Rational value = 1;
                for (std::size_t k = 0; k < n; ++k) value *= x;
                for (int i = 1; i <= c.degree(); ++i) {
                    Rational xp = 1;
                    for (int k = 0; k < c.degree() - i; ++k) xp *= x;
                    value += c.coefficient(i)(Rational(t)) * xp;
                }
                EXPECT_EQ(value, hx::oracle::leibniz_determinant(xi_minus));
            }
        }
    }
}

TEST(Matrix, InverseAndKernel) {
    const RatMatrix a = R({{2, 1}, {1, 1}});
    const auto inv = hx::inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(*inv * a, RatMatrix::identity(2));
    EXPECT_FALSE(hx::inverse(R({{1, 2}, {2, 4}})).has_value());

    const RatMatrix s = R({{0, -3, 2}, {3, 0, -1}, {-2, 1, 0}});
    const auto ker = hx::kernel_basis(s);
    ASSERT_EQ(ker.size(), 1U);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < 3; ++j) row += s(i, j) * ker[0][j];
        EXPECT_EQ(row, 0);
    }
}

TEST(Matrix, BerkowitzOfCompanion) {
    // Companion matrix of x^3 - 2x^2 + 3x - 4.
    const RatMatrix c = R({{0, 0, 4}, {1, 0, -3}, {0, 1, 2}});
    const auto coeffs = hx::berkowitz_charpoly(c);
    EXPECT_EQ(coeffs, (std::vector<Rational>{1, -2, 3, -4}));
}
