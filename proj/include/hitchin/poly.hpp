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

#include <cstddef>
#include <string>
#include <vector>

#include "hitchin/rational.hpp"

namespace hx {

/// Dense univariate polynomial over Q in the chart variable t, stored with
/// ascending coefficients. The zero polynomial has no coefficients and degree -1;
/// otherwise the last coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& constant);  // NOLINT: Q embeds in Q[t]
    UniPoly(int constant) : UniPoly(Rational(constant)) {}  // NOLINT
    explicit UniPoly(std::vector<Rational> ascending);

    static UniPoly monomial(const Rational& c, std::size_t power);
    /// The linear polynomial t - root.
    static UniPoly linear_factor(const Rational& root);
    static UniPoly from_ints(std::initializer_list<long> ascending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Zero past the degree.
    const Rational& coeff(std::size_t k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Throws unless b divides a exactly.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned k);

/// Monic gcd; gcd(0, 0) = 0. Runs a primitive PRS over Z to keep coefficients small.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), monic. Throws "zero input" for p = 0.
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

/// Order of vanishing of p at a (p nonzero).
int multiplicity(const UniPoly& p, const Rational& a);

/// Scales p to an integer polynomial with content 1 and positive leading coefficient.
std::vector<Integer> primitive_integer_coefficients(const UniPoly& p);

struct RootSearch {
    std::vector<Rational> roots;  // distinct, ascending
    bool complete = true;         // false when a coefficient was too large to factor
};

/// Rational roots of a nonzero polynomial via the rational root theorem.
RootSearch rational_roots(const UniPoly& p);

std::string to_string(const UniPoly& p, char var = 't');

}  // namespace hx
