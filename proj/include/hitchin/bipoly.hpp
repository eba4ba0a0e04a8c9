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
#include <vector>

#include "hitchin/poly.hpp"

namespace hx {

/// Polynomial in x with coefficients in Q[t], stored ascending in x.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> ascending_in_x);

    /// x^k with coefficient c(t).
    static BiPoly monomial(const UniPoly& c, std::size_t k);

    int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_t() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic_x() const { return !coeffs_.empty() && coeffs_.back() == UniPoly(1); }
    const std::vector<UniPoly>& coefficients() const { return coeffs_; }
    const UniPoly& coeff(std::size_t k) const;

    BiPoly derivative_x() const;
    BiPoly derivative_t() const;
    /// F(t, -x).
    BiPoly reflect_x() const;
    /// F(t0, x) as a polynomial in x.
    UniPoly at_t(const Rational& t0) const;
    Rational operator()(const Rational& t, const Rational& x) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

private:
    void trim();

    std::vector<UniPoly> coeffs_;
};

/// Sylvester resultant with respect to x. Rows hold deg_x g shifts of f
/// followed by deg_x f shifts of g, so Res(f, g) = lc(f)^deg g * prod g(roots of f).
/// Integer determinants at t = 0..D (D a weighted degree bound) are
/// interpolated back to a polynomial.
UniPoly resultant_x(const BiPoly& f, const BiPoly& g);

/// Same value via a fraction-free determinant of the Sylvester matrix over Q[t].
/// Slower; kept as an independent reference.
UniPoly resultant_x_sylvester(const BiPoly& f, const BiPoly& g);

/// (-1)^(r(r-1)/2) Res_x(f, f_x) for f monic in x of degree r >= 2.
UniPoly discriminant_x(const BiPoly& f);

std::string to_string(const BiPoly& f);

}  // namespace hx
