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

#include "hitchin/bipoly.hpp"

#include <algorithm>
#include <limits>

#include "hitchin/error.hpp"
#include "hitchin/matrix.hpp"

namespace hx {

namespace {
const UniPoly kZeroPoly;
}

BiPoly::BiPoly(std::vector<UniPoly> ascending_in_x) : coeffs_(std::move(ascending_in_x)) { trim(); }

BiPoly BiPoly::monomial(const UniPoly& c, std::size_t k) {
    std::vector<UniPoly> v(k + 1);
    v[k] = c;
    return BiPoly(std::move(v));
}

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

const UniPoly& BiPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZeroPoly; }

BiPoly BiPoly::derivative_x() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<UniPoly> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * UniPoly(static_cast<int>(k));
    return BiPoly(std::move(d));
}

BiPoly BiPoly::derivative_t() const {
    std::vector<UniPoly> d;
    d.reserve(coeffs_.size());
    for (const auto& c : coeffs_) d.push_back(c.derivative());
    return BiPoly(std::move(d));
}

BiPoly BiPoly::reflect_x() const {
    std::vector<UniPoly> d = coeffs_;
    for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
    return BiPoly(std::move(d));
}

UniPoly BiPoly::at_t(const Rational& t0) const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c(t0));
    return UniPoly(std::move(v));
}

Rational BiPoly::operator()(const Rational& t, const Rational& x) const { return at_t(t)(x); }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<UniPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<UniPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UniPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BiPoly(std::move(c));
}

namespace {

void check_resultant_args(const BiPoly& f, const BiPoly& g) {
    require(!f.is_zero() && !g.is_zero(), "resultant of a zero polynomial");
    require(f.degree_x() > 0 || g.degree_x() > 0, "no variable to eliminate");
}

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

// Scales f to integer coefficients; returns the scale factor.
Integer clear_denominators(const BiPoly& f, std::vector<std::vector<Integer>>& out) {
    Integer l = 1;
    for (const auto& c : f.coefficients())
        for (const auto& q : c.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    out.clear();
    for (const auto& c : f.coefficients()) {
        std::vector<Integer> row;
        for (const auto& q : c.coefficients()) {
            Rational v = q * l;
            row.push_back(v.get_num());
        }
        out.push_back(std::move(row));
    }
    return l;
}

// Offset a with deg_t coeff(x^(d-i)) <= w*i + a, for the weighted degree bound.
long weight_offset(const BiPoly& f, long w) {
    const int d = f.degree_x();
    long a = std::numeric_limits<long>::min();
    for (int i = 0; i <= d; ++i) {
        const UniPoly& c = f.coeff(static_cast<std::size_t>(d - i));
        if (!c.is_zero()) a = std::max(a, static_cast<long>(c.degree()) - w * i);
    }
    return a;
}

long resultant_degree_bound(const BiPoly& f, const BiPoly& g) {
    const long m = f.degree_x();
    const long n = g.degree_x();
    const long top = std::max(f.degree_t(), g.degree_t());
    long best = std::numeric_limits<long>::max();
    for (long w = 0; w <= top; ++w) {
        best = std::min(best, w * m * n + weight_offset(f, w) * n + weight_offset(g, w) * m);
    }
    return std::max(best, 0L);
}

Integer eval_int(const std::vector<Integer>& c, long t) {
    Integer acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= t;
        acc += c[k];
    }
    return acc;
}

}  // namespace

UniPoly resultant_x(const BiPoly& f, const BiPoly& g) {
    check_resultant_args(f, g);
    const int m = f.degree_x();
    const int n = g.degree_x();
    std::vector<std::vector<Integer>> fi;
    std::vector<std::vector<Integer>> gi;
    const Integer lf = clear_denominators(f, fi);
    const Integer lg = clear_denominators(g, gi);
    const long bound = resultant_degree_bound(f, g);

    // Values of the integer resultant at t = 0..bound, then forward differences.
    std::vector<Integer> diff;
    diff.reserve(static_cast<std::size_t>(bound) + 1);
    for (long t = 0; t <= bound; ++t) {
        std::vector<Integer> fv;
        std::vector<Integer> gv;
        for (const auto& c : fi) fv.push_back(eval_int(c, t));
        for (const auto& c : gi) gv.push_back(eval_int(c, t));
        const std::size_t size = static_cast<std::size_t>(m + n);
        std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k <= m; ++k) s[i][i + k] = fv[static_cast<std::size_t>(m - k)];
        for (int i = 0; i < m; ++i)
            for (int k = 0; k <= n; ++k) s[n + i][i + k] = gv[static_cast<std::size_t>(n - k)];
        diff.push_back(integer_determinant(std::move(s)));
    }
    for (std::size_t k = 1; k < diff.size(); ++k)
        for (std::size_t i = diff.size() - 1; i >= k; --i) diff[i] -= diff[i - 1];

    // Newton form sum_k diff[k] * C(t, k), expanded by Horner with everything
    // scaled by bound! to stay in Z.
    const std::size_t top = diff.size() - 1;
    std::vector<Integer> scale(diff.size());  // bound! / k!
    scale[top] = 1;
    for (std::size_t k = top; k-- > 0;) scale[k] = scale[k + 1] * static_cast<unsigned long>(k + 1);
    std::vector<Integer> q{diff[top]};
    for (std::size_t k = top; k-- > 0;) {
        std::vector<Integer> next(q.size() + 1);
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i + 1] += q[i];
            next[i] -= q[i] * static_cast<unsigned long>(k);
        }
        next[0] += diff[k] * scale[k];
        q = std::move(next);
    }
    Integer denom = scale[0];
    Integer lf_pow;
    Integer lg_pow;
    mpz_pow_ui(lf_pow.get_mpz_t(), lf.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(lg_pow.get_mpz_t(), lg.get_mpz_t(), static_cast<unsigned long>(m));
    denom *= lf_pow * lg_pow;
    std::vector<Rational> out;
    out.reserve(q.size());
    for (const auto& c : q) out.push_back(make_rational(c, denom));
    return UniPoly(std::move(out));
}

UniPoly resultant_x_sylvester(const BiPoly& f, const BiPoly& g) {
    check_resultant_args(f, g);
    const int m = f.degree_x();
    const int n = g.degree_x();
    const std::size_t size = static_cast<std::size_t>(m + n);
    PolyMatrix s(size, size);
    // Coefficients run from the leading one, so row i of f starts at column i.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s(i, i + k) = f.coeff(static_cast<std::size_t>(m - k));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s(n + i, i + k) = g.coeff(static_cast<std::size_t>(n - k));
    return bareiss_determinant(std::move(s));
}

UniPoly discriminant_x(const BiPoly& f) {
    const int r = f.degree_x();
    require(r >= 2, "discriminant needs degree >= 2 in x");
    require(f.is_monic_x(), "discriminant needs a polynomial monic in x");
    const UniPoly res = resultant_x(f, f.derivative_x());
    return ((r * (r - 1) / 2) % 2 == 0) ? res : -res;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = f.coefficients().size(); k-- > 0;) {
        const UniPoly& c = f.coefficients()[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c == UniPoly(1);
        if (!unit || k == 0) out += "(" + to_string(c) + ")";
        if (k >= 1) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace hx
