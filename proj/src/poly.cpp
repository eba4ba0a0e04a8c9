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

#include "hitchin/poly.hpp"

#include <algorithm>
#include <set>

#include "hitchin/error.hpp"

namespace hx {

namespace {

const Rational kZero(0);

using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntPoly& p) {
    const Integer g = content(p);
    if (g > 1) {
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    if (!p.empty() && p.back() < 0) {
        for (auto& c : p) c = -c;
    }
}

// lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim_int(a);
    }
    return a;
}

UniPoly from_int_poly(const IntPoly& p) {
    std::vector<Rational> c(p.begin(), p.end());
    return UniPoly(std::move(c));
}

bool divides_exactly(const IntPoly& d, IntPoly a) {
    const std::size_t dd = d.size() - 1;
    Integer q;
    while (!a.empty() && a.size() - 1 >= dd) {
        if (!mpz_divisible_p(a.back().get_mpz_t(), d.back().get_mpz_t())) return false;
        mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), d.back().get_mpz_t());
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) a[i + shift] -= q * d[i];
        trim_int(a);
    }
    return a.empty();
}

Integer max_norm(const IntPoly& p) {
    Integer m = 0;
    for (const auto& c : p) m = std::max(m, Integer(abs(c)));
    return m;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// Heuristic gcd of primitive polynomials: gcd of values at a large integer,
// read back as balanced base-xi digits. Empty result means "give up".
IntPoly heuristic_gcd(const IntPoly& a, const IntPoly& b) {
    Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Integer gamma;
        const Integer va = evaluate(a, xi);
        const Integer vb = evaluate(b, xi);
        mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        IntPoly g;
        const Integer half = xi / 2;
        while (gamma != 0) {
            Integer digit;
            mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
            if (digit > half) digit -= xi;
            g.push_back(digit);
            gamma -= digit;
            mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
        }
        trim_int(g);
        if (!g.empty()) {
            make_primitive(g);
            if (divides_exactly(g, a) && divides_exactly(g, b)) return g;
        }
        xi = xi * 73794 / 27011;
    }
    return {};
}

}  // namespace

UniPoly::UniPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
    if (c == 0) return {};
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_factor(const Rational& root) {
    return UniPoly(std::vector<Rational>{-root, Rational(1)});
}

UniPoly UniPoly::from_ints(std::initializer_list<long> ascending) {
    std::vector<Rational> v;
    v.reserve(ascending.size());
    for (long c : ascending) v.emplace_back(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& UniPoly::leading() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly out = *this;
    const Rational lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a) {
    UniPoly out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem = a.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quo(rem.size() - db);
    const Rational& lb = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        const Rational q = rem[k] / lb;
        quo[k - db] = q;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeff(i);
    }
    rem.resize(db);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

UniPoly pow(const UniPoly& p, unsigned k) {
    UniPoly result(1);
    UniPoly base = p;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

std::vector<Integer> primitive_integer_coefficients(const UniPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(out);
    return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    IntPoly x = primitive_integer_coefficients(a);
    IntPoly y = primitive_integer_coefficients(b);
    if (x.size() < y.size()) std::swap(x, y);
    if (y.size() == 1) return UniPoly(1);
    if (IntPoly h = heuristic_gcd(x, y); !h.empty()) return from_int_poly(h).monic();
    while (!y.empty()) {
        if (y.size() == 1) return UniPoly(1);
        IntPoly r = pseudo_remainder(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    return from_int_poly(x).monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_div(a * b, gcd(a, b)).monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    require(!p.is_zero(), "zero input");
    return exact_div(p, gcd(p, p.derivative())).monic();
}

bool is_squarefree(const UniPoly& p) {
    require(!p.is_zero(), "zero input");
    return gcd(p, p.derivative()).degree() == 0;
}

int multiplicity(const UniPoly& p, const Rational& a) {
    require(!p.is_zero(), "multiplicity of the zero polynomial");
    // Synthetic division by (t - a) until the remainder is nonzero.
    std::vector<Rational> c = p.coefficients();
    int mult = 0;
    while (c.size() > 1) {
        std::vector<Rational> q(c.size() - 1);
        Rational acc = 0;
        for (std::size_t k = c.size(); k-- > 1;) {
            acc = acc * a + c[k];
            q[k - 1] = acc;
        }
        if (acc * a + c[0] != 0) break;
        c = std::move(q);
        ++mult;
    }
    return mult;
}

namespace {

constexpr unsigned long kMaxFactorable = 1'000'000'000'000UL;
constexpr std::size_t kMaxCandidates = 4'000'000;

// Positive divisors of |n|, or nothing when |n| is too large to factor by trial division.
bool divisors(const Integer& n, std::vector<Integer>& out) {
    Integer a = abs(n);
    if (a > Integer(std::to_string(kMaxFactorable))) return false;
    unsigned long v = a.get_ui();
    std::vector<std::pair<unsigned long, int>> factors;
    for (unsigned long f = 2; f * f <= v; ++f) {
        int e = 0;
        while (v % f == 0) {
            v /= f;
            ++e;
        }
        if (e > 0) factors.emplace_back(f, e);
    }
    if (v > 1) factors.emplace_back(v, 1);
    out.assign(1, Integer(1));
    for (auto [f, e] : factors) {
        const std::size_t base = out.size();
        Integer pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= f;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    return true;
}

}  // namespace

RootSearch rational_roots(const UniPoly& p) {
    require(!p.is_zero(), "root search on the zero polynomial");
    RootSearch result;
    std::set<Rational> found;
    UniPoly q = p;
    if (q.coeff(0) == 0) {
        found.insert(Rational(0));
        while (q.coeff(0) == 0) q = exact_div(q, UniPoly::monomial(Rational(1), 1));
    }
    if (q.degree() >= 1) {
        q = squarefree_part(q);
        const IntPoly z = primitive_integer_coefficients(q);
        if (q.degree() == 1) {
            found.insert(make_rational(-z[0], z[1]));
        } else {
            std::vector<Integer> nums;
            std::vector<Integer> dens;
            if (!divisors(z.front(), nums) || !divisors(z.back(), dens) ||
                nums.size() * dens.size() > kMaxCandidates) {
                result.complete = false;
            } else {
                // (v*s - u) | f(s) for s = 1, -1 cheaply prunes candidates u/v.
                Integer at_one = 0;
                Integer at_minus_one = 0;
                for (std::size_t k = 0; k < z.size(); ++k) {
                    at_one += z[k];
                    at_minus_one += (k % 2 == 0) ? z[k] : Integer(-z[k]);
                }
                auto divides = [](const Integer& d, const Integer& n) {
                    return d != 0 ? mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0 : n == 0;
                };
                for (const auto& v : dens) {
                    for (const auto& u0 : nums) {
                        for (int sign : {1, -1}) {
                            const Integer u = u0 * sign;
                            if (!divides(v - u, at_one) || !divides(v + u, at_minus_one)) continue;
                            const Rational cand = make_rational(u, v);
                            if (q(cand) == 0) found.insert(cand);
                        }
                    }
                }
            }
        }
    }
    result.roots.assign(found.begin(), found.end());
    return result;
}

std::string to_string(const UniPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) {
        const Rational& c = p.coefficients()[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (k == 0 || !unit) out += to_string(mag);
        if (k >= 1) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace hx
