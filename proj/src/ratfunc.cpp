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

#include "hitchin/ratfunc.hpp"

#include "hitchin/error.hpp"

namespace hx {

RationalFunction::RationalFunction(const UniPoly& num, const UniPoly& den) {
    require(!den.is_zero(), "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    const UniPoly g = gcd(num, den);
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
    const Rational lc = den_.leading();
    if (lc != 1) {
        num_ = num_ * UniPoly(1 / lc);
        den_ = den_.monic();
    }
}

Rational RationalFunction::operator()(const Rational& t) const {
    const Rational d = den_(t);
    require(d != 0, "evaluation at a pole");
    return num_(t) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.is_polynomial()) return RationalFunction(a.num_ + b.num_);
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) {
        return RationalFunction(a.num_ * b.num_, UniPoly(1), RationalFunction::Canonical{});
    }
    // Cross-cancel before multiplying to keep the gcd small.
    const UniPoly g1 = gcd(a.num_, b.den_);
    const UniPoly g2 = gcd(b.num_, a.den_);
    UniPoly num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    UniPoly den = exact_div(b.den_, g1) * exact_div(a.den_, g2);
    const Rational lc = den.leading();
    if (lc != 1) {
        num = num * UniPoly(1 / lc);
        den = den.monic();
    }
    return RationalFunction(std::move(num), std::move(den), RationalFunction::Canonical{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    require(!b.is_zero(), "division by the zero rational function");
    return a * RationalFunction(b.den_, b.num_);
}

std::optional<int> pole_order_at(const RationalFunction& f, const Rational& a) {
    if (f.is_zero()) return std::nullopt;
    return multiplicity(f.den(), a) - multiplicity(f.num(), a);
}

std::string to_string(const RationalFunction& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace hx
