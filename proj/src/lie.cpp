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

#include "hitchin/lie.hpp"

#include <algorithm>
#include <set>

namespace hx {

std::string group_tag(GroupKind kind) {
    switch (kind) {
        case GroupKind::SpEven: return "sp";
        case GroupKind::SOEven: return "so-even";
        case GroupKind::SOOdd: return "so-odd";
    }
    return "?";
}

GroupKind parse_group_tag(std::string_view tag) {
    if (tag == "sp") return GroupKind::SpEven;
    if (tag == "so-even") return GroupKind::SOEven;
    if (tag == "so-odd") return GroupKind::SOOdd;
    fail("unknown group \"" + std::string(tag) + "\" (expected sp, so-even, so-odd)");
}

GroupSpec GroupSpec::make(GroupKind kind, int m) {
    require(m >= 1, "group rank parameter m must be positive");
    return GroupSpec{kind, m};
}

FormKind form_kind_for(GroupKind kind) {
    return kind == GroupKind::SpEven ? FormKind::Symplectic : FormKind::Symmetric;
}

GramForm GramForm::make(RatMatrix matrix, FormKind kind) {
    require(matrix.is_square() && matrix.rows() > 0, "Gram matrix must be square and nonempty");
    if (kind == FormKind::Symplectic) {
        require(matrix.transpose() == -matrix, "symplectic Gram matrix must be antisymmetric");
    } else {
        require(matrix.transpose() == matrix, "orthogonal Gram matrix must be symmetric");
    }
    require(bareiss_determinant(matrix) != 0, "Gram matrix must be invertible");
    return GramForm(std::move(matrix), kind);
}

GramForm GramForm::split(const GroupSpec& group) {
    const std::size_t m = static_cast<std::size_t>(group.m);
    RatMatrix b(static_cast<std::size_t>(group.rank()), static_cast<std::size_t>(group.rank()));
    const int lower = group.kind == GroupKind::SpEven ? -1 : 1;
    for (std::size_t i = 0; i < m; ++i) {
        b(i, m + i) = 1;
        b(m + i, i) = lower;
    }
    if (group.kind == GroupKind::SOOdd) b(2 * m, 2 * m) = 1;
    return GramForm(std::move(b), form_kind_for(group.kind));
}

UniPoly HiggsField::marked_divisor() const {
    UniPoly d(1);
    for (const auto& a : marked_) d *= UniPoly::linear_factor(a);
    return d;
}

HiggsField HiggsField::make(GroupSpec group, GramForm gram, FuncMatrix matrix, std::vector<Rational> marked_points) {
    const auto r = static_cast<std::size_t>(group.rank());
    require(matrix.rows() == r && matrix.cols() == r,
            "Higgs field must be " + std::to_string(r) + "x" + std::to_string(r) + " for " + group_tag(group.kind));
    require(gram.size() == r, "Gram matrix size does not match the group");
    require(gram.kind() == form_kind_for(group.kind), "Gram form type does not match the group");
    std::set<Rational> seen(marked_points.begin(), marked_points.end());
    require(seen.size() == marked_points.size(), "duplicate marked points");
    UniPoly d(1);
    for (const auto& a : marked_points) d *= UniPoly::linear_factor(a);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            // Simple poles at marked points only: the denominator divides d(t).
            const auto& den = matrix(i, j).den();
            require(divmod(d, den).remainder.is_zero(),
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has a pole off the marked points or of order > 1");
        }
    return HiggsField(group, std::move(gram), std::move(matrix), std::move(marked_points));
}

HiggsField HiggsField::make(GroupSpec group, FuncMatrix matrix, std::vector<Rational> marked_points) {
    return make(group, GramForm::split(group), std::move(matrix), std::move(marked_points));
}

FuncMatrix to_func_matrix(const RatMatrix& m) {
    return m.map([](const Rational& q) { return RationalFunction(q); });
}

bool check_lie_membership(const FuncMatrix& phi, const FuncMatrix& gram) {
    require(phi.is_square() && gram.is_square() && phi.rows() == gram.rows(),
            "Higgs field and Gram matrix sizes differ");
    return (phi.transpose() * gram + gram * phi).is_zero();
}

bool check_lie_membership(const FuncMatrix& phi, const RatMatrix& gram) {
    return check_lie_membership(phi, to_func_matrix(gram));
}

bool check_lie_membership(const RatMatrix& phi, const RatMatrix& gram) {
    require(phi.is_square() && gram.is_square() && phi.rows() == gram.rows(),
            "matrix and Gram matrix sizes differ");
    return (phi.transpose() * gram + gram * phi).is_zero();
}

CharData char_poly(const FuncMatrix& phi) {
    require(phi.is_square(), "characteristic polynomial of a non-square matrix");
    UniPoly l(1);
    for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j) l = lcm(l, phi(i, j).den());
    const PolyMatrix scaled = phi.map([&](const RationalFunction& f) { return f.num() * exact_div(l, f.den()); });
    const std::vector<UniPoly> c = berkowitz_charpoly(scaled);
    CharData out;
    UniPoly l_power(1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        l_power *= l;
        out.s.emplace_back(c[i], l_power);
    }
    return out;
}

ParityVerdict parity_classify(const CharData& c, const GroupSpec& group) {
    require(c.degree() == group.rank(), "characteristic polynomial degree " + std::to_string(c.degree()) +
                                            " does not match rank " + std::to_string(group.rank()));
    ParityVerdict v;
    v.pass = true;
    const int r = c.degree();
    if (group.kind == GroupKind::SOOdd) {
        // x * (even): s_i must vanish for odd i, and so must s_r (the constant term).
        for (int i = 1; i <= r; i += 2) {
            if (!c.coefficient(i).is_zero()) {
                v.pass = false;
                v.first_offending = i;
                break;
            }
        }
        if (v.pass)
            for (int i = 2; i < r; i += 2) v.even_part.push_back(c.coefficient(i));
    } else {
        for (int i = 1; i <= r; i += 2) {
            if (!c.coefficient(i).is_zero()) {
                v.pass = false;
                v.first_offending = i;
                break;
            }
        }
        if (v.pass)
            for (int i = 2; i <= r; i += 2) v.even_part.push_back(c.coefficient(i));
    }
    return v;
}

PfaffianSquareVerdict pfaffian_square_check(const HiggsField& phi) {
    require(phi.group().kind == GroupKind::SOEven, "Pfaffian check needs an so-even field");
    const FuncMatrix b = to_func_matrix(phi.gram().matrix());
    const FuncMatrix bphi = b * phi.matrix();
    require(is_antisymmetric(bphi), "B Phi is not antisymmetric; the field is not in the Lie algebra");
    PfaffianSquareVerdict v;
    v.pfaffian = pfaffian(bphi);
    const CharData c = char_poly(phi.matrix());
    v.top_coefficient = c.coefficient(c.degree());
    // det(Phi) = Pf(B Phi)^2 / det(B).
    const Rational det_b = bareiss_determinant(phi.gram().matrix());
    v.pass = v.top_coefficient * RationalFunction(det_b) == v.pfaffian * v.pfaffian;
    return v;
}

RatMatrix residue_at(const HiggsField& phi, const Rational& a) {
    const auto& pts = phi.marked_points();
    require(std::find(pts.begin(), pts.end(), a) != pts.end(), to_string(a) + " is not a marked point");
    const FuncMatrix& m = phi.matrix();
    RatMatrix res(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RationalFunction& f = m(i, j);
            const auto order = pole_order_at(f, a);
            if (!order || *order <= 0) continue;
            require(*order == 1, "residue of a pole of order > 1");
            const UniPoly rest = exact_div(f.den(), UniPoly::linear_factor(a));
            res(i, j) = f.num()(a) / rest(a);
        }
    return res;
}

StrongParabolicVerdict strong_parabolic_check(const HiggsField& phi) {
    StrongParabolicVerdict v;
    const auto r = static_cast<unsigned>(phi.group().rank());
    for (const auto& a : phi.marked_points()) {
        RatMatrix res = residue_at(phi, a);
        if (!matrix_power(res, r).is_zero()) {
            v.pass = false;
            v.non_nilpotent_residues.push_back({a, std::move(res)});
        }
    }
    const CharData c = char_poly(phi.matrix());
    for (int i = 1; i <= c.degree(); ++i) {
        for (const auto& a : phi.marked_points()) {
            const auto order = pole_order_at(c.coefficient(i), a);
            if (order && *order > i - 1) {
                v.pass = false;
                v.pole_violations.push_back({a, i, *order});
            }
        }
    }
    return v;
}

RatMatrix cayley_group_element(const RatMatrix& a, const GramForm& gram) {
    require(a.is_square() && a.rows() == gram.size(), "Cayley transform size mismatch");
    require(check_lie_membership(a, gram.matrix()), "Cayley transform input is not in the Lie algebra");
    const RatMatrix id = RatMatrix::identity(a.rows());
    const auto inv = inverse(id + a);
    if (!inv) throw Error(ErrorKind::NonGeneric, "Cayley pole");
    return (id - a) * *inv;
}

}  // namespace hx
