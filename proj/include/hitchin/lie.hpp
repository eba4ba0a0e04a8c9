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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitchin/matrix.hpp"

namespace hx {

enum class GroupKind { SpEven, SOEven, SOOdd };

std::string group_tag(GroupKind kind);           // "sp", "so-even", "so-odd"
GroupKind parse_group_tag(std::string_view tag);  // throws on unknown tags

/// Sp(2m), SO(2m) or SO(2m+1) with its dimension data.
struct GroupSpec {
    GroupKind kind = GroupKind::SpEven;
    int m = 1;

    static GroupSpec make(GroupKind kind, int m);

    int rank() const { return kind == GroupKind::SOOdd ? 2 * m + 1 : 2 * m; }
    int dim_group() const { return kind == GroupKind::SOEven ? m * (2 * m - 1) : m * (2 * m + 1); }
    int dim_borel() const { return kind == GroupKind::SOEven ? m * m : m * m + m; }
    int dim_flag_variety() const { return dim_group() - dim_borel(); }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class FormKind { Symplectic, Symmetric };

/// Invertible constant Gram matrix, skew for symplectic and symmetric for
/// orthogonal forms.
class GramForm {
public:
    static GramForm make(RatMatrix matrix, FormKind kind);
    /// Split models: J = [[0, I], [-I, 0]]; [[0, I], [I, 0]]; [[0, I, 0], [I, 0, 0], [0, 0, 1]].
    static GramForm split(const GroupSpec& group);

    const RatMatrix& matrix() const { return matrix_; }
    FormKind kind() const { return kind_; }
    std::size_t size() const { return matrix_.rows(); }

    friend bool operator==(const GramForm&, const GramForm&) = default;

private:
    GramForm(RatMatrix m, FormKind k) : matrix_(std::move(m)), kind_(k) {}

    RatMatrix matrix_;
    FormKind kind_;
};

FormKind form_kind_for(GroupKind kind);

/// A Higgs field in the affine chart: matrix of rational functions in t whose
/// poles are simple and sit at the marked points.
class HiggsField {
public:
    static HiggsField make(GroupSpec group, GramForm gram, FuncMatrix matrix, std::vector<Rational> marked_points);
    /// Same, with the split Gram form of the group.
    static HiggsField make(GroupSpec group, FuncMatrix matrix, std::vector<Rational> marked_points);

    const GroupSpec& group() const { return group_; }
    const GramForm& gram() const { return gram_; }
    const FuncMatrix& matrix() const { return matrix_; }
    const std::vector<Rational>& marked_points() const { return marked_; }
    /// d(t) = prod (t - a_k).
    UniPoly marked_divisor() const;

    friend bool operator==(const HiggsField&, const HiggsField&) = default;

private:
    HiggsField(GroupSpec g, GramForm b, FuncMatrix phi, std::vector<Rational> pts)
        : group_(g), gram_(std::move(b)), matrix_(std::move(phi)), marked_(std::move(pts)) {}

    GroupSpec group_;
    GramForm gram_;
    FuncMatrix matrix_;
    std::vector<Rational> marked_;
};

/// Coefficients of det(x I - Phi) = x^r + s_1 x^(r-1) + ... + s_r.
struct CharData {
    std::vector<RationalFunction> s;  // s[0] = s_1

    int degree() const { return static_cast<int>(s.size()); }
    const RationalFunction& coefficient(int i) const { return s.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const CharData&, const CharData&) = default;
};

FuncMatrix to_func_matrix(const RatMatrix& m);

/// Phi^T B + B Phi == 0 identically.
bool check_lie_membership(const FuncMatrix& phi, const RatMatrix& gram);
bool check_lie_membership(const FuncMatrix& phi, const FuncMatrix& gram);
bool check_lie_membership(const RatMatrix& phi, const RatMatrix& gram);

/// Common-denominator scaling, Berkowitz on the polynomial matrix, then
/// s_i = c_i / L^i.
CharData char_poly(const FuncMatrix& phi);

struct ParityVerdict {
    bool pass = false;
    int first_offending = 0;  // coefficient index on failure
    /// Even polynomial x^(2m) + e[0] x^(2m-2) + ... + e[m-1]: the char poly
    /// itself for Sp/SO(2m), the cofactor of x for SO(2m+1).
    std::vector<RationalFunction> even_part;
};

ParityVerdict parity_classify(const CharData& c, const GroupSpec& group);

struct PfaffianSquareVerdict {
    bool pass = false;
    RationalFunction pfaffian;  // Pf(B Phi)
    RationalFunction top_coefficient;  // s_{2m}
};

/// s_{2m} == (-1)^m Pf(B Phi)^2 for SO(2m); (-1)^m = det B for the split form.
PfaffianSquareVerdict pfaffian_square_check(const HiggsField& phi);

/// lim (t - a) Phi(t), for a marked point a.
RatMatrix residue_at(const HiggsField& phi, const Rational& a);

struct StrongParabolicVerdict {
    struct ResidueWitness {
        Rational point;
        RatMatrix residue;
    };
    struct PoleWitness {
        Rational point;
        int index;       // i of s_i
        int pole_order;  // > i - 1
    };

    bool pass = true;
    std::vector<ResidueWitness> non_nilpotent_residues;
    std::vector<PoleWitness> pole_violations;
};

StrongParabolicVerdict strong_parabolic_check(const HiggsField& phi);

/// Q = (I - A)(I + A)^-1, which satisfies Q^T B Q = B for A in the Lie
/// algebra of B. Throws "Cayley pole" when I + A is singular.
RatMatrix cayley_group_element(const RatMatrix& a, const GramForm& gram);

}  // namespace hx
