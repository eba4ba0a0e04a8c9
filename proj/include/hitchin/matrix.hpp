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
#include <optional>
#include <utility>
#include <vector>

#include "hitchin/error.hpp"
#include "hitchin/ratfunc.hpp"

namespace hx {

// Ring hooks used by the generic algorithms below.
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }
inline RationalFunction exact_quotient(const RationalFunction& a, const RationalFunction& b) { return a / b; }

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            require(rows[i].size() == c, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!hx::is_zero(x)) return false;
        }
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix size mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix size mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = -x;
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "matrix size mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (hx::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = s * x;
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<UniPoly>;
using FuncMatrix = Matrix<RationalFunction>;

template <class T>
Matrix<T> matrix_power(const Matrix<T>& a, unsigned k) {
    Matrix<T> result = Matrix<T>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) result = result * a;
    return result;
}

template <class T>
bool is_antisymmetric(const Matrix<T>& a) {
    return a.is_square() && a.transpose() == -a;
}

/// Fraction-free (Bareiss) determinant over an integral domain. Every
/// division is exact; row swaps track the sign.
template <class T>
T bareiss_determinant(Matrix<T> a) {
    require(a.is_square(), "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a(p, k))) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = exact_quotient(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            }
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return negate ? T(-det) : det;
}

/// Coefficients (1, c_1, ..., c_n) of det(x I - A) = sum c_i x^(n-i), by the
/// division-free Berkowitz recursion.
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a) {
    require(a.is_square(), "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return {T(1)};
    std::vector<T> vec{T(1), T(-a(n - 1, n - 1))};
    for (std::size_t k = n - 1; k-- > 0;) {
        const std::size_t s = n - 1 - k;  // size of the trailing block M
        // col = (1, -a_kk, -R S, -R M S, ..., -R M^(s-1) S)
        std::vector<T> col(s + 2, T(0));
        col[0] = T(1);
        col[1] = -a(k, k);
        std::vector<T> v(s);  // M^j S
        for (std::size_t i = 0; i < s; ++i) v[i] = a(k + 1 + i, k);
        for (std::size_t j = 0; j < s; ++j) {
            T dot(0);
            for (std::size_t i = 0; i < s; ++i) {
                if (!is_zero(v[i])) dot += a(k, k + 1 + i) * v[i];
            }
            col[j + 2] = -dot;
            if (j + 1 < s) {
                std::vector<T> next(s, T(0));
                for (std::size_t r = 0; r < s; ++r)
                    for (std::size_t c = 0; c < s; ++c) {
                        if (!is_zero(v[c])) next[r] += a(k + 1 + r, k + 1 + c) * v[c];
                    }
                v = std::move(next);
            }
        }
        std::vector<T> out(s + 2, T(0));
        for (std::size_t i = 0; i < s + 2; ++i)
            for (std::size_t j = 0; j <= i && j < vec.size(); ++j) {
                if (!is_zero(col[i - j]) && !is_zero(vec[j])) out[i] += col[i - j] * vec[j];
            }
        vec = std::move(out);
    }
    return vec;
}

/// Gauss-Jordan inverse over a field; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    require(a.is_square(), "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> m = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return std::nullopt;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        }
        const T piv = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = m(c, j) / piv;
            inv(c, j) = inv(c, j) / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Basis of the right null space over a field, one vector per free column
/// of the reduced row echelon form.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a) {
    Matrix<T> m = a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const T piv = m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) / piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        bool is_pivot = false;
        for (auto pc : pivot_cols) is_pivot = is_pivot || pc == free;
        if (is_pivot) continue;
        std::vector<T> v(cols, T(0));
        v[free] = T(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Pfaffian of an antisymmetric matrix over a field, normalized by
/// Pf([[0, a], [-a, 0]]) = a. Eliminates one 2x2 block at a time:
/// Pf(A) = a_12 * Pf(S) with S the Schur complement of the leading block.
template <class T>
T pfaffian(const Matrix<T>& a) {
    require(a.is_square(), "pfaffian of a non-square matrix");
    require(a.rows() % 2 == 0, "pfaffian of an odd-sized matrix");
    require(is_antisymmetric(a), "pfaffian of a non-antisymmetric matrix");
    Matrix<T> m = a;
    std::size_t n = m.rows();
    T result(1);
    while (n > 0) {
        std::size_t p = 1;
        while (p < n && is_zero(m(0, p))) ++p;
        if (p == n) return T(0);
        if (p != 1) {
            // Simultaneous row/column swap flips the sign.
            for (std::size_t j = 0; j < n; ++j) std::swap(m(1, j), m(p, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, 1), m(i, p));
            result = -result;
        }
        const T a12 = m(0, 1);
        result = result * a12;
        Matrix<T> s(n - 2, n - 2);
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                T v = m(i, j) + (m(1, i) * m(0, j) - m(0, i) * m(1, j)) / a12;
                s(i - 2, j - 2) = v;
                s(j - 2, i - 2) = -v;
            }
        m = std::move(s);
        n -= 2;
    }
    return result;
}

}  // namespace hx
