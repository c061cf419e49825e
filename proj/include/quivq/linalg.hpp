#pragma once

#include <optional>
#include <vector>

#include "quivq/errors.hpp"
#include "quivq/matrix.hpp"

namespace quivq {

/// Reduced row echelon form by exact Gaussian elimination, first nonzero pivot.
template <class T>
struct Echelon {
    Matrix<T> rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
    Echelon<T> e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
            }
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rref = std::move(m);
    return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) { return row_reduce(m).pivots.size(); }

/// Basis of the right null space, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
    auto e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Kernel basis packed as the columns of a matrix (cols() x dim ker).
template <class T>
Matrix<T> kernel_matrix(const Matrix<T>& m) { return from_columns(m.cols(), kernel(m)); }

/// Some solution x of a*x = b (free variables set to zero), or nullopt if inconsistent.
template <class T>
std::optional<Matrix<T>> try_solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    auto e = row_reduce(hstack(a, b));
    Matrix<T> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.rref(r, a.cols() + j);
    }
    return x;
}

/// As try_solve but throws DomainError("NoSolution") when inconsistent.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    auto x = try_solve(a, b);
    if (!x) throw DomainError("NoSolution", "inconsistent linear system");
    return *x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: not square");
    if (a.rows() == 0) return a;
    auto e = row_reduce(hstack(a, Matrix<T>::identity(a.rows())));
    if (e.pivots.size() < a.rows() || e.pivots.back() >= a.cols())
        throw DomainError("NotInvertible", "singular matrix");
    return e.rref.block(0, a.cols(), a.rows(), a.rows());
}

template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: not square");
    T det(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t p = col;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) return T(0);
        if (p != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        T inv = T(1) / m(col, col);
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, col))) continue;
            T f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// Basis (as columns) of the column space, taken from the pivot columns of m.
template <class T>
Matrix<T> column_space(const Matrix<T>& m) {
    auto e = row_reduce(m);
    Matrix<T> out(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, e.pivots[k]);
    return out;
}

/// Intersection of the column spans of a and b, as a basis matrix.
template <class T>
Matrix<T> intersect_spans(const Matrix<T>& a, const Matrix<T>& b) {
    auto ker = kernel(hstack(a, -b));
    std::vector<std::vector<T>> vecs;
    for (const auto& k : ker) {
        std::vector<T> v(a.rows(), T(0));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) v[i] += a(i, j) * k[j];
        vecs.push_back(std::move(v));
    }
    return column_space(from_columns(a.rows(), vecs));
}

}  // namespace quivq
