#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "quivq/cyclotomic.hpp"
#include "quivq/jet.hpp"
#include "quivq/rational.hpp"

namespace quivq {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix scalar(std::size_t n, const T& s) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix column(const std::vector<T>& v) { return Matrix(v.size(), 1, v); }

    [[nodiscard]] std::size_t rows() const { return r_; }
    [[nodiscard]] std::size_t cols() const { return c_; }
    [[nodiscard]] const std::vector<T>& entries() const { return a_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : a_) {
            if (!quivq::is_zero(x)) return false;
        }
        return true;
    }
    [[nodiscard]] bool is_square() const { return r_ == c_; }

    [[nodiscard]] T trace() const {
        if (!is_square()) throw std::invalid_argument("Matrix::trace: not square");
        T s(0);
        for (std::size_t i = 0; i < r_; ++i) s += (*this)(i, i);
        return s;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > r_ || c0 + nc > c_) throw std::out_of_range("Matrix::block");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw std::out_of_range("Matrix::set_block");
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
    [[nodiscard]] std::vector<T> col(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (quivq::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.r_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.c_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
        }
        return os << "]";
    }

private:
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<T> a_;

    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }
};

/// Horizontal concatenation [a | b].
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

/// Vertical concatenation.
template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

/// Matrix whose columns are the given vectors (all of length rows).
template <class T>
Matrix<T> from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix<T> m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

template <class T>
Matrix<Jet<T>> make_jet(const Matrix<T>& value, const Matrix<T>& derivative) {
    Matrix<Jet<T>> m(value.rows(), value.cols());
    for (std::size_t i = 0; i < value.rows(); ++i)
        for (std::size_t j = 0; j < value.cols(); ++j) m(i, j) = Jet<T>(value(i, j), derivative(i, j));
    return m;
}

template <class T>
Matrix<T> jet_value(const Matrix<Jet<T>>& m) {
    Matrix<T> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).value();
    return r;
}

template <class T>
Matrix<T> jet_derivative(const Matrix<Jet<T>>& m) {
    Matrix<T> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).derivative();
    return r;
}

template <class T>
Matrix<CycScalar> to_cyc(const Matrix<T>& m) {
    Matrix<CycScalar> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = CycScalar(m(i, j));
    return r;
}

using MatQ = Matrix<Rational>;
using MatC = Matrix<CycScalar>;
using MatJ = Matrix<JetQ>;

}  // namespace quivq
