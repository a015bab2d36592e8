#ifndef WCORE_MATRIX_HPP
#define WCORE_MATRIX_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcore/rational.hpp"

namespace wcore {

/// Dense matrix over the exact rationals, row-major storage.
///
/// Equality is entrywise exact equality. All operations return fresh values;
/// nothing is mutated in place by the free functions below, so matrices can be
/// shared freely across threads. Zero-dimensional matrices are permitted (they
/// arise as bases of trivial subspaces) and behave per the usual conventions.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
        e_.assign(static_cast<size_t>(rows) * cols, Rational(0));
    }
    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        e_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(int k) {
        Matrix m(k, k);
        for (int i = 0; i < k; ++i) m(i, i) = Rational(1);
        return m;
    }
    static Matrix zeros(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(int r, int c) const { return e_[idx(r, c)]; }
    Rational& operator()(int r, int c) { return e_[idx(r, c)]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (!is_square()) return false;
        return *this == identity(rows_);
    }
    bool is_symmetric() const;

    Matrix transpose() const;

private:
    size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("Matrix: index out of range");
        return static_cast<size_t>(r) * cols_ + c;
    }

    int rows_, cols_;
    std::vector<Rational> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

/// Involution of the ring M_k(Q): plain transpose.
inline Matrix adjoint(const Matrix& a) { return a.transpose(); }

/// a^n for n >= 0; a must be square (a^0 = I).
Matrix matrix_power(const Matrix& a, int n);

/// [a | b], matching row counts.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b], matching column counts.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Columns of `a` selected by `which`, in the given order.
Matrix select_columns(const Matrix& a, const std::vector<int>& which);

std::string to_pretty(const Matrix& a);  // single-line debug rendering

}  // namespace wcore

#endif
