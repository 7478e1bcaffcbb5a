#pragma once

#include <cassert>
#include <vector>

#include "wheelmp/errors.hpp"
#include "wheelmp/rational.hpp"

namespace wheelmp {

/// Row-major dense matrix of exact rationals.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static DenseMatrix identity(int k) {
        DenseMatrix m(k, k);
        for (int i = 0; i < k; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static DenseMatrix constant(int rows, int cols, const Rational& value) {
        DenseMatrix m(rows, cols);
        for (auto& e : m.entries_) e = value;
        return m;
    }

    /// The all-ones square matrix of order k.
    static DenseMatrix ones(int k) { return constant(k, k, Rational(1)); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Rational& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Rational row_sum(int i) const {
        Rational s;
        for (int j = 0; j < cols_; ++j) s += at(i, j);
        return s;
    }

    Rational col_sum(int j) const {
        Rational s;
        for (int i = 0; i < rows_; ++i) s += at(i, j);
        return s;
    }

    DenseMatrix& operator+=(const DenseMatrix& o);
    DenseMatrix& operator-=(const DenseMatrix& o);
    DenseMatrix& operator*=(const Rational& s);

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { a += b; return a; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { a -= b; return a; }
    friend DenseMatrix operator*(DenseMatrix a, const Rational& s) { a *= s; return a; }
    friend DenseMatrix operator*(const Rational& s, DenseMatrix a) { a *= s; return a; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

}  // namespace wheelmp
