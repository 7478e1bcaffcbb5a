#include "wheelmp/dense_matrix.hpp"

#include <string>

namespace wheelmp {

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    }
}

}  // namespace

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
    require_same_shape(*this, o, "matrix addition");
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) += o.at(i, j);
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
    require_same_shape(*this, o, "matrix subtraction");
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) -= o.at(i, j);
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Rational& s) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) *= s;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    }
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

}  // namespace wheelmp
