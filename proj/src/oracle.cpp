#include "wheelmp/oracle.hpp"

#include <string>
#include <utility>

#include "wheelmp/errors.hpp"

namespace wheelmp::oracle {

namespace {

struct Echelon {
    DenseMatrix mat;              // reduced row echelon form
    std::vector<int> pivot_cols;  // one per nonzero row, increasing
};

// Plain rational Gauss-Jordan to reduced row echelon form, pivoting on the
// first nonzero entry in column order.
Echelon reduced_row_echelon(DenseMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        Rational p = m.at(row, col);
        for (int j = col; j < cols; ++j) m.at(row, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

// Inverse of a square matrix via rref of the augmented (S | I).
DenseMatrix invert_square(const DenseMatrix& s) {
    const int k = s.rows();
    DenseMatrix aug(k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = s.at(i, j);
        aug.at(i, k + i) = Rational(1);
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    if (static_cast<int>(e.pivot_cols.size()) != k || (k > 0 && e.pivot_cols.back() != k - 1)) {
        throw SingularMatrix("matrix of order " + std::to_string(k) + " is singular");
    }
    DenseMatrix inv(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) inv.at(i, j) = e.mat.at(i, k + j);
    return inv;
}

}  // namespace

RankFactorization rank_factorize(const DenseMatrix& a) {
    Echelon e = reduced_row_echelon(a);
    const int r = static_cast<int>(e.pivot_cols.size());
    DenseMatrix left(a.rows(), r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < a.rows(); ++i) left.at(i, j) = a.at(i, e.pivot_cols[j]);
    DenseMatrix right(r, a.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < a.cols(); ++j) right.at(i, j) = e.mat.at(i, j);
    return {std::move(left), std::move(right), r};
}

int rank(const DenseMatrix& a) { return rank_factorize(a).rank; }

DenseMatrix pseudoinverse(const DenseMatrix& a) {
    RankFactorization f = rank_factorize(a);
    if (f.rank == 0) return DenseMatrix(a.cols(), a.rows());

    DenseMatrix rt = f.right.transpose();
    DenseMatrix lt = f.left.transpose();
    DenseMatrix h = rt * invert_square(f.right * rt) * invert_square(lt * f.left) * lt;

    if (!penrose_check(a, h).all()) {
        throw Error("internal: rank-factorization pseudoinverse failed its own check");
    }
    return h;
}

PenroseReport penrose_check(const DenseMatrix& a, const DenseMatrix& h) {
    if (h.rows() != a.cols() || h.cols() != a.rows()) {
        throw DimensionMismatch("penrose check: A is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " but H is " +
                                std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
    }
    DenseMatrix ah = a * h;
    DenseMatrix ha = h * a;
    PenroseReport report;
    report.aha = (ah * a == a);
    report.hah = (h * ah == h);
    report.ah_symmetric = ah.is_symmetric();
    report.ha_symmetric = ha.is_symmetric();
    return report;
}

}  // namespace wheelmp::oracle
