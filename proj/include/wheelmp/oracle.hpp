#pragma once

#include <vector>

#include "wheelmp/dense_matrix.hpp"

namespace wheelmp::oracle {

// Independent verification machinery. Everything here works from first
// principles on dense rational matrices (reduced row echelon form and rank
// factorization) and shares no code with the circulant closed forms it is
// used to check.

/// A = left * right with left of full column rank and right of full row rank.
struct RankFactorization {
    DenseMatrix left;   // m x r, the pivot columns of A
    DenseMatrix right;  // r x n, the nonzero rows of rref(A)
    int rank = 0;
};

/// Exact rank factorization via reduced row echelon form. The zero matrix
/// factors with rank 0 and empty factors.
RankFactorization rank_factorize(const DenseMatrix& a);

int rank(const DenseMatrix& a);

/// Exact Moore-Penrose inverse A+ = R^T (R R^T)^{-1} (L^T L)^{-1} L^T from
/// the rank factorization A = L R. The four defining equations are checked
/// on the result before it is returned.
DenseMatrix pseudoinverse(const DenseMatrix& a);

/// Which of the four Moore-Penrose equations hold for the pair (A, H):
/// AHA = A, HAH = H, (AH)^T = AH, (HA)^T = HA.
struct PenroseReport {
    bool aha = false;
    bool hah = false;
    bool ah_symmetric = false;
    bool ha_symmetric = false;

    bool all() const { return aha && hah && ah_symmetric && ha_symmetric; }
};

PenroseReport penrose_check(const DenseMatrix& a, const DenseMatrix& h);

}  // namespace wheelmp::oracle
