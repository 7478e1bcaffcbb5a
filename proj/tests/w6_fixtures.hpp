#pragma once

// Known exact values for the wheel on 6 vertices, used as golden data by the
// unit and acceptance suites. The pseudoinverses are stored as integer grids
// over a common denominator.

#include <array>

#include "wheelmp/dense_matrix.hpp"

namespace w6 {

using wheelmp::DenseMatrix;
using wheelmp::Rational;

template <std::size_t R, std::size_t C>
DenseMatrix from_grid(const std::array<std::array<long, C>, R>& grid, long denominator = 1) {
    DenseMatrix m(static_cast<int>(R), static_cast<int>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = Rational(grid[i][j], denominator);
    return m;
}

inline DenseMatrix incidence() {
    return from_grid<6, 10>({{{1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                              {1, 0, 0, 0, 0, 1, 0, 0, 0, 1},
                              {0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
                              {0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
                              {0, 0, 0, 0, 1, 0, 0, 0, 1, 1}}});
}

inline DenseMatrix oriented() {
    return from_grid<6, 10>({{{1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                              {-1, 0, 0, 0, 0, 1, 0, 0, 0, -1},
                              {0, -1, 0, 0, 0, -1, 1, 0, 0, 0},
                              {0, 0, -1, 0, 0, 0, -1, 1, 0, 0},
                              {0, 0, 0, -1, 0, 0, 0, -1, 1, 0},
                              {0, 0, 0, 0, -1, 0, 0, 0, -1, 1}}});
}

inline DenseMatrix signless_laplacian() {
    return from_grid<6, 6>({{{5, 1, 1, 1, 1, 1},
                             {1, 3, 1, 0, 0, 1},
                             {1, 1, 3, 1, 0, 0},
                             {1, 0, 1, 3, 1, 0},
                             {1, 0, 0, 1, 3, 1},
                             {1, 1, 0, 0, 1, 3}}});
}

inline DenseMatrix laplacian() {
    return from_grid<6, 6>({{{5, -1, -1, -1, -1, -1},
                             {-1, 3, -1, 0, 0, -1},
                             {-1, -1, 3, -1, 0, 0},
                             {-1, 0, -1, 3, -1, 0},
                             {-1, 0, 0, -1, 3, -1},
                             {-1, -1, 0, 0, -1, 3}}});
}

// Pseudoinverse of the incidence matrix, common denominator 10.
inline DenseMatrix incidence_pinv() {
    return from_grid<10, 6>({{{2, 4, -2, 0, 0, -2},
                              {2, -2, 4, -2, 0, 0},
                              {2, 0, -2, 4, -2, 0},
                              {2, 0, 0, -2, 4, -2},
                              {2, -2, 0, 0, -2, 4},
                              {-1, 3, 3, -1, 1, -1},
                              {-1, -1, 3, 3, -1, 1},
                              {-1, 1, -1, 3, 3, -1},
                              {-1, -1, 1, -1, 3, 3},
                              {-1, 3, -1, 1, -1, 3}}},
                            10);
}

// Pseudoinverse of the signless Laplacian, common denominator 20.
inline DenseMatrix signless_laplacian_pinv() {
    return from_grid<6, 6>({{{5, -1, -1, -1, -1, -1},
                             {-1, 9, -3, 1, 1, -3},
                             {-1, -3, 9, -3, 1, 1},
                             {-1, 1, -3, 9, -3, 1},
                             {-1, 1, 1, -3, 9, -3},
                             {-1, -3, 1, 1, -3, 9}}},
                            20);
}

// Pseudoinverse of the oriented incidence matrix, common denominator 66.
inline DenseMatrix oriented_pinv() {
    return from_grid<10, 6>({{{11, -19, -1, 5, 5, -1},
                              {11, -1, -19, -1, 5, 5},
                              {11, 5, -1, -19, -1, 5},
                              {11, 5, 5, -1, -19, -1},
                              {11, -1, 5, 5, -1, -19},
                              {0, 18, -18, -6, 0, 6},
                              {0, 6, 18, -18, -6, 0},
                              {0, 0, 6, 18, -18, -6},
                              {0, -6, 0, 6, 18, -18},
                              {0, -18, -6, 0, 6, 18}}},
                            66);
}

// Pseudoinverse of the Laplacian, common denominator 396.
inline DenseMatrix laplacian_pinv() {
    return from_grid<6, 6>({{{55, -11, -11, -11, -11, -11},
                             {-11, 103, -5, -41, -41, -5},
                             {-11, -5, 103, -5, -41, -41},
                             {-11, -41, -5, 103, -5, -41},
                             {-11, -41, -41, -5, 103, -5},
                             {-11, -5, -41, -41, -5, 103}}},
                            396);
}

}  // namespace w6
