#pragma once

#include <optional>
#include <string>

#include "wheelmp/circulant.hpp"
#include "wheelmp/dense_matrix.hpp"
#include "wheelmp/wheel.hpp"

namespace wheelmp {

enum class MatrixKind { incidence, oriented, signless_laplacian, laplacian };

/// How a pseudoinverse gets computed. The block route inverts the rim
/// circulant and assembles the theorem's block display; the entrywise route
/// evaluates the O(n) generator formulas in Q(sqrt(5)) and never inverts a
/// matrix. Auto picks entrywise when available (n >= 5), block otherwise.
enum class Route { block, entrywise, automatic };

std::string to_string(MatrixKind kind);
std::string to_string(Route route);
std::optional<MatrixKind> matrix_kind_from_string(const std::string& s);
std::optional<Route> route_from_string(const std::string& s);

/// Builds the base matrix of the given kind for the wheel on n vertices.
DenseMatrix build_matrix(MatrixKind kind, int n);

/// A computed Moore-Penrose inverse together with the circulant generators
/// it was assembled from. x_gen is always a symmetric circulant; y_gen is
/// present only for the two incidence kinds.
struct PinvBundle {
    MatrixKind kind;
    int n = 0;
    Route route = Route::block;  // the route that actually ran
    DenseMatrix matrix;
    Circulant x_gen;
    std::optional<Circulant> y_gen;
};

/// Generators of the X and Y blocks of one incidence-kind pseudoinverse.
struct GeneratorPair {
    Circulant x;
    Circulant y;
};

// X = 2 (C C^T + I)^{-1} ((n-1) I - J) and Y = J + C^T X for the unoriented
// rim circulant C, computed with circulant algebra.
GeneratorPair incidence_generators_block(int n);

// The same X and Y via the explicit b_j / d_j formulas in Q(sqrt(5)),
// without any matrix inversion. Requires n >= 5.
GeneratorPair incidence_generators_entrywise(int n);

// X = (C C^T + I)^{-1} (J - n I) and Y = -C^T X for the oriented rim
// circulant C.
GeneratorPair oriented_generators_block(int n);

// The oriented X and Y via their explicit generator formulas. Requires n >= 5.
GeneratorPair oriented_generators_entrywise(int n);

/// M^+ = 1/(2(n-1)) (2*1 | X ; -1 | Y), a (2n-2) x n matrix with M M^+ = I.
PinvBundle pinv_incidence(int n);
PinvBundle pinv_incidence_entrywise(int n);

/// Q^+ = 1/(4(n-1)) (5 | -1^T ; -1 | J + 2X) with the incidence-kind X.
PinvBundle pinv_signless_laplacian(int n, Route route = Route::automatic);

/// N^+ = 1/n (1 | X ; 0 | Y) with N N^+ = I - J/n.
PinvBundle pinv_oriented(int n);
PinvBundle pinv_oriented_entrywise(int n);

/// L^+ = 1/n^2 (n-1 | -1^T ; -1 | -J - nX) with the oriented-kind X.
PinvBundle pinv_laplacian(int n, Route route = Route::automatic);

/// Route-dispatching entry point used by the CLI.
PinvBundle pseudoinverse(MatrixKind kind, int n, Route route = Route::automatic);

}  // namespace wheelmp
