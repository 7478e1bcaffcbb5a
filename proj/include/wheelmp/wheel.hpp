#pragma once

#include "wheelmp/circulant.hpp"
#include "wheelmp/dense_matrix.hpp"
#include "wheelmp/errors.hpp"

namespace wheelmp {

/// The wheel graph on n >= 4 vertices: a hub joined to every vertex of an
/// (n-1)-cycle.
///
/// Labeling is fixed: vertex 1 is the hub, rim vertices 2..n run in cyclic
/// order. Edges e_1..e_{n-1} are the spokes (hub, i+1) in rim order; edges
/// e_n..e_{2n-2} are the rim edges 2-3, 3-4, ..., (n-1)-n, n-2. Under the
/// cyclic orientation each rim edge points from its lower rim index to the
/// next, the last one closing the cycle from vertex n back to vertex 2, and
/// spokes point hub to rim.
class WheelSpec {
public:
    explicit WheelSpec(int n) : n_(n) {
        if (n < 4) throw DomainError("wheel graph needs n >= 4 vertices, got " + std::to_string(n));
    }

    int vertices() const { return n_; }
    int edges() const { return 2 * n_ - 2; }
    int rim_order() const { return n_ - 1; }

private:
    int n_;
};

/// Rim-cycle incidence circulant of order k: circ(1, 0, ..., 0, last) with
/// last = +1 (unoriented) or -1 (cyclically oriented).
Circulant rim_cycle_incidence(int k, bool oriented);

/// Vertex-edge incidence matrix, n x (2n-2): hub row (1...1 | 0...0) over
/// (I | C) with C = circ(1, 0, ..., 0, 1).
DenseMatrix incidence_matrix(const WheelSpec& spec);

/// Oriented incidence matrix, n x (2n-2): hub row (1...1 | 0...0) over
/// (-I | C) with C = circ(1, 0, ..., 0, -1). Tails carry +1, heads -1.
DenseMatrix oriented_incidence_matrix(const WheelSpec& spec);

/// Signless Laplacian D + A, equal to M M^T: hub block n-1 bordered by ones
/// over circ(3, 1, 0, ..., 0, 1).
DenseMatrix signless_laplacian_matrix(const WheelSpec& spec);

/// Laplacian D - A, equal to N N^T: hub block n-1 bordered by minus ones
/// over circ(3, -1, 0, ..., 0, -1).
DenseMatrix laplacian_matrix(const WheelSpec& spec);

}  // namespace wheelmp
