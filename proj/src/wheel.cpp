#include "wheelmp/wheel.hpp"

namespace wheelmp {

Circulant rim_cycle_incidence(int k, bool oriented) {
    return Circulant::tridiagonal(Rational(1), Rational(0), Rational(oriented ? -1 : 1), k);
}

namespace {

// Shared layout of both incidence matrices: hub row, then (spoke_sign*I | C).
DenseMatrix incidence_layout(const WheelSpec& spec, int spoke_sign, bool oriented) {
    const int n = spec.vertices();
    const int k = spec.rim_order();
    DenseMatrix m(n, spec.edges());
    for (int j = 0; j < k; ++j) m.at(0, j) = Rational(1);
    DenseMatrix rim = rim_cycle_incidence(k, oriented).realize();
    for (int i = 0; i < k; ++i) {
        m.at(i + 1, i) = Rational(spoke_sign);
        for (int t = 0; t < k; ++t) m.at(i + 1, k + t) = rim.at(i, t);
    }
    return m;
}

// Shared layout of both Laplacians: (n-1 | s*1^T ; s*1 | circ(3, s, 0, ..., 0, s)).
DenseMatrix laplacian_layout(const WheelSpec& spec, int rim_sign) {
    const int n = spec.vertices();
    const int k = spec.rim_order();
    DenseMatrix m(n, n);
    m.at(0, 0) = Rational(n - 1);
    for (int i = 1; i < n; ++i) {
        m.at(0, i) = Rational(rim_sign);
        m.at(i, 0) = Rational(rim_sign);
    }
    DenseMatrix rim =
        Circulant::tridiagonal(Rational(3), Rational(rim_sign), Rational(rim_sign), k).realize();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i + 1, j + 1) = rim.at(i, j);
    return m;
}

}  // namespace

DenseMatrix incidence_matrix(const WheelSpec& spec) {
    return incidence_layout(spec, +1, false);
}

DenseMatrix oriented_incidence_matrix(const WheelSpec& spec) {
    return incidence_layout(spec, -1, true);
}

DenseMatrix signless_laplacian_matrix(const WheelSpec& spec) {
    return laplacian_layout(spec, +1);
}

DenseMatrix laplacian_matrix(const WheelSpec& spec) {
    return laplacian_layout(spec, -1);
}

}  // namespace wheelmp
