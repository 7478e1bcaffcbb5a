#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelmp/dense_matrix.hpp"
#include "wheelmp/errors.hpp"
#include "wheelmp/rational.hpp"

namespace wheelmp {

/// Circulant matrix of order k over the rationals, stored as its generator
/// (first row). Row i of the realized matrix is the generator cyclically
/// right-shifted i places: entry (i, j) = generator[(j - i) mod k].
class Circulant {
public:
    explicit Circulant(std::vector<Rational> generator);

    static Circulant identity(int order);
    static Circulant all_ones(int order);
    /// circ(a, b, 0, ..., 0, c); overlapping positions accumulate, so
    /// order 3 yields (a, b, c) and order 2 yields (a, b + c).
    static Circulant tridiagonal(const Rational& a, const Rational& b, const Rational& c,
                                 int order);

    int order() const { return static_cast<int>(gen_.size()); }
    const std::vector<Rational>& generator() const { return gen_; }

    DenseMatrix realize() const;
    Circulant transpose() const;
    Rational row_sum() const;
    /// Palindromic after index 0 (gen[j] == gen[k-j]), i.e. the realized
    /// matrix is symmetric.
    bool is_symmetric() const;

    Circulant& operator+=(const Circulant& o);
    Circulant& operator-=(const Circulant& o);
    Circulant& operator*=(const Rational& s);

    friend Circulant operator+(Circulant a, const Circulant& b) { a += b; return a; }
    friend Circulant operator-(Circulant a, const Circulant& b) { a -= b; return a; }
    friend Circulant operator*(Circulant a, const Rational& s) { a *= s; return a; }
    friend Circulant operator*(const Rational& s, Circulant a) { a *= s; return a; }
    /// Cyclic convolution of the generators; commutative.
    friend Circulant operator*(const Circulant& a, const Circulant& b);

    friend bool operator==(const Circulant& a, const Circulant& b) { return a.gen_ == b.gen_; }
    friend bool operator!=(const Circulant& a, const Circulant& b) { return !(a == b); }

private:
    std::vector<Rational> gen_;
};

/// The circulant circ(a, b, 0, ..., 0, c): a on the diagonal, b on the
/// superdiagonal (wrapping), c on the subdiagonal (wrapping).
struct TridiagCircSpec {
    Rational diag;   // a
    Rational super;  // b
    Rational sub;    // c
    int order = 0;   // k
};

/// Reads the tridiagonal pattern off a generator when the order is at least
/// 4 and all interior entries are zero. Orders <= 3 have no forced-zero
/// interior and are not reported.
std::optional<TridiagCircSpec> tridiagonal_pattern(const Circulant& c);

/// Names the first violated hypothesis of the closed-form inverse for
/// circ(a, b, 0, ..., 0, c), or nullopt when all hold:
/// order > 3, b != 0, c != 0, a^2 > 4bc, a^2 - 4bc not a perfect square,
/// a + b + c != 0, and not (order even and a = b + c).
std::optional<std::string> searle_inapplicable_reason(const TridiagCircSpec& spec);

/// Searle's closed-form inverse of circ(a, b, 0, ..., 0, c): generator
///   a_j = z1*z2 / (b*(z1 - z2)) * (z1^j/(1 - z1^k) - z2^j/(1 - z2^k)),
/// with z1, z2 = (-a +- sqrt(a^2 - 4bc)) / (2c), evaluated exactly in
/// Q(sqrt(a^2 - 4bc)). Throws HypothesisViolation naming the failed
/// hypothesis when the formula does not apply.
Circulant inverse_searle(const TridiagCircSpec& spec);

/// Exact inverse by Gauss-Jordan elimination on the realized matrix, read
/// back as a circulant from row 0 after checking that every row is the
/// expected cyclic shift. Throws SingularMatrix when not invertible.
Circulant inverse_gauss(const Circulant& c);

/// Inverse dispatcher: uses the Searle closed form when the generator is
/// tridiagonal-circulant and every hypothesis holds, otherwise falls back
/// to Gaussian elimination (covering order <= 3, c = 0, and perfect-square
/// discriminants).
Circulant inverse(const Circulant& c);

}  // namespace wheelmp
