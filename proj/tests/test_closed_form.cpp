#include <doctest.h>

#include "w6_fixtures.hpp"
#include "wheelmp/closed_form.hpp"
#include "wheelmp/oracle.hpp"

using wheelmp::Circulant;
using wheelmp::DenseMatrix;
using wheelmp::DomainError;
using wheelmp::GeneratorPair;
using wheelmp::MatrixKind;
using wheelmp::PinvBundle;
using wheelmp::Rational;
using wheelmp::Route;

namespace {

Circulant circ(std::vector<Rational> g) { return Circulant(std::move(g)); }

constexpr MatrixKind kKinds[] = {MatrixKind::incidence, MatrixKind::oriented,
                                 MatrixKind::signless_laplacian, MatrixKind::laplacian};

}  // namespace

TEST_CASE("pseudoinverses of the wheel on 6 vertices") {
    CHECK(wheelmp::pinv_incidence(6).matrix == w6::incidence_pinv());
    CHECK(wheelmp::pinv_signless_laplacian(6, Route::block).matrix ==
          w6::signless_laplacian_pinv());
    CHECK(wheelmp::pinv_oriented(6).matrix == w6::oriented_pinv());
    CHECK(wheelmp::pinv_laplacian(6, Route::block).matrix == w6::laplacian_pinv());

    // hub column entries: 2/10 on spoke rows, 4/10 at the first X entry
    PinvBundle b = wheelmp::pinv_incidence(6);
    CHECK(b.matrix.at(0, 0) == Rational(1, 5));
    CHECK(b.matrix.at(0, 1) == Rational(2, 5));
}

TEST_CASE("entrywise generators at small n") {
    GeneratorPair inc = wheelmp::incidence_generators_entrywise(6);
    CHECK(inc.x == circ({Rational(4), Rational(-2), Rational(0), Rational(0), Rational(-2)}));
    CHECK(inc.y == circ({Rational(3), Rational(3), Rational(-1), Rational(1), Rational(-1)}));

    GeneratorPair ori = wheelmp::oriented_generators_entrywise(6);
    CHECK(ori.x == circ({Rational(-19, 11), Rational(-1, 11), Rational(5, 11), Rational(5, 11),
                         Rational(-1, 11)}));
    CHECK(ori.y == circ({Rational(18, 11), Rational(-18, 11), Rational(-6, 11), Rational(0),
                         Rational(6, 11)}));

    GeneratorPair inc5 = wheelmp::incidence_generators_entrywise(5);
    CHECK(inc5.x == circ({Rational(10, 3), Rational(-2), Rational(2, 3), Rational(-2)}));
}

TEST_CASE("entrywise route needs n >= 5") {
    CHECK_THROWS_WITH_AS(wheelmp::pinv_incidence_entrywise(4), doctest::Contains("n >= 5"),
                         DomainError);
    CHECK_THROWS_AS(wheelmp::pinv_oriented_entrywise(4), DomainError);
    CHECK_THROWS_AS(wheelmp::pinv_incidence_entrywise(3), DomainError);
    CHECK_THROWS_AS(wheelmp::pseudoinverse(MatrixKind::laplacian, 4, Route::entrywise),
                    DomainError);
}

TEST_CASE("wheel size is validated for every kind") {
    for (MatrixKind kind : kKinds) {
        CHECK_THROWS_AS(wheelmp::pseudoinverse(kind, 3), DomainError);
    }
}

TEST_CASE("the two routes produce identical bundles") {
    for (int n = 5; n <= 20; ++n) {
        for (MatrixKind kind : kKinds) {
            PinvBundle block = wheelmp::pseudoinverse(kind, n, Route::block);
            PinvBundle entry = wheelmp::pseudoinverse(kind, n, Route::entrywise);
            CHECK(block.matrix == entry.matrix);
            CHECK(block.x_gen == entry.x_gen);
            CHECK(block.y_gen == entry.y_gen);
        }
    }
}

TEST_CASE("automatic route selection") {
    CHECK(wheelmp::pseudoinverse(MatrixKind::incidence, 4).route == Route::block);
    CHECK(wheelmp::pseudoinverse(MatrixKind::incidence, 5).route == Route::entrywise);
    CHECK(wheelmp::pseudoinverse(MatrixKind::laplacian, 9).route == Route::entrywise);
}

TEST_CASE("closed forms agree with the rank-factorization pseudoinverse") {
    for (int n = 4; n <= 10; ++n) {
        for (MatrixKind kind : kKinds) {
            DenseMatrix base = wheelmp::build_matrix(kind, n);
            CHECK(wheelmp::pseudoinverse(kind, n).matrix == wheelmp::oracle::pseudoinverse(base));
        }
    }
}

TEST_CASE("X is a symmetric circulant for every kind") {
    for (int n = 4; n <= 12; ++n) {
        for (MatrixKind kind : kKinds) {
            CHECK(wheelmp::pseudoinverse(kind, n).x_gen.is_symmetric());
        }
    }
}

TEST_CASE("only the incidence kinds carry a Y generator") {
    CHECK(wheelmp::pinv_incidence(6).y_gen.has_value());
    CHECK(wheelmp::pinv_oriented(6).y_gen.has_value());
    CHECK_FALSE(wheelmp::pinv_signless_laplacian(6).y_gen.has_value());
    CHECK_FALSE(wheelmp::pinv_laplacian(6).y_gen.has_value());
}

TEST_CASE("hub rows of the square pseudoinverses") {
    for (int n = 4; n <= 16; ++n) {
        PinvBundle q = wheelmp::pinv_signless_laplacian(n);
        CHECK(q.matrix.at(0, 0) == Rational(5, 4 * (n - 1)));
        for (int j = 1; j < n; ++j) CHECK(q.matrix.at(0, j) == Rational(-1, 4 * (n - 1)));

        PinvBundle l = wheelmp::pinv_laplacian(n);
        CHECK(l.matrix.at(0, 0) == Rational(n - 1, static_cast<long>(n) * n));
        for (int j = 1; j < n; ++j) {
            CHECK(l.matrix.at(0, j) == Rational(-1, static_cast<long>(n) * n));
        }
        for (int i = 0; i < n; ++i) CHECK(l.matrix.row_sum(i) == Rational(0));
    }
}

TEST_CASE("square pseudoinverses equal the products of the tall ones") {
    for (int n = 4; n <= 10; ++n) {
        DenseMatrix mp = wheelmp::pinv_incidence(n).matrix;
        DenseMatrix np = wheelmp::pinv_oriented(n).matrix;
        CHECK(wheelmp::pinv_signless_laplacian(n).matrix == mp.transpose() * mp);
        CHECK(wheelmp::pinv_laplacian(n).matrix == np.transpose() * np);
    }
}
