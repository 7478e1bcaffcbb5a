#include <doctest.h>

#include "w6_fixtures.hpp"
#include "wheelmp/closed_form.hpp"
#include "wheelmp/io.hpp"

using wheelmp::Circulant;
using wheelmp::DenseMatrix;
using wheelmp::ParseError;
using wheelmp::PinvBundle;
using wheelmp::Rational;
using wheelmp::Render;
using wheelmp::circulant_from_json;
using wheelmp::matrix_from_csv;
using wheelmp::matrix_from_json;

TEST_CASE("csv round trip") {
    DenseMatrix m = w6::incidence_pinv();
    std::string csv = to_csv(m);
    CHECK(matrix_from_csv(csv) == m);
    // first line of the grid: 2/10 reduced, then 4/10, ...
    CHECK(csv.substr(0, csv.find('\n')) == "1/5,2/5,-1/5,0,0,-1/5");

    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(matrix_from_csv(""), ParseError);
    CHECK_THROWS_AS(matrix_from_csv("1,x\n"), ParseError);
}

TEST_CASE("matrix json round trip") {
    DenseMatrix m = w6::laplacian_pinv();
    nlohmann::json j = to_json(m);
    CHECK(j["rows"] == 6);
    CHECK(j["cols"] == 6);
    CHECK(matrix_from_json(j) == m);
}

TEST_CASE("csv and json emissions agree entrywise") {
    DenseMatrix m = w6::oriented_pinv();
    CHECK(matrix_from_csv(to_csv(m)) == matrix_from_json(to_json(m)));
}

TEST_CASE("circulant json round trip") {
    Circulant c(std::vector<Rational>{Rational(7, 15), Rational(-1, 5), Rational(2, 15),
                                      Rational(-1, 5)});
    nlohmann::json j = to_json(c);
    CHECK(j["order"] == 4);
    CHECK(circulant_from_json(j) == c);
}

TEST_CASE("penrose report json") {
    wheelmp::oracle::PenroseReport rep{true, true, false, true};
    nlohmann::json j = wheelmp::to_json(rep);
    CHECK(j == nlohmann::json({{"AHA", true}, {"HAH", true}, {"AH_sym", false}, {"HA_sym", true}}));
}

TEST_CASE("bundle json carries kind, route and generators") {
    PinvBundle b = wheelmp::pinv_incidence_entrywise(6);
    nlohmann::json j = to_json(b);
    CHECK(j["kind"] == "incidence");
    CHECK(j["n"] == 6);
    CHECK(j["route"] == "entrywise");
    CHECK(matrix_from_json(j["matrix"]) == b.matrix);
    CHECK(circulant_from_json(j["x_generator"]) == b.x_gen);
    CHECK(circulant_from_json(j["y_generator"]) == *b.y_gen);

    nlohmann::json q = to_json(wheelmp::pinv_signless_laplacian(6));
    CHECK(q["y_generator"].is_null());
}

TEST_CASE("latex factors out the common denominator") {
    std::string mp = to_latex(w6::incidence_pinv(), 5, 1);
    CHECK(mp.find("\\frac{1}{10}") == 0);
    CHECK(mp.find("2 & 4 & -2 & 0 & 0 & -2") != std::string::npos);
    CHECK(mp.find("{r|rrrrr}") != std::string::npos);
    CHECK(mp.find("\\hline") != std::string::npos);

    CHECK(to_latex(w6::signless_laplacian_pinv(), 1, 1).find("\\frac{1}{20}") == 0);
    CHECK(to_latex(w6::oriented_pinv(), 5, 1).find("\\frac{1}{66}") == 0);
    CHECK(to_latex(w6::laplacian_pinv(), 1, 1).find("\\frac{1}{396}") == 0);

    // integer matrices print without a prefactor
    std::string m = to_latex(w6::incidence(), 1, 5);
    CHECK(m.find("\\frac") == std::string::npos);
    CHECK(m.find("1 & 1 & 1 & 1 & 1 & 0 & 0 & 0 & 0 & 0") != std::string::npos);
}

TEST_CASE("decimal rendering is lossy display only") {
    CHECK(wheelmp::to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(wheelmp::to_decimal(Rational(-1, 8), 3) == "-0.125");
    CHECK(wheelmp::to_decimal(Rational(2, 3), 2) == "0.67");
    CHECK(wheelmp::to_decimal(Rational(1, 2), 0) == "1");
    CHECK(wheelmp::to_decimal(Rational(0), 2) == "0.00");
    CHECK(wheelmp::to_decimal(Rational(-7), 1) == "-7.0");

    Render render{2};
    std::string csv = to_csv(w6::incidence_pinv(), render);
    CHECK(csv.substr(0, csv.find('\n')) == "0.20,0.40,-0.20,0.00,0.00,-0.20");
}
