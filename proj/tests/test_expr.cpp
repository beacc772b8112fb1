#include <catch_amalgamated.hpp>

#include "cutkit/expr.hpp"
#include "cutkit/io.hpp"

using namespace cutkit;

TEST_CASE("expression evaluation") {
    Expr x = Expr::variable(0), y = Expr::variable(1);
    Expr f = x * x + Expr::constant(Rat(1, 2)) * y;
    std::vector<double> p{3.0, 4.0};
    REQUIRE(f.eval(p) == Catch::Approx(11.0));
    REQUIRE(Expr::sin(x).eval(p) == Catch::Approx(std::sin(3.0)));
    REQUIRE(Expr::sqrt(y).eval(p) == Catch::Approx(2.0));
    REQUIRE((x / y).eval(p) == Catch::Approx(0.75));
    REQUIRE(x.pow(3).eval(p) == Catch::Approx(27.0));
    REQUIRE_THROWS_AS((x / (y - Expr::constant(4))).eval(p), DomainError);
}

TEST_CASE("symbolic differentiation") {
    Expr x = Expr::variable(0);
    std::vector<double> p{0.7};
    SECTION("product and chain rules") {
        Expr f = Expr::sin(x * x);
        REQUIRE(f.diff(0).eval(p) == Catch::Approx(2 * 0.7 * std::cos(0.49)));
    }
    SECTION("quotient rule") {
        Expr f = Expr::constant(1) / (Expr::constant(1) + x * x);
        double expect = -2 * 0.7 / std::pow(1 + 0.49, 2);
        REQUIRE(f.diff(0).eval(p) == Catch::Approx(expect));
    }
    SECTION("sqrt") {
        Expr f = Expr::sqrt(x);
        REQUIRE(f.diff(0).eval(p) == Catch::Approx(0.5 / std::sqrt(0.7)));
    }
    SECTION("pow") {
        Expr f = x.pow(5);
        REQUIRE(f.diff(0).eval(p) == Catch::Approx(5 * std::pow(0.7, 4)));
    }
}

TEST_CASE("substitution") {
    Expr x = Expr::variable(0), y = Expr::variable(1);
    Expr f = x * y + Expr::cos(x);
    // x -> y^2, y -> 2
    Expr g = f.subst({y * y, Expr::constant(2)});
    std::vector<double> p{0.0, 0.5};
    REQUIRE(g.eval(p) == Catch::Approx(0.25 * 2 + std::cos(0.25)));
}

TEST_CASE("expression JSON round trip") {
    Expr x = Expr::variable(0);
    Expr f = Expr::sqrt(x * x + Expr::constant(Rat(3, 2))).pow(3) - Expr::exp(-x);
    json j = to_json(f);
    Expr g = expr_from_json(j);
    for (double v : {0.0, 0.3, 1.7}) {
        std::vector<double> p{v};
        REQUIRE(f.eval(p) == Catch::Approx(g.eval(p)).epsilon(1e-14));
    }
    REQUIRE(to_json(g) == j);

    REQUIRE_THROWS_AS(expr_from_json(json{{"op", "nope"}}), SchemaError);
    // shorthand: bare rationals
    REQUIRE(expr_from_json(json("3/2")).eval(std::vector<double>{}) == Catch::Approx(1.5));
    REQUIRE(expr_from_json(json(7)).eval(std::vector<double>{}) == Catch::Approx(7.0));
}

TEST_CASE("complex expression pairs") {
    CExpr a = CExpr::unit_phase(Expr::variable(0));
    CExpr b = CExpr::i();
    CExpr product = a * b;
    std::vector<double> p{0.9};
    auto val = product.eval(p);
    REQUIRE(val.real() == Catch::Approx(-std::sin(0.9)));
    REQUIRE(val.imag() == Catch::Approx(std::cos(0.9)));
}
