#include <catch_amalgamated.hpp>

#include "cutkit/scalar.hpp"

using namespace cutkit;

TEST_CASE("rational parsing and printing") {
    REQUIRE(rat_parse("3/4") == Rat(3, 4));
    REQUIRE(rat_parse("-7") == Rat(-7));
    REQUIRE(rat_str(Rat(10, 4)) == "5/2");
    REQUIRE(rat_str(Rat(-3)) == "-3");
    REQUIRE_THROWS_AS(rat_parse("1/0"), SchemaError);
    REQUIRE_THROWS_AS(rat_parse("abc"), SchemaError);
}

TEST_CASE("square part extraction") {
    auto [a, b] = square_part(Int(72));  // 72 = 36 * 2
    REQUIRE(a == 6);
    REQUIRE(b == 2);
    auto [c, d] = square_part(Int(7));
    REQUIRE(c == 1);
    REQUIRE(d == 7);
    auto [e, f] = square_part(Int(1));
    REQUIRE(e == 1);
    REQUIRE(f == 1);
}

TEST_CASE("scalar arithmetic stays exact") {
    Scalar half(Rat(1, 2)), third(Rat(1, 3));
    REQUIRE(half + third == Scalar(Rat(5, 6)));
    REQUIRE(half * third == Scalar(Rat(1, 6)));
    REQUIRE((half - half).is_zero());

    Scalar i = Scalar::i();
    REQUIRE(i * i == Scalar(-1));
    REQUIRE(i.conj() == -i);
    REQUIRE(!i.is_real());
    REQUIRE((i * i).is_real());
}

TEST_CASE("radical coefficients") {
    Scalar root2 = Scalar::sqrt_of(Rat(2));
    REQUIRE(root2 * root2 == Scalar(2));
    REQUIRE(Scalar::sqrt_of(Rat(4)) == Scalar(2));
    REQUIRE(Scalar::sqrt_of(Rat(9, 4)) == Scalar(Rat(3, 2)));
    // sqrt(8) = 2 sqrt(2)
    REQUIRE(Scalar::sqrt_of(Rat(8)) == Scalar(2) * root2);
    // sqrt(1/2) = (1/2) sqrt(2)
    REQUIRE(Scalar::sqrt_of(Rat(1, 2)) == Scalar(Rat(1, 2)) * root2);
    // mixed radicands add formally and multiply through gcd reduction
    Scalar root6 = Scalar::sqrt_of(Rat(6));
    REQUIRE(root2 * Scalar::sqrt_of(Rat(3)) == root6);
    Scalar mixed = root2 + root6;
    REQUIRE(mixed.parts().size() == 2);
    REQUIRE((mixed - root6 - root2).is_zero());
    REQUIRE_THROWS_AS(Scalar::sqrt_of(Rat(-1)), DomainError);

    double value = root2.eval().real();
    REQUIRE(value == Catch::Approx(std::sqrt(2.0)));
}
