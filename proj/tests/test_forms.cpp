#include <catch_amalgamated.hpp>

#include "cutkit/forms.hpp"

using namespace cutkit;

namespace {
HalfForm sdtheta(int d) {
    HalfForm f(d, 1);
    f.add_term({d}, HalfFunc::s(d));
    return f;
}
}  // namespace

TEST_CASE("wedge basics") {
    int d = 2;
    HalfForm dx1 = HalfForm::basis(d, {0}), dx2 = HalfForm::basis(d, {1});
    REQUIRE(wedge(dx1, dx2) == HalfForm::basis(d, {0, 1}));
    REQUIRE(wedge(dx2, dx1) == -HalfForm::basis(d, {0, 1}));
    HalfForm ds = HalfForm::basis(d, {d + 1});
    REQUIRE(wedge(ds, ds).is_zero());

    // (dx + s dtheta) ^ ds ^ dtheta = dx ^ ds ^ dtheta
    HalfForm mixed = dx1 + sdtheta(d);
    HalfForm ds_dtheta = wedge(ds, HalfForm::basis(d, {d}));
    HalfForm expected(d, 3);
    expected.add_term({0, d, d + 1}, HalfFunc::constant(d, Scalar(-1)));  // dx^ds^dtheta
    REQUIRE(wedge(mixed, ds_dtheta) == expected);
}

TEST_CASE("exterior derivative") {
    int d = 1;
    SECTION("d(s dtheta) = ds ^ dtheta") {
        HalfForm expected(d, 2);
        expected.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));
        REQUIRE(ext_d(sdtheta(d)) == expected);
    }
    SECTION("d of closed basis form") {
        REQUIRE(ext_d(HalfForm::basis(d, {0})).is_zero());
    }
    SECTION("d(u dv - v du) = 2 du ^ dv") {
        DiscForm form(0, 1);
        form.add_term({1}, DiscFunc::u(0));
        form.add_term({0}, -DiscFunc::v(0));
        DiscForm expected(0, 2);
        expected.add_term({0, 1}, DiscFunc::constant(0, Scalar(2)));
        REQUIRE(ext_d(form) == expected);
    }
    SECTION("sqrt(s) coefficients have no derivative in the class") {
        HalfForm form(d, 1);
        form.add_term({0}, HalfFunc::sqrt_s(d));
        REQUIRE_THROWS_AS(ext_d(form), SingularDifferential);
    }
}

TEST_CASE("interior product with the action generator") {
    int d = 1;
    HalfForm ds_dtheta(d, 2);
    ds_dtheta.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));  // ds ^ dtheta
    // i_dtheta(ds ^ dtheta) = -ds
    HalfForm contracted = contract(d, ds_dtheta);
    HalfForm minus_ds(d, 1);
    minus_ds.add_term({d + 1}, HalfFunc::constant(d, Scalar(-1)));
    REQUIRE(contracted == minus_ds);

    REQUIRE(contract(d, sdtheta(d)) == HalfForm::from_func(HalfFunc::s(d)));
    REQUIRE(contract(d, HalfForm::basis(d, {0})).is_zero());
    REQUIRE_THROWS_AS(contract(d, HalfForm::from_func(HalfFunc::s(d))), DomainError);
}

TEST_CASE("Lie derivative along the action generator") {
    int d = 1;
    REQUIRE(lie_derivative(d, sdtheta(d)).is_zero());
    REQUIRE(lie_derivative(d, HalfForm::basis(d, {d + 1})).is_zero());
    // L(cos(theta) dx) = -sin(theta) dx
    HalfForm form(d, 1);
    form.add_term({0}, HalfFunc::cos_theta(d));
    HalfForm expected(d, 1);
    expected.add_term({0}, -HalfFunc::sin_theta(d));
    REQUIRE(lie_derivative(d, form) == expected);
}

TEST_CASE("basic-invariant verdicts") {
    int d = 1;
    REQUIRE(is_basic_invariant(sdtheta(d)).ok);
    HalfForm dtheta = HalfForm::basis(d, {d});
    auto verdict = is_basic_invariant(dtheta);
    REQUIRE_FALSE(verdict.ok);
    REQUIRE(verdict.failures.front().reason == "dtheta coefficient not divisible by s");

    HalfForm theta_dep(d, 1);
    theta_dep.add_term({0}, HalfFunc::cos_theta(d));
    auto verdict2 = is_basic_invariant(theta_dep);
    REQUIRE_FALSE(verdict2.ok);
    REQUIRE(verdict2.failures.front().reason == "theta-dependent coefficient");

    // ds ^ dtheta needs no divisibility: it dies in the pullback to the boundary
    HalfForm omega(d, 2);
    omega.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));
    REQUIRE(is_basic_invariant(omega).ok);
}

TEST_CASE("boundary pullback") {
    int d = 2;
    SECTION("ds terms die, s factors die") {
        HalfForm form(d, 2);
        form.add_term({0, d + 1}, HalfFunc::constant(d, Scalar(1)));  // dx1 ^ ds
        form.add_term({1, d}, HalfFunc::s(d));  // s dx2 ^ dtheta (sign aside)
        REQUIRE(boundary_pullback(form).form().is_zero());
    }
    SECTION("x-coefficients survive") {
        HalfForm form(d, 1);
        form.add_term({0}, HalfFunc::x_var(d, 1));
        REQUIRE(boundary_pullback(form).form() == form);
    }
    SECTION("s^2 dx1 dies") {
        HalfForm form(d, 1);
        form.add_term({0}, HalfFunc::s(d) * HalfFunc::s(d));
        REQUIRE(boundary_pullback(form).form().is_zero());
    }
}

TEST_CASE("evaluation of forms") {
    SECTION("ds ^ dtheta evaluates to the constant matrix slot") {
        HalfForm omega(0, 2);
        omega.add_term({0, 1}, HalfFunc::constant(0, Scalar(-1)));
        auto vals = eval_at_real(omega, HalfPoint{{}, 0.7, 0.2});
        REQUIRE(vals.at({0, 1}) == -1.0);
    }
    SECTION("2 du ^ dv at the origin") {
        DiscForm omega(0, 2);
        omega.add_term({0, 1}, DiscFunc::constant(0, Scalar(2)));
        auto vals = eval_at_real(omega, DiscPoint{{}, 0.0, 0.0});
        REQUIRE(vals.at({0, 1}) == 2.0);
    }
    SECTION("s dtheta at s = 1/4") {
        auto vals = eval_at_real(sdtheta(0), HalfPoint{{}, 0.0, 0.25});
        REQUIRE(vals.at({0}) == Catch::Approx(0.25));
    }
}

TEST_CASE("form JSON requires canonical keys") {
    HalfForm form(1, 2);
    REQUIRE_THROWS_AS(form.add_term({2, 1}, HalfFunc::constant(1, Scalar(1))), ModelMismatch);
    REQUIRE_THROWS_AS(form.add_term({1, 1}, HalfFunc::constant(1, Scalar(1))), ModelMismatch);
    REQUIRE_THROWS_AS(form.add_term({1, 5}, HalfFunc::constant(1, Scalar(1))), ModelMismatch);
}
