#include <catch_amalgamated.hpp>

#include "cutkit/blowup.hpp"
#include "cutkit/properties.hpp"

using namespace cutkit;

TEST_CASE("pullback of the substitution images") {
    SECTION("2 du ^ dv -> ds ^ dtheta") {
        DiscForm omega(0, 2);
        omega.add_term({0, 1}, DiscFunc::constant(0, Scalar(2)));
        HalfForm expected(0, 2);
        expected.add_term({0, 1}, HalfFunc::constant(0, Scalar(-1)));  // ds ^ dtheta
        REQUIRE(blowup_pullback(omega) == expected);
    }
    SECTION("u dv - v du -> s dtheta") {
        DiscForm form(0, 1);
        form.add_term({1}, DiscFunc::u(0));
        form.add_term({0}, -DiscFunc::v(0));
        HalfForm expected(0, 1);
        expected.add_term({0}, HalfFunc::s(0));
        REQUIRE(blowup_pullback(form) == expected);
    }
    SECTION("dx1 -> dx1") {
        REQUIRE(blowup_pullback(DiscForm::basis(2, {0})) == HalfForm::basis(2, {0}));
    }
    SECTION("du alone leaves a residual negative power") {
        REQUIRE_THROWS_AS(blowup_pullback(DiscForm::basis(0, {0})), ResidualNegativePower);
    }
}

TEST_CASE("roundtrips") {
    HalfForm omega(0, 2);
    omega.add_term({0, 1}, HalfFunc::constant(0, Scalar(-1)));
    REQUIRE(roundtrip_check(omega));

    HalfForm sdth(0, 1);
    sdth.add_term({0}, HalfFunc::s(0));
    REQUIRE(roundtrip_check(sdth));

    DiscForm gamma = cut_form(omega);
    REQUIRE(roundtrip_check_disc(gamma));
}

TEST_CASE("radial lift formulas") {
    SECTION("identity input lifts to the identity") {
        BlowupLiftInput input;
        input.base_dim = 1;
        input.target_base_dim = 1;
        input.phi1 = {Expr::variable(0)};
        input.A = {{Expr::constant(1), Expr::constant(0)},
                   {Expr::constant(0), Expr::constant(1)}};
        auto report = lift_map_radial(input, {50, 3});
        REQUIRE(report.max_commute_residual < tol::commute);
        REQUIRE(report.min_boundary_slope > 0.5);
        std::vector<double> p{0.2, 0.6, 0.8, 0.3};
        auto out = report.map.apply(p);
        for (int i = 0; i < 4; ++i) REQUIRE(out[i] == Catch::Approx(p[i]));
    }
    SECTION("A = 2I doubles the radius") {
        BlowupLiftInput input;
        input.base_dim = 1;
        input.target_base_dim = 1;
        input.phi1 = {Expr::variable(0)};
        input.A = {{Expr::constant(2), Expr::constant(0)},
                   {Expr::constant(0), Expr::constant(2)}};
        auto report = lift_map_radial(input, {50, 3});
        std::vector<double> p{0.2, 0.6, 0.8, 0.3};
        auto out = report.map.apply(p);
        REQUIRE(out[3] == Catch::Approx(0.6));
        REQUIRE(out[1] == Catch::Approx(0.6));
    }
    SECTION("degenerate A is rejected") {
        BlowupLiftInput input;
        input.base_dim = 1;
        input.target_base_dim = 1;
        input.phi1 = {Expr::variable(0)};
        input.A = {{Expr::constant(1), Expr::constant(0)},
                   {Expr::constant(1), Expr::constant(0)}};
        REQUIRE_THROWS_AS(lift_map_radial(input, {20, 3}), DegenerateA);
    }
}

TEST_CASE("radial-squared lift formulas") {
    SECTION("invariant scale") {
        BlowupLiftInput input;
        input.base_dim = 1;
        input.target_base_dim = 1;
        input.param = LiftParametrization::Invariant;
        input.phi1 = {Expr::variable(0)};
        input.A = {{Expr::constant(3), Expr::constant(0)},
                   {Expr::constant(0), Expr::constant(3)}};
        auto report = lift_map_radial_squared(input, {50, 3});
        REQUIRE(report.max_commute_residual < tol::commute);
        std::vector<double> p{0.2, 0.6, 0.8, 0.3};
        REQUIRE(report.map.apply(p)[3] == Catch::Approx(9 * 0.3));
    }
    SECTION("phi1 = t + s") {
        BlowupLiftInput input;
        input.base_dim = 1;
        input.target_base_dim = 1;
        input.param = LiftParametrization::Invariant;
        input.phi1 = {Expr::variable(0) + Expr::variable(1)};
        input.A = {{Expr::constant(1), Expr::constant(0)},
                   {Expr::constant(0), Expr::constant(1)}};
        auto report = lift_map_radial_squared(input, {50, 3});
        std::vector<double> p{0.2, 0.6, 0.8, 0.3};
        REQUIRE(report.map.apply(p)[0] == Catch::Approx(0.5));
        REQUIRE(report.map.apply(p)[3] == Catch::Approx(0.3));
    }
    SECTION("the non-equivariant shear is rejected, radial accepts it") {
        auto input = props::shear_input();
        REQUIRE_NOTHROW(lift_map_radial(input, {30, 3}));
        REQUIRE_THROWS_AS(lift_map_radial_squared(input, {30, 3}), NonInvariantInput);
    }
    SECTION("rotation-invariant radial input converts") {
        BlowupLiftInput input;
        input.base_dim = 1;
        input.target_base_dim = 1;
        Expr norm2 = Expr::variable(1) * Expr::variable(1) +
                     Expr::variable(2) * Expr::variable(2);
        Expr diag = Expr::constant(1) + norm2;
        input.phi1 = {Expr::variable(0)};
        input.A = {{diag, Expr::constant(0)}, {Expr::constant(0), diag}};
        auto report = lift_map_radial_squared(input, {50, 3});
        REQUIRE(report.max_commute_residual < tol::commute);
        std::vector<double> p{0.2, 0.6, 0.8, 0.25};
        REQUIRE(report.map.apply(p)[3] == Catch::Approx(0.25 * 1.5625));
    }
}

TEST_CASE("polar correspondence") {
    SECTION("a = 1, g = 4 gives phi = 2z") {
        PolarDiffeoPair pair{Expr::constant(1), Expr::constant(0), Expr::constant(4)};
        auto report = polar_correspondence(pair, 50, 11);
        REQUIRE(report.max_commute_residual < tol::commute);
        REQUIRE(report.diffeo_ok);
        REQUIRE(report.min_jacobian == Catch::Approx(4.0));
    }
    SECTION("phase twist a = e^{is}") {
        Expr s = Expr::variable(0);
        PolarDiffeoPair pair{Expr::cos(s), Expr::sin(s), Expr::constant(1)};
        auto report = polar_correspondence(pair, 50, 11);
        REQUIRE(report.max_commute_residual < tol::commute);
        REQUIRE(report.diffeo_ok);
    }
    SECTION("nonunit a is rejected") {
        PolarDiffeoPair pair{Expr::constant(2), Expr::constant(0), Expr::constant(1)};
        REQUIRE_THROWS_AS(polar_correspondence(pair, 10, 11), DomainError);
    }
    SECTION("nonpositive g is rejected") {
        PolarDiffeoPair pair{Expr::constant(1), Expr::constant(0), Expr::constant(-1)};
        REQUIRE_THROWS_AS(polar_correspondence(pair, 10, 11), DomainError);
    }
}

TEST_CASE("smoothness probes") {
    Expr u = Expr::variable(0), v = Expr::variable(1);
    Expr s2 = u * u + v * v;
    SECTION("z e^{i|z|^2} is accepted") {
        auto probe = probe_equivariant_smooth_at_origin(
            u * Expr::cos(s2) - v * Expr::sin(s2), u * Expr::sin(s2) + v * Expr::cos(s2));
        REQUIRE(probe.smooth);
    }
    SECTION("z e^{i|z|} is flagged") {
        Expr r = Expr::sqrt(s2);
        auto probe = probe_equivariant_smooth_at_origin(
            u * Expr::cos(r) - v * Expr::sin(r), u * Expr::sin(r) + v * Expr::cos(r));
        REQUIRE_FALSE(probe.smooth);
        REQUIRE(probe.max_jump > 1.0);
    }
    SECTION("2z is accepted") {
        auto probe = probe_equivariant_smooth_at_origin(Expr::constant(2) * u,
                                                        Expr::constant(2) * v);
        REQUIRE(probe.smooth);
    }
}
