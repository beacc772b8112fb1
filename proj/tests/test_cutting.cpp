#include <catch_amalgamated.hpp>

#include "cutkit/cutting.hpp"

using namespace cutkit;

namespace {
HalfForm ds_wedge_dtheta(int d) {
    HalfForm f(d, 2);
    f.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));
    return f;
}
HalfForm s_dtheta(int d) {
    HalfForm f(d, 1);
    f.add_term({d}, HalfFunc::s(d));
    return f;
}
DiscForm u_dv_minus_v_du(int d) {
    DiscForm f(d, 1);
    f.add_term({d + 1}, DiscFunc::u(d));
    f.add_term({d}, -DiscFunc::v(d));
    return f;
}
std::vector<HalfPoint> default_points(int d, uint64_t seed = 5) {
    SamplePlan plan;
    plan.base_dim = d;
    plan.seed = seed;
    return plan.half_points();
}
}  // namespace

TEST_CASE("the three substitution identities") {
    SECTION("ds ^ dtheta -> 2 du ^ dv") {
        DiscForm expected(0, 2);
        expected.add_term({0, 1}, DiscFunc::constant(0, Scalar(2)));
        REQUIRE(cut_form(ds_wedge_dtheta(0)) == expected);
    }
    SECTION("s dtheta -> u dv - v du") {
        REQUIRE(cut_form(s_dtheta(0)) == u_dv_minus_v_du(0));
    }
    SECTION("dx1 ^ ds -> dx1 ^ (2u du + 2v dv)") {
        int d = 1;
        HalfForm form(d, 2);
        form.add_term({0, d + 1}, HalfFunc::constant(d, Scalar(1)));
        DiscForm expected(d, 2);
        expected.add_term({0, d}, Scalar(2) * DiscFunc::u(d));
        expected.add_term({0, d + 1}, Scalar(2) * DiscFunc::v(d));
        REQUIRE(cut_form(form) == expected);
    }
}

TEST_CASE("cut rejects non-admissible forms") {
    int d = 1;
    REQUIRE_THROWS_AS(cut_form(HalfForm::basis(d, {d})), NotBasicInvariant);
    HalfForm theta_dep(d, 1);
    theta_dep.add_term({0}, HalfFunc::cos_theta(d));
    REQUIRE_THROWS_AS(cut_form(theta_dep), NotBasicInvariant);
    // invariant but odd power of sqrt(s): no descent
    HalfForm odd(d, 1);
    odd.add_term({0}, HalfFunc::monomial(d, {}, 0, 1, Scalar(1)));
    REQUIRE_THROWS_AS(cut_form(odd), NonDescendingCoefficient);
}

TEST_CASE("reduced forms") {
    int d = 2;
    SECTION("dx1 ^ dx2 + ds ^ dtheta reduces to dx1 ^ dx2") {
        HalfForm omega(d, 2);
        omega.add_term({0, 1}, HalfFunc::constant(d, Scalar(1)));
        omega.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));
        DiscForm expected(d, 2);
        expected.add_term({0, 1}, DiscFunc::constant(d, Scalar(1)));
        REQUIRE(reduced_form(omega) == expected);
    }
    SECTION("s dtheta dies on the reduced space") {
        REQUIRE(reduced_form(s_dtheta(d)).is_zero());
    }
    SECTION("x-coefficients restrict to s = 0") {
        HalfForm form(d, 1);
        form.add_term({0}, HalfFunc::x_var(d, 1) + HalfFunc::s(d));
        DiscForm expected(d, 1);
        expected.add_term({0}, DiscFunc::x_var(d, 1));
        REQUIRE(reduced_form(form) == expected);
    }
}

TEST_CASE("cut maps") {
    SECTION("identity cuts to the identity") {
        CutMap id = cut_map(LocalMap::identity(1));
        DiscPoint p{{0.4}, 0.3, -0.2};
        auto out = id.apply(p);
        REQUIRE(out[0] == Catch::Approx(0.4));
        REQUIRE(out[1] == Catch::Approx(0.3));
        REQUIRE(out[2] == Catch::Approx(-0.2));
    }
    SECTION("constant twist i gives (x, z) -> (x, iz)") {
        LocalMap map{1, 1, {Expr::variable(0)}, CExpr::i()};
        CutMap cut = cut_map(map);
        DiscPoint p{{0.4}, 0.3, 0.2};
        auto out = cut.apply(p);
        REQUIRE(out[1] == Catch::Approx(-0.2));  // i(u + iv) = -v + iu
        REQUIRE(out[2] == Catch::Approx(0.3));
    }
    SECTION("psi_bar = x + s becomes x + |z|^2") {
        LocalMap map{1, 1, {Expr::variable(0) + Expr::variable(1)}, CExpr::one()};
        CutMap cut = cut_map(map);
        DiscPoint p{{0.4}, 0.3, 0.2};
        REQUIRE(cut.apply(p)[0] == Catch::Approx(0.4 + 0.09 + 0.04));
    }
}

TEST_CASE("map composition in normal form") {
    LocalMap shift{1, 1, {Expr::variable(0) + Expr::variable(1)}, CExpr::one()};
    LocalMap twist_i{1, 1, {Expr::variable(0)}, CExpr::i()};
    SECTION("compose with identity") {
        LocalMap composed = compose_maps(LocalMap::identity(1), shift);
        std::vector<double> xs{0.5, 0.3};
        REQUIRE(composed.psi_bar[0].eval(xs) == Catch::Approx(0.8));
    }
    SECTION("twists multiply") {
        LocalMap composed = compose_maps(twist_i, twist_i);
        std::vector<double> xs{0.5, 0.3};
        auto b = composed.twist.eval(xs);
        REQUIRE(b.real() == Catch::Approx(-1.0));
        REQUIRE(std::abs(b.imag()) < 1e-15);
    }
    REQUIRE_THROWS_AS(compose_maps(LocalMap::identity(1), LocalMap::identity(2)),
                      ModelMismatch);
}

TEST_CASE("momentum map conventions") {
    int d = 0;
    REQUIRE(momentum_check(ds_wedge_dtheta(d), HalfFunc::s(d)));
    REQUIRE_FALSE(momentum_check(ds_wedge_dtheta(d), HalfFunc::s(d) * HalfFunc::s(d)));
    // horizontal form with zero momentum
    HalfForm omega_x(2, 2);
    omega_x.add_term({0, 1}, HalfFunc::constant(2, Scalar(1)));
    REQUIRE(momentum_check(omega_x, HalfFunc(2)));
}

TEST_CASE("contact momentum") {
    int d = 1;
    HalfForm beta(d, 1);
    beta.add_term({0}, HalfFunc::constant(d, Scalar(1)));
    beta.add_term({d}, HalfFunc::s(d));
    HalfFunc mu = contact_momentum(beta);
    REQUIRE(mu == HalfFunc::s(d));
    REQUIRE(vanishes_on_boundary(mu));

    REQUIRE(contact_momentum(HalfForm::basis(d, {0})).is_zero());
    HalfFunc one = contact_momentum(HalfForm::basis(d, {d}));
    REQUIRE(one == HalfFunc::constant(d, Scalar(1)));
    REQUIRE_FALSE(vanishes_on_boundary(one));
}

TEST_CASE("symplectic certification") {
    auto points = default_points(0);
    REQUIRE(is_symplectic(ds_wedge_dtheta(0), points));
    SamplePlan plan;
    plan.base_dim = 0;
    DiscForm omega_c(0, 2);
    omega_c.add_term({0, 1}, DiscFunc::constant(0, Scalar(2)));
    REQUIRE(is_symplectic(omega_c, plan.disc_points()));
    // s ds ^ dtheta degenerates on the boundary
    HalfForm degenerate(0, 2);
    degenerate.add_term({0, 1}, -HalfFunc::s(0));
    REQUIRE_FALSE(is_symplectic(degenerate, points));
    REQUIRE_THROWS_AS(is_symplectic(HalfForm(1, 2), default_points(1)), DomainError);
}

TEST_CASE("contact certification") {
    int d = 1;
    HalfForm beta(d, 1);
    beta.add_term({0}, HalfFunc::constant(d, Scalar(1)));
    beta.add_term({d}, HalfFunc::s(d));
    auto points = default_points(d);
    REQUIRE(is_contact(beta, points));
    REQUIRE_FALSE(is_contact(HalfForm::basis(d, {0}), points));

    SamplePlan plan;
    plan.base_dim = d;
    DiscForm beta_c = cut_form(beta);
    REQUIRE(is_contact(beta_c, plan.disc_points()));
}

TEST_CASE("distribution cutting") {
    SamplePlan plan;
    SECTION("constant-coefficient kernel") {
        plan.base_dim = 2;
        DistributionFrame frame{{HalfForm::basis(2, {0})}};
        auto report = cut_distribution(frame, plan);
        REQUIRE(report.transverse_to_boundary);
        REQUIRE(report.involutive_before);
        REQUIRE(report.involutive_after);
        REQUIRE(report.cut_frame.front() == DiscForm::basis(2, {0}));
    }
    SECTION("contact frame") {
        plan.base_dim = 1;
        HalfForm beta(1, 1);
        beta.add_term({0}, HalfFunc::constant(1, Scalar(1)));
        beta.add_term({1}, HalfFunc::s(1));
        auto report = cut_distribution(DistributionFrame{{beta}}, plan);
        REQUIRE(report.transverse_to_boundary);
        REQUIRE_FALSE(report.involutive_before);
        REQUIRE_FALSE(report.involutive_after);
        REQUIRE(report.contact_before.value());
        REQUIRE(report.contact_after.value());
    }
    SECTION("ds frame: involutive, not transverse") {
        plan.base_dim = 1;
        DistributionFrame frame{{HalfForm::basis(1, {2})}};
        auto report = cut_distribution(frame, plan);
        REQUIRE_FALSE(report.transverse_to_boundary);
        REQUIRE(report.involutive_before);
        REQUIRE(report.involutive_after);
        DiscForm expected(1, 1);
        expected.add_term({1}, Scalar(2) * DiscFunc::u(1));
        expected.add_term({2}, Scalar(2) * DiscFunc::v(1));
        REQUIRE(report.cut_frame.front() == expected);
    }
    SECTION("degenerate frame is rejected") {
        plan.base_dim = 1;
        HalfForm vanishing(1, 1);
        vanishing.add_term({0}, HalfFunc::x_var(1, 0));  // x dx vanishes at x = 0
        SamplePlan with_zero = plan;
        with_zero.extra.push_back(HalfPoint{{0.0}, 0.0, 0.1});
        REQUIRE_THROWS_AS(cut_distribution(DistributionFrame{{vanishing}}, with_zero),
                          DegenerateFrame);
    }
}

TEST_CASE("local map jacobians at the boundary") {
    // psi_bar = (x, x^2), twist e^{is}
    LocalMap map{1, 2, {Expr::variable(0), Expr::variable(0) * Expr::variable(0)},
                 CExpr::unit_phase(Expr::variable(1))};
    auto jac = local_map_jacobian(map);
    HalfPoint p{{0.5}, 1.1, 0.0};
    auto m = eval_matrix(jac, pack(p));
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 3);
    REQUIRE(rank_of(m) == 3);  // immersion

    CutMap cut = cut_map(map);
    auto cm = jacobian_at(cut.components, 3, pack(to_disc(p)));
    REQUIRE(rank_of(cm) == 3);
}
