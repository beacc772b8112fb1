#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "cutkit/cutting.hpp"

namespace cutkit {

// --- pullback along the radial-squared blow-down ------------------------------

// Substitute u = sqrt(s) cos(theta), v = sqrt(s) sin(theta),
//   du = cos(theta)/(2 sqrt(s)) ds - sqrt(s) sin(theta) dtheta,
//   dv = sin(theta)/(2 sqrt(s)) ds + sqrt(s) cos(theta) dtheta,
// expand in the Fourier--Puiseux class and cancel.  Negative half-powers are
// carried transiently; any that survive mean the input is not the image of a
// smooth form.
inline HalfForm blowup_pullback(const DiscForm& gamma) {
    int d = gamma.base_dim();
    int theta = d, s_idx = d + 1;

    auto raw = [&](int k, int m, Scalar c) {
        return HalfFunc::monomial_raw(d, {}, k, m, std::move(c));
    };
    Scalar quarter_i = Scalar(CRat(Rat(0), Rat(1, 4)));
    Scalar half_i = Scalar(CRat(Rat(0), Rat(1, 2)));

    // du: (1/4)(e^{i t}+e^{-i t}) s^{-1/2} ds + (i/2)(e^{i t}-e^{-i t}) s^{1/2} dtheta
    HalfForm du_image(d, 1);
    du_image.add_term({s_idx}, raw(1, -1, Scalar(Rat(1, 4))) + raw(-1, -1, Scalar(Rat(1, 4))));
    du_image.add_term({theta}, raw(1, 1, half_i) + raw(-1, 1, -half_i));
    // dv: -(i/4)(e^{i t}-e^{-i t}) s^{-1/2} ds + (1/2)(e^{i t}+e^{-i t}) s^{1/2} dtheta
    HalfForm dv_image(d, 1);
    dv_image.add_term({s_idx}, raw(1, -1, -quarter_i) + raw(-1, -1, quarter_i));
    dv_image.add_term({theta}, raw(1, 1, Scalar(Rat(1, 2))) + raw(-1, 1, Scalar(Rat(1, 2))));

    HalfForm out(d, gamma.degree());
    for (auto& [key, coeff] : gamma.terms()) {
        HalfForm piece = HalfForm::from_func(lift_function(coeff));
        for (int idx : key) {
            if (idx < d)
                piece = wedge(piece, HalfForm::basis(d, {idx}));
            else if (idx == d)
                piece = wedge(piece, du_image);
            else
                piece = wedge(piece, dv_image);
        }
        out = out + piece;
    }

    for (auto& [key, coeff] : out.terms())
        for (auto& [mode, c] : coeff.terms())
            if (mode.m < 0) throw ResidualNegativePower(half_key_str(mode));
    return out;
}

// The local-model form-level statement of the cut/blowup inverse pair.
inline bool roundtrip_check(const HalfForm& beta) {
    return blowup_pullback(cut_form(beta)) == beta;
}
inline bool roundtrip_check_disc(const DiscForm& gamma) {
    return cut_form(blowup_pullback(gamma)) == gamma;
}

// --- map lifts -----------------------------------------------------------------

enum class LiftParametrization {
    Radial,    // phi1, A are expressions in (t_1..t_d, x_1..x_k)
    Invariant  // phi1~, A~ are expressions in (t_1..t_d, s)
};

// Hadamard data of a map  phi(t,x) = (phi1(t,x), A(t,x) x).
struct BlowupLiftInput {
    int base_dim = 0;          // t variables
    int fiber_dim = 2;         // k
    int target_base_dim = 0;   // d'
    int target_fiber_dim = 2;  // k'
    LiftParametrization param = LiftParametrization::Radial;
    std::vector<Expr> phi1;
    std::vector<std::vector<Expr>> A;
};

struct LiftedMap {
    int base_dim = 0;
    int fiber_dim = 2;
    int target_base_dim = 0;
    int target_fiber_dim = 2;
    bool squared = false;
    // variables (t_1..t_d, u_1..u_k, r) resp. (t, u, s)
    std::vector<Expr> components;

    std::vector<double> apply(std::span<const double> point) const {
        std::vector<double> out;
        out.reserve(components.size());
        for (auto& c : components) out.push_back(c.eval(point));
        return out;
    }
};

struct LiftReport {
    LiftedMap map;
    double max_commute_residual = 0.0;
    double min_boundary_slope = 0.0;  // radial only: d/dr of the last component at r=0
};

struct LiftCheckPlan {
    int samples = 100;
    uint64_t seed = 7;
};

namespace detail {

inline std::vector<double> random_unit_vector(Rng& rng, int k) {
    std::vector<double> u(k);
    double norm2 = 0;
    do {
        norm2 = 0;
        for (auto& ui : u) {
            ui = rng.uniform(-1, 1);
            norm2 += ui * ui;
        }
    } while (norm2 < 1e-4);
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& ui : u) ui *= inv;
    return u;
}

// phi as expressions in (t, x) from Hadamard data (both parametrizations).
inline std::vector<Expr> assemble_phi(const BlowupLiftInput& in) {
    int d = in.base_dim, k = in.fiber_dim;
    std::vector<Expr> phi1 = in.phi1;
    std::vector<std::vector<Expr>> A = in.A;
    if (in.param == LiftParametrization::Invariant) {
        // s = |x|^2
        std::vector<Expr> repl;
        for (int i = 0; i < d; ++i) repl.push_back(Expr::variable(i));
        Expr s = Expr::constant(0);
        for (int j = 0; j < k; ++j) {
            Expr xj = Expr::variable(d + j);
            s = s + xj * xj;
        }
        repl.push_back(s);
        for (auto& c : phi1) c = c.subst(repl);
        for (auto& row : A)
            for (auto& c : row) c = c.subst(repl);
    }
    std::vector<Expr> phi = phi1;
    for (int i = 0; i < in.target_fiber_dim; ++i) {
        Expr acc = Expr::constant(0);
        for (int j = 0; j < k; ++j) acc = acc + A[i][j] * Expr::variable(d + j);
        phi.push_back(acc);
    }
    return phi;
}

inline void check_shape(const BlowupLiftInput& in) {
    if ((int)in.phi1.size() != in.target_base_dim)
        throw ModelMismatch("phi1 component count != target base dim");
    if ((int)in.A.size() != in.target_fiber_dim)
        throw ModelMismatch("A row count != target fiber dim");
    for (auto& row : in.A)
        if ((int)row.size() != in.fiber_dim) throw ModelMismatch("A column count != fiber dim");
}

}  // namespace detail

// psi(t,u,r) = (phi1(t,ru), A(t,ru)u / |A(t,ru)u|, r |A(t,ru)u|).
inline LiftReport lift_map_radial(const BlowupLiftInput& input, const LiftCheckPlan& plan = {}) {
    detail::check_shape(input);
    if (input.param != LiftParametrization::Radial)
        throw ModelMismatch("radial lift needs (t,x)-parametrized input");
    int d = input.base_dim, k = input.fiber_dim, kp = input.target_fiber_dim;

    // substitute x_j = r u_j; variables become (t, u, r)
    std::vector<Expr> repl;
    for (int i = 0; i < d; ++i) repl.push_back(Expr::variable(i));
    Expr r = Expr::variable(d + k);
    for (int j = 0; j < k; ++j) repl.push_back(r * Expr::variable(d + j));

    std::vector<Expr> au(kp, Expr::constant(0));
    for (int i = 0; i < kp; ++i)
        for (int j = 0; j < k; ++j)
            au[i] = au[i] + input.A[i][j].subst(repl) * Expr::variable(d + j);
    Expr norm2 = Expr::constant(0);
    for (auto& c : au) norm2 = norm2 + c * c;
    Expr norm = Expr::sqrt(norm2);

    LiftReport report;
    report.map = {d, k, input.target_base_dim, kp, false, {}};
    for (auto& c : input.phi1) report.map.components.push_back(c.subst(repl));
    for (auto& c : au) report.map.components.push_back(c / norm);
    report.map.components.push_back(r * norm);

    auto phi = detail::assemble_phi(input);
    Rng rng(plan.seed);
    report.min_boundary_slope = std::numeric_limits<double>::infinity();
    Expr slope = report.map.components.back().diff(d + k);
    for (int trial = 0; trial < plan.samples; ++trial) {
        std::vector<double> point;
        for (int i = 0; i < d; ++i) point.push_back(rng.uniform(-0.8, 0.8));
        auto u = detail::random_unit_vector(rng, k);
        point.insert(point.end(), u.begin(), u.end());
        double rv = trial % 5 == 0 ? 0.0 : rng.uniform(0.0, 0.9);
        point.push_back(rv);

        // A(t,0) must have trivial kernel
        std::vector<double> tx(point.begin(), point.begin() + d);
        tx.resize(d + k, 0.0);
        Eigen::MatrixXd a0(kp, k);
        for (int i = 0; i < kp; ++i)
            for (int j = 0; j < k; ++j) a0(i, j) = input.A[i][j].eval(tx);
        if (smallest_singular_value(a0) <= tol::rank)
            throw DegenerateA("A(t,0) singular at a sample");

        // commuting square: blow-down then phi vs lift then blow-down
        auto lifted = report.map.apply(point);
        std::vector<double> down(point.begin(), point.begin() + d);
        for (int j = 0; j < k; ++j) down.push_back(rv * u[j]);
        double residual = 0;
        for (int i = 0; i < input.target_base_dim; ++i)
            residual = std::max(residual, std::abs(lifted[i] - phi[i].eval(down)));
        for (int i = 0; i < kp; ++i) {
            double xi = lifted[input.target_base_dim + i] * lifted.back();
            residual = std::max(
                residual, std::abs(xi - phi[input.target_base_dim + i].eval(down)));
        }
        report.max_commute_residual = std::max(report.max_commute_residual, residual);

        if (rv == 0.0)
            report.min_boundary_slope = std::min(report.min_boundary_slope, slope.eval(point));
    }
    return report;
}

// psi^(t,u,s) = (phi1~(t,s), A~(t,s)u / |A~(t,s)u|, s |A~(t,s)u|^2).
// A (t,x)-parametrized input must first pass the numeric invariance probe.
inline LiftReport lift_map_radial_squared(const BlowupLiftInput& input,
                                          const LiftCheckPlan& plan = {}) {
    detail::check_shape(input);
    int d = input.base_dim, k = input.fiber_dim, kp = input.target_fiber_dim;

    std::vector<Expr> phi1 = input.phi1;
    std::vector<std::vector<Expr>> A = input.A;
    if (input.param == LiftParametrization::Radial) {
        // rotate x, compare: dependence must factor through |x|^2
        Rng rng(plan.seed ^ 0x5157ull);
        for (int trial = 0; trial < 32; ++trial) {
            std::vector<double> base;
            for (int i = 0; i < d; ++i) base.push_back(rng.uniform(-0.8, 0.8));
            auto u = detail::random_unit_vector(rng, k);
            double rv = rng.uniform(0.05, 0.9);
            int axis_a = rng.uniform_int(0, k - 1);
            int axis_b = (axis_a + 1 + rng.uniform_int(0, k - 2 < 0 ? 0 : k - 2)) % k;
            if (k == 1 || axis_a == axis_b) break;  // no rotations in a line
            double angle = rng.uniform(0.3, 5.9);
            auto rotated = u;
            rotated[axis_a] = std::cos(angle) * u[axis_a] - std::sin(angle) * u[axis_b];
            rotated[axis_b] = std::sin(angle) * u[axis_a] + std::cos(angle) * u[axis_b];

            auto at = [&](const std::vector<double>& dir) {
                std::vector<double> p = base;
                for (int j = 0; j < k; ++j) p.push_back(rv * dir[j]);
                std::vector<double> vals;
                for (auto& c : input.phi1) vals.push_back(c.eval(p));
                for (auto& row : input.A)
                    for (auto& c : row) vals.push_back(c.eval(p));
                return vals;
            };
            auto v1 = at(u), v2 = at(rotated);
            for (size_t i = 0; i < v1.size(); ++i)
                if (std::abs(v1[i] - v2[i]) > 1e-8)
                    throw NonInvariantInput("value changes under fibre rotation");
        }
        // invariant: evaluate along x = (sqrt(s), 0, ..., 0)
        std::vector<Expr> repl;
        for (int i = 0; i < d; ++i) repl.push_back(Expr::variable(i));
        repl.push_back(Expr::sqrt(Expr::variable(d)));
        for (int j = 1; j < k; ++j) repl.push_back(Expr::constant(0));
        for (auto& c : phi1) c = c.subst(repl);
        for (auto& row : A)
            for (auto& c : row) c = c.subst(repl);
    }

    // lift (t,s) expressions into (t,u,s) indexing
    std::vector<Expr> lift;
    for (int i = 0; i < d; ++i) lift.push_back(Expr::variable(i));
    lift.push_back(Expr::variable(d + k));
    for (auto& c : phi1) c = c.subst(lift);
    for (auto& row : A)
        for (auto& c : row) c = c.subst(lift);

    std::vector<Expr> au(kp, Expr::constant(0));
    for (int i = 0; i < kp; ++i)
        for (int j = 0; j < k; ++j) au[i] = au[i] + A[i][j] * Expr::variable(d + j);
    Expr norm2 = Expr::constant(0);
    for (auto& c : au) norm2 = norm2 + c * c;

    LiftReport report;
    report.map = {d, k, input.target_base_dim, kp, true, {}};
    for (auto& c : phi1) report.map.components.push_back(c);
    for (auto& c : au) report.map.components.push_back(c / Expr::sqrt(norm2));
    report.map.components.push_back(Expr::variable(d + k) * norm2);

    auto phi = detail::assemble_phi(input);
    Rng rng(plan.seed);
    for (int trial = 0; trial < plan.samples; ++trial) {
        std::vector<double> point;
        for (int i = 0; i < d; ++i) point.push_back(rng.uniform(-0.8, 0.8));
        auto u = detail::random_unit_vector(rng, k);
        point.insert(point.end(), u.begin(), u.end());
        double sv = trial % 5 == 0 ? 0.0 : rng.uniform(0.0, 0.8);
        point.push_back(sv);

        std::vector<double> ts(point.begin(), point.begin() + d);
        ts.push_back(0.0);
        if (input.param == LiftParametrization::Radial) ts.resize(d + k, 0.0);
        Eigen::MatrixXd a0(kp, k);
        for (int i = 0; i < kp; ++i)
            for (int j = 0; j < k; ++j) a0(i, j) = input.A[i][j].eval(ts);
        if (smallest_singular_value(a0) <= tol::rank)
            throw DegenerateA("A~(t,0) singular at a sample");

        auto lifted = report.map.apply(point);
        std::vector<double> down(point.begin(), point.begin() + d);
        double root = std::sqrt(sv);
        for (int j = 0; j < k; ++j) down.push_back(root * u[j]);
        double residual = 0;
        for (int i = 0; i < input.target_base_dim; ++i)
            residual = std::max(residual, std::abs(lifted[i] - phi[i].eval(down)));
        for (int i = 0; i < kp; ++i) {
            double xi = lifted[input.target_base_dim + i] * std::sqrt(lifted.back());
            residual = std::max(
                residual, std::abs(xi - phi[input.target_base_dim + i].eval(down)));
        }
        report.max_commute_residual = std::max(report.max_commute_residual, residual);
    }
    return report;
}

// --- symplectic polar correspondence ------------------------------------------

// psi(u,s) = (a(s) u, g(s) s)  <->  phi(z) = sqrt(g(|z|^2)) a(|z|^2) z.
struct PolarDiffeoPair {
    Expr a_re, a_im;  // unit complex, function of s (variable 0)
    Expr g;           // positive, function of s
};

struct PolarReport {
    double max_commute_residual = 0.0;
    double min_jacobian = 0.0;  // d(g(s)s)/ds over the sampled range
    bool diffeo_ok = false;
};

inline PolarReport polar_correspondence(const PolarDiffeoPair& pair, int samples = 50,
                                        uint64_t seed = 11) {
    Rng rng(seed);
    PolarReport report;
    report.min_jacobian = std::numeric_limits<double>::infinity();
    Expr s_var = Expr::variable(0);
    Expr jac = (pair.g * s_var).diff(0);

    for (int trial = 0; trial < samples; ++trial) {
        double s = trial == 0 ? 0.0 : rng.uniform(0.0, 0.9);
        double theta = rng.uniform(0, 6.283185307179586);
        std::vector<double> sv{s};

        double are = pair.a_re.eval(sv), aim = pair.a_im.eval(sv), g = pair.g.eval(sv);
        if (std::abs(are * are + aim * aim - 1.0) > tol::unit)
            throw DomainError("polar pair: a(s) is not unit length");
        if (g <= 0) throw DomainError("polar pair: g(s) is not positive");

        // E(psi(u,s)) with u = e^{i theta}
        double root = std::sqrt(g * s);
        double lhs_re = root * (are * std::cos(theta) - aim * std::sin(theta));
        double lhs_im = root * (are * std::sin(theta) + aim * std::cos(theta));
        // phi(E(u,s)), E(u,s) = sqrt(s) u, |E|^2 = s
        double zr = std::sqrt(s) * std::cos(theta), zi = std::sqrt(s) * std::sin(theta);
        double rootg = std::sqrt(g);
        double rhs_re = rootg * (are * zr - aim * zi);
        double rhs_im = rootg * (are * zi + aim * zr);
        report.max_commute_residual =
            std::max({report.max_commute_residual, std::abs(lhs_re - rhs_re),
                      std::abs(lhs_im - rhs_im)});

        report.min_jacobian = std::min(report.min_jacobian, std::abs(jac.eval(sv)));
    }
    report.diffeo_ok = report.min_jacobian > tol::nondegen;
    return report;
}

// --- numeric smoothness probes -------------------------------------------------

// One-sided difference quotients of s -> f(s) at scales 1e-2..1e-5; divergence
// beyond 1e-2 between consecutive quotients flags nonsmoothness.  A heuristic
// detector, not a decision procedure.
inline constexpr double kProbeJumpThreshold = 1e-2;

inline double max_quotient_jump(const std::function<std::vector<double>(double)>& f,
                                const std::vector<double>& s_scales) {
    std::vector<std::vector<double>> quotients;
    for (size_t l = 0; l + 1 < s_scales.size(); ++l) {
        auto hi = f(s_scales[l]), lo = f(s_scales[l + 1]);
        std::vector<double> q(hi.size());
        for (size_t i = 0; i < hi.size(); ++i)
            q[i] = (hi[i] - lo[i]) / (s_scales[l] - s_scales[l + 1]);
        quotients.push_back(std::move(q));
    }
    double jump = 0;
    for (size_t l = 0; l + 1 < quotients.size(); ++l)
        for (size_t i = 0; i < quotients[l].size(); ++i)
            jump = std::max(jump, std::abs(quotients[l + 1][i] - quotients[l][i]));
    return jump;
}

struct SmoothnessProbe {
    bool smooth = true;
    double max_jump = 0.0;
};

// Probe an equivariant planar map phi (expressions in (u,v)) at the origin:
// smoothness is equivalent to phi(z)/z extending smoothly in s = |z|^2, so the
// radial quotients of phi(z) conj(z)/|z|^2 must stabilize along every ray.
inline SmoothnessProbe probe_equivariant_smooth_at_origin(const Expr& phi_re,
                                                          const Expr& phi_im) {
    SmoothnessProbe probe;
    std::vector<double> scales;
    for (double h : {1e-2, 1e-3, 1e-4, 1e-5}) scales.push_back(h * h);  // s = |z|^2
    for (int ray = 0; ray < 8; ++ray) {
        double angle = 6.283185307179586 * ray / 8.0;
        auto f = [&](double s) {
            double r = std::sqrt(s);
            std::vector<double> zv{r * std::cos(angle), r * std::sin(angle)};
            double pre = phi_re.eval(zv), pim = phi_im.eval(zv);
            // phi(z) conj(z) / |z|^2
            return std::vector<double>{(pre * zv[0] + pim * zv[1]) / s,
                                       (pim * zv[0] - pre * zv[1]) / s};
        };
        probe.max_jump = std::max(probe.max_jump, max_quotient_jump(f, scales));
    }
    probe.smooth = probe.max_jump <= kProbeJumpThreshold;
    return probe;
}

// Probe a lifted-map component list (variables (t,u,s)) for smoothness in s
// along {s=0} at a fixed (t,u).
inline SmoothnessProbe probe_lift_smooth_in_s(const LiftedMap& map,
                                              std::vector<double> t_and_u) {
    SmoothnessProbe probe;
    std::vector<double> scales{1e-2, 1e-3, 1e-4, 1e-5};
    auto f = [&](double s) {
        std::vector<double> p = t_and_u;
        p.push_back(s);
        return map.apply(p);
    };
    probe.max_jump = max_quotient_jump(f, scales);
    probe.smooth = probe.max_jump <= kProbeJumpThreshold;
    return probe;
}

}  // namespace cutkit
