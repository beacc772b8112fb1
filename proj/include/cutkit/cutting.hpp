#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "cutkit/expr.hpp"
#include "cutkit/forms.hpp"
#include "cutkit/verify.hpp"

namespace cutkit {

// --- forms ------------------------------------------------------------------

// The substitutions realizing the quotient on the local model:
//   ds = 2u du + 2v dv,   s dtheta = u dv - v du,   ds ^ dtheta = 2 du ^ dv,
// with s -> |z|^2 = u^2 + v^2 in the coefficients.
inline DiscForm cut_form(const HalfForm& beta) {
    auto basic = is_basic_invariant(beta);
    if (!basic.ok) {
        auto& f = basic.failures.front();
        throw NotBasicInvariant(half_key_str(f.mode) + " (" + f.reason + ")");
    }
    int d = beta.base_dim();
    int theta = d, s_idx = d + 1;

    DiscFunc uu = DiscFunc::u(d), vv = DiscFunc::v(d);
    // ds image: 2u du + 2v dv
    DiscForm ds_image(d, 1);
    ds_image.add_term({d}, Scalar(2) * uu);
    ds_image.add_term({d + 1}, Scalar(2) * vv);
    // s dtheta image: u dv - v du
    DiscForm sdtheta_image(d, 1);
    sdtheta_image.add_term({d + 1}, uu);
    sdtheta_image.add_term({d}, -vv);
    // dtheta ^ ds image: -2 du ^ dv   (from dtheta ^ ds = -(ds ^ dtheta))
    DiscForm dtheta_ds_image(d, 2);
    dtheta_ds_image.add_term({d, d + 1}, DiscFunc::constant(d, Scalar(-2)));

    DiscForm out(d, beta.degree());
    for (auto& [key, coeff] : beta.terms()) {
        bool has_theta = std::find(key.begin(), key.end(), theta) != key.end();
        bool has_s = std::find(key.begin(), key.end(), s_idx) != key.end();
        std::vector<int> base_key;
        for (int idx : key)
            if (idx < d) base_key.push_back(idx);

        HalfFunc cf = (has_theta && !has_s) ? coeff.divided_by_s() : coeff;
        auto verdict = descend_function(cf);
        if (!verdict.descends)
            throw NonDescendingCoefficient(half_key_str(verdict.offending_modes.front()));

        DiscForm base(d, (int)base_key.size());
        base.add_term(base_key, *verdict.image);
        if (has_theta && has_s)
            out = out + wedge(base, dtheta_ds_image);
        else if (has_theta)
            out = out + wedge(base, sdtheta_image);
        else if (has_s)
            out = out + wedge(base, ds_image);
        else
            out = out + base;
    }
    return out;
}

// Restriction of the cut form to M_red = {u = v = 0}: sum b_I(x,0) dx_I.
inline DiscForm reduced_form(const HalfForm& beta) {
    auto basic = is_basic_invariant(beta);
    if (!basic.ok) {
        auto& f = basic.failures.front();
        throw NotBasicInvariant(half_key_str(f.mode) + " (" + f.reason + ")");
    }
    int d = beta.base_dim();
    DiscForm out(d, beta.degree());
    for (auto& [key, coeff] : beta.terms()) {
        if (std::any_of(key.begin(), key.end(), [&](int idx) { return idx >= d; })) continue;
        DiscFunc at_zero(d);
        for (auto& [mode, c] : coeff.terms())
            if (mode.m == 0) at_zero.add_term({mode.alpha, 0, 0}, c);  // s = 0
        out.add_term(key, std::move(at_zero));
    }
    return out;
}

// --- maps -------------------------------------------------------------------

inline std::vector<double> pack(const HalfPoint& p) {
    std::vector<double> v = p.x;
    v.push_back(p.theta);
    v.push_back(p.s);
    return v;
}
inline std::vector<double> pack(const DiscPoint& p) {
    std::vector<double> v = p.x;
    v.push_back(p.u);
    v.push_back(p.v);
    return v;
}

// Equivariant transverse map in normal form
//   (x, a, s) -> (psi_bar(x, s), a b(x, s), s),
// with psi_bar and b expressions in (x_1..x_d, s), s at variable index d.
struct LocalMap {
    int source_dim = 0;
    int target_dim = 0;
    std::vector<Expr> psi_bar;  // target_dim components
    CExpr twist;                // unit complex b(x, s)

    static LocalMap identity(int d) {
        LocalMap m{d, d, {}, CExpr::one()};
        for (int i = 0; i < d; ++i) m.psi_bar.push_back(Expr::variable(i));
        return m;
    }
};

// |b|^2 = 1 at every sample, to tol::unit.
inline void validate_local_map(const LocalMap& map, const std::vector<HalfPoint>& points) {
    if ((int)map.psi_bar.size() != map.target_dim)
        throw ModelMismatch("psi_bar component count != target_dim");
    for (auto& p : points) {
        std::vector<double> xs = p.x;
        xs.push_back(p.s);
        auto b = map.twist.eval(xs);
        if (std::abs(std::norm(b) - 1.0) > tol::unit)
            throw DomainError("twist is not unit-length at a sample");
    }
}

// Induced map of cut spaces, (x, z) -> (psi_bar(x, |z|^2), z b(x, |z|^2)),
// as expressions in (x_1..x_d, u, v).
struct CutMap {
    int source_dim = 0;
    int target_dim = 0;
    std::vector<Expr> components;  // target_dim + 2

    std::vector<double> apply(const DiscPoint& p) const {
        auto in = pack(p);
        std::vector<double> out;
        out.reserve(components.size());
        for (auto& c : components) out.push_back(c.eval(in));
        return out;
    }
};

inline CutMap cut_map(const LocalMap& map) {
    int d = map.source_dim;
    std::vector<Expr> repl;
    for (int i = 0; i < d; ++i) repl.push_back(Expr::variable(i));
    Expr u = Expr::variable(d), v = Expr::variable(d + 1);
    repl.push_back(u * u + v * v);  // s = |z|^2

    CutMap out{map.source_dim, map.target_dim, {}};
    for (auto& comp : map.psi_bar) out.components.push_back(comp.subst(repl));
    CExpr b = map.twist.subst(repl);
    out.components.push_back(u * b.re - v * b.im);
    out.components.push_back(u * b.im + v * b.re);
    return out;
}

inline LocalMap compose_maps(const LocalMap& first, const LocalMap& second) {
    if (first.target_dim != second.source_dim)
        throw ModelMismatch("composition dimension mismatch");
    std::vector<Expr> repl = first.psi_bar;       // x'_j = psi_bar_1(x, s)
    repl.push_back(Expr::variable(first.source_dim));  // s unchanged
    LocalMap out{first.source_dim, second.target_dim, {}, CExpr::one()};
    for (auto& comp : second.psi_bar) out.psi_bar.push_back(comp.subst(repl));
    out.twist = second.twist.subst(repl) * first.twist;
    return out;
}

// Chart Jacobian of the full map (x, theta, s) -> (x', theta', s'), in
// variables (x_1..x_d, theta, s).  The theta' row uses
// d(arg b) = (b_re db_im - b_im db_re) / |b|^2.
inline std::vector<std::vector<Expr>> local_map_jacobian(const LocalMap& map) {
    int d = map.source_dim, dp = map.target_dim;
    // lift (x, s)-expressions into (x, theta, s) variable indexing
    std::vector<Expr> lift;
    for (int i = 0; i < d; ++i) lift.push_back(Expr::variable(i));
    lift.push_back(Expr::variable(d + 1));  // s moves past theta

    std::vector<std::vector<Expr>> rows(dp + 2, std::vector<Expr>(d + 2, Expr::constant(0)));
    for (int i = 0; i < dp; ++i) {
        for (int j = 0; j < d; ++j) rows[i][j] = map.psi_bar[i].diff(j).subst(lift);
        rows[i][d + 1] = map.psi_bar[i].diff(d).subst(lift);
    }
    Expr norm2 = map.twist.re * map.twist.re + map.twist.im * map.twist.im;
    for (int j = 0; j <= d; ++j) {
        int src = j;  // x_j for j < d, s for j == d
        Expr darg =
            (map.twist.re * map.twist.im.diff(src) - map.twist.im * map.twist.re.diff(src)) /
            norm2;
        rows[dp][j < d ? j : d + 1] = darg.subst(lift);
    }
    rows[dp][d] = Expr::constant(1);      // dtheta'/dtheta
    rows[dp + 1][d + 1] = Expr::constant(1);  // ds'/ds
    return rows;
}

// --- momentum maps and certification ----------------------------------------

// Exact test of the symplectic momentum convention  xi . omega = -d mu.
inline bool momentum_check(const HalfForm& omega, const HalfFunc& mu) {
    if (omega.degree() != 2) throw DomainError("momentum_check needs a 2-form");
    auto lhs = contract(omega.base_dim(), omega);  // action generator d/dtheta
    auto dmu = ext_d(HalfForm::from_func(mu));
    return (lhs + dmu).is_zero();
}

// Contact momentum  mu = xi . beta.
inline HalfFunc contact_momentum(const HalfForm& beta) {
    if (beta.degree() != 1) throw DomainError("contact_momentum needs a 1-form");
    auto contracted = contract(beta.base_dim(), beta);
    auto it = contracted.terms().find({});
    return it == contracted.terms().end() ? HalfFunc(beta.base_dim()) : it->second;
}

inline bool vanishes_on_boundary(const HalfFunc& f) {
    for (auto& [key, c] : f.terms())
        if (key.m == 0) return false;
    return true;
}

// Closed (exact check) and nondegenerate (numeric check) at every sample.
template <class Model>
bool is_symplectic(const FormT<Model>& omega, const std::vector<typename Model::Point>& samples) {
    if (omega.degree() != 2) throw DomainError("is_symplectic needs a 2-form");
    if (omega.total_dim() % 2 != 0) throw DomainError("odd-dimensional model");
    if (!ext_d(omega).is_zero()) return false;
    for (auto& p : samples)
        if (std::abs(two_form_matrix(omega, p).determinant()) <= tol::nondegen) return false;
    return true;
}

// beta ^ (d beta)^n nonvanishing at every sample, dim = 2n + 1.
template <class Model>
bool is_contact(const FormT<Model>& beta, const std::vector<typename Model::Point>& samples) {
    if (beta.degree() != 1) throw DomainError("is_contact needs a 1-form");
    int dim = beta.total_dim();
    if (dim % 2 != 1) throw DomainError("even-dimensional model");
    int n = (dim - 1) / 2;
    auto dbeta = ext_d(beta);
    auto top = beta;
    for (int i = 0; i < n; ++i) top = wedge(top, dbeta);
    for (auto& p : samples) {
        auto vals = eval_at_real(top, p);
        double mag = 0;
        for (auto& [key, v] : vals) mag = std::max(mag, std::abs(v));
        if (mag <= tol::nondegen) return false;
    }
    return true;
}

// Reduced-space variants: the form lives on the x-coordinates only.
inline bool is_symplectic_on_red(const DiscForm& red,
                                 const std::vector<std::vector<double>>& x_samples) {
    int d = red.base_dim();
    if (d % 2 != 0) throw DomainError("odd-dimensional reduced space");
    if (red.degree() != 2) throw DomainError("is_symplectic_on_red needs a 2-form");
    if (!ext_d(red).is_zero()) return false;
    for (auto& x : x_samples) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
        for (auto& [key, val] : eval_at_real(red, DiscPoint{x, 0, 0})) {
            if (key[0] >= d || key[1] >= d) throw DomainError("reduced form touches du/dv");
            m(key[0], key[1]) = val;
            m(key[1], key[0]) = -val;
        }
        if (std::abs(m.determinant()) <= tol::nondegen) return false;
    }
    return true;
}

inline bool is_contact_on_red(const DiscForm& red,
                              const std::vector<std::vector<double>>& x_samples) {
    int d = red.base_dim();
    if (d % 2 != 1) throw DomainError("even-dimensional reduced space");
    if (red.degree() != 1) throw DomainError("is_contact_on_red needs a 1-form");
    int n = (d - 1) / 2;
    auto dred = ext_d(red);
    auto top = red;
    for (int i = 0; i < n; ++i) top = wedge(top, dred);
    std::vector<int> top_key(d);
    for (int i = 0; i < d; ++i) top_key[i] = i;
    for (auto& x : x_samples) {
        auto vals = eval_at_real(top, DiscPoint{x, 0, 0});
        auto it = vals.find(top_key);
        if (it == vals.end() || std::abs(it->second) <= tol::nondegen) return false;
    }
    return true;
}

// --- distributions -----------------------------------------------------------

// Codimension-k distribution presented by annihilating one-forms.
struct DistributionFrame {
    std::vector<HalfForm> annihilator;
    int codim() const { return (int)annihilator.size(); }
};

struct CutDistributionReport {
    std::vector<DiscForm> cut_frame;
    bool transverse_to_boundary = false;
    bool involutive_before = false;
    bool involutive_after = false;
    std::optional<bool> contact_before;  // only codim 1 on odd-dimensional models
    std::optional<bool> contact_after;
};

inline CutDistributionReport cut_distribution(const DistributionFrame& frame,
                                              const SamplePlan& plan) {
    if (frame.annihilator.empty()) throw DomainError("empty frame");
    int d = frame.annihilator.front().base_dim();
    auto points = plan.half_points();

    HalfForm wedge_all = frame.annihilator.front();
    for (size_t j = 1; j < frame.annihilator.size(); ++j)
        wedge_all = wedge(wedge_all, frame.annihilator[j]);

    for (auto& p : points) {
        double mag = 0;
        for (auto& [key, v] : eval_at_real(wedge_all, p)) mag = std::max(mag, std::abs(v));
        if (mag <= tol::nondegen) {
            std::ostringstream os;
            os << "at (theta=" << p.theta << ", s=" << p.s << ")";
            throw DegenerateFrame(os.str());
        }
    }

    CutDistributionReport report;

    // Transversality to the boundary: ds stays independent of the annihilator,
    // i.e. the wedge with ds survives at s = 0 samples.
    auto with_ds = wedge(wedge_all, HalfForm::basis(d, {d + 1}));
    report.transverse_to_boundary = !with_ds.is_zero();
    if (report.transverse_to_boundary) {
        for (auto& p : points) {
            if (p.s != 0.0) continue;
            double mag = 0;
            for (auto& [key, v] : eval_at_real(with_ds, p)) mag = std::max(mag, std::abs(v));
            if (mag <= tol::nondegen) report.transverse_to_boundary = false;
        }
    }

    for (auto& beta : frame.annihilator) report.cut_frame.push_back(cut_form(beta));

    auto involutive = [](const auto& forms, const auto& wedged) {
        for (auto& beta : forms)
            if (!wedge(ext_d(beta), wedged).is_zero()) return false;
        return true;
    };
    DiscForm cut_wedge_all = report.cut_frame.front();
    for (size_t j = 1; j < report.cut_frame.size(); ++j)
        cut_wedge_all = wedge(cut_wedge_all, report.cut_frame[j]);
    report.involutive_before = involutive(frame.annihilator, wedge_all);
    report.involutive_after = involutive(report.cut_frame, cut_wedge_all);

    if (frame.codim() == 1 && (d + 2) % 2 == 1) {
        report.contact_before = is_contact(frame.annihilator.front(), points);
        report.contact_after = is_contact(report.cut_frame.front(), plan.disc_points());
    }
    return report;
}

}  // namespace cutkit
