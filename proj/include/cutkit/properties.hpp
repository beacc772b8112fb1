#pragma once

#include <functional>
#include <map>

#include "cutkit/blowup.hpp"
#include "cutkit/cutting.hpp"

namespace cutkit {

// --- deterministic random generators -----------------------------------------

struct FuncGenOptions {
    bool invariant = false;      // k = 0 only
    bool even_m = false;         // stay in the smooth class (safe to differentiate)
    bool divisible_by_s = false; // every m >= 2
    int max_terms = 3;
    int max_m = 6;
    int max_k = 3;
};

inline HalfFunc gen_half_func(Rng& rng, int d, const FuncGenOptions& opt = {}) {
    HalfFunc f(d);
    int terms = rng.uniform_int(1, opt.max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> alpha(d);
        for (auto& a : alpha) a = (unsigned)rng.uniform_int(0, 2);
        int k = opt.invariant ? 0 : rng.uniform_int(-opt.max_k, opt.max_k);
        int lo = opt.divisible_by_s ? 2 : 0;
        int m = rng.uniform_int(lo, opt.max_m);
        if (opt.even_m && m % 2 == 1) ++m;
        Rat re = rng.small_nonzero_rational();
        if (k == 0) {
            f.add_term({alpha, 0, m}, Scalar(re));
        } else {
            // real combination: c e^{ik t} + conj(c) e^{-ik t}
            CRat c{re, rng.small_rational()};
            f.add_term({alpha, k, m}, Scalar(c));
            f.add_term({alpha, -k, m}, Scalar(c.conj()));
        }
    }
    return f;
}

inline DiscFunc gen_disc_func(Rng& rng, int d, int max_terms = 3) {
    DiscFunc f(d);
    int terms = rng.uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> alpha(d);
        for (auto& a : alpha) a = (unsigned)rng.uniform_int(0, 2);
        unsigned p = (unsigned)rng.uniform_int(0, 3), q = (unsigned)rng.uniform_int(0, 3);
        CRat c{rng.small_nonzero_rational(), rng.small_rational()};
        f.add_term({alpha, p, q}, Scalar(c));
        f.add_term({alpha, q, p}, Scalar(c.conj()));
    }
    return f;
}

inline std::vector<int> gen_key(Rng& rng, int total, int degree) {
    if (degree > total) throw DomainError("key degree exceeds covector count");
    std::vector<int> all(total);
    for (int i = 0; i < total; ++i) all[i] = i;
    for (int i = total - 1; i > 0; --i) std::swap(all[i], all[rng.uniform_int(0, i)]);
    std::vector<int> key(all.begin(), all.begin() + degree);
    std::sort(key.begin(), key.end());
    return key;
}

inline HalfForm gen_half_form(Rng& rng, int d, int degree, const FuncGenOptions& opt = {},
                              int max_terms = 6) {
    HalfForm form(d, degree);
    int terms = rng.uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t)
        form.add_term(gen_key(rng, d + 2, degree), gen_half_func(rng, d, opt));
    return form;
}

inline DiscForm gen_disc_form(Rng& rng, int d, int degree, int max_terms = 6) {
    DiscForm form(d, degree);
    int terms = rng.uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t)
        form.add_term(gen_key(rng, d + 2, degree), gen_disc_func(rng, d));
    return form;
}

// Constructive basic-invariant form: invariant even-m coefficients, and any
// dtheta term without ds pre-multiplied by s.
inline HalfForm gen_basic_invariant_form(Rng& rng, int d, int degree, int max_terms = 6) {
    HalfForm form(d, degree);
    FuncGenOptions opt;
    opt.invariant = true;
    opt.even_m = true;
    opt.max_m = 4;
    int terms = rng.uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        auto key = gen_key(rng, d + 2, degree);
        bool theta_only = std::find(key.begin(), key.end(), d) != key.end() &&
                          std::find(key.begin(), key.end(), d + 1) == key.end();
        HalfFunc coeff = gen_half_func(rng, d, opt);
        form.add_term(key, theta_only ? coeff.times_s() : coeff);
    }
    return form;
}

inline LocalMap gen_local_map(Rng& rng, int d, int dp) {
    LocalMap map{d, dp, {}, CExpr::one()};
    Expr s = Expr::variable(d);
    for (int i = 0; i < dp; ++i) {
        Expr comp = Expr::constant(rng.small_rational());
        for (int j = 0; j < d; ++j) {
            Expr xj = Expr::variable(j);
            comp = comp + Expr::constant(rng.small_rational()) * xj;
            if (rng.uniform_int(0, 2) == 0)
                comp = comp + Expr::constant(Rat(rng.uniform_int(-1, 1), 4)) * xj * xj;
        }
        comp = comp + Expr::constant(rng.small_rational()) * s;
        map.psi_bar.push_back(comp);
    }
    Expr phase = Expr::constant(rng.small_rational()) + Expr::constant(rng.small_rational()) * s;
    if (d > 0) phase = phase + Expr::constant(rng.small_rational()) * Expr::variable(0);
    map.twist = CExpr::unit_phase(phase);
    return map;
}

// Linear part of fixed rank r, plus s-dependence and a twist.
inline LocalMap gen_local_map_with_rank(Rng& rng, int d, int dp, int r) {
    LocalMap map{d, dp, {}, CExpr::one()};
    Expr s = Expr::variable(d);
    std::vector<std::vector<int>> linear(dp, std::vector<int>(d, 0));
    for (int i = 0; i < r; ++i) linear[i][i] = rng.uniform_int(1, 2);
    // mix rows a little without changing the rank
    for (int i = r; i < dp && r > 0; ++i) linear[i] = linear[rng.uniform_int(0, r - 1)];
    for (int i = 0; i < dp; ++i) {
        Expr comp = Expr::constant(0);
        for (int j = 0; j < d; ++j)
            comp = comp + Expr::constant(linear[i][j]) * Expr::variable(j);
        comp = comp + Expr::constant(rng.small_rational()) * s;
        map.psi_bar.push_back(comp);
    }
    map.twist = CExpr::unit_phase(Expr::constant(rng.small_rational()) * s);
    return map;
}

// --- property helpers ----------------------------------------------------------

namespace props {

using Property = std::function<CheckResult(uint64_t seed, int trials)>;

inline CheckResult make_result(const std::string& name, uint64_t seed, int trials) {
    CheckResult r;
    r.name = name;
    r.seed = seed;
    r.trials = trials;
    return r;
}

// Greedy term-dropping shrink for half-form counterexamples: keep removing
// terms while the predicate still fails.
inline HalfForm shrink_failing_form(HalfForm form,
                                    const std::function<bool(const HalfForm&)>& passes) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto& [key, coeff] : form.terms()) {
            HalfForm candidate(form.base_dim(), form.degree());
            for (auto& [k2, c2] : form.terms())
                if (k2 != key) candidate.add_term(k2, c2);
            if (candidate.is_zero()) continue;
            if (!passes(candidate)) {
                form = candidate;
                shrunk = true;
                break;
            }
        }
    }
    return form;
}

inline void run_form_identity(CheckResult& result, uint64_t seed, int trials, int max_degree,
                              const std::function<HalfForm(Rng&, int d, int degree)>& gen,
                              const std::function<bool(const HalfForm&)>& passes) {
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int d = rng.uniform_int(0, 3);
        int degree = rng.uniform_int(0, std::min(d + 2, max_degree));
        HalfForm form = gen(rng, d, degree);
        if (form.is_zero()) continue;
        if (!passes(form)) {
            auto shrunk = shrink_failing_form(form, passes);
            result.fail({"counterexample (shrunk): " + shrunk.str(), {}, 0.0});
            return;
        }
    }
}

// --- funcalg properties -----

inline CheckResult descent_lift_roundtrip(uint64_t seed, int trials) {
    auto result = make_result("descent_lift_roundtrip", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        DiscFunc g = gen_disc_func(rng, d);
        auto verdict = descend_function(lift_function(g));
        if (!verdict.descends || !(*verdict.image == g)) {
            result.fail({"lift/descend mismatch for " + g.str(), {}, 0.0});
            return result;
        }
    }
    return result;
}

inline CheckResult descent_ring_hom(uint64_t seed, int trials) {
    auto result = make_result("descent_ring_hom", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 2);
        DiscFunc g1 = gen_disc_func(rng, d), g2 = gen_disc_func(rng, d);
        HalfFunc f1 = lift_function(g1), f2 = lift_function(g2);
        auto sum = descend_function(f1 + f2);
        auto prod = descend_function(f1 * f2);
        if (!sum.descends || !(*sum.image == g1 + g2)) {
            result.fail({"descent not additive", {}, 0.0});
            return result;
        }
        if (!prod.descends || !(*prod.image == g1 * g2)) {
            result.fail({"descent not multiplicative", {}, 0.0});
            return result;
        }
    }
    return result;
}

inline CheckResult rescale_verdict_invariance(uint64_t seed, int trials) {
    auto result = make_result("rescale_verdict_invariance", seed, trials);
    Rng rng(seed);
    const Rat lambdas[] = {Rat(2), Rat(3), Rat(4), Rat(9, 4), Rat(1, 2), Rat(5)};
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 2);
        HalfFunc f = gen_half_func(rng, d);
        const Rat& lambda = lambdas[rng.uniform_int(0, 5)];
        HalfFunc scaled = rescale_boundary_function(f, lambda);
        auto v1 = descend_function(f), v2 = descend_function(scaled);
        if (v1.descends != v2.descends || v1.offending_modes != v2.offending_modes) {
            result.fail({"verdict changed under rescale of " + f.str(), {}, 0.0});
            return result;
        }
        if (is_smooth_on_half(f) != is_smooth_on_half(scaled) ||
            is_invariant(f) != is_invariant(scaled)) {
            result.fail({"class predicates changed under rescale", {}, 0.0});
            return result;
        }
    }
    return result;
}

// --- forms properties -----

inline CheckResult dd_zero_half(uint64_t seed, int trials) {
    auto result = make_result("dd_zero_half", seed, trials);
    FuncGenOptions opt;
    opt.even_m = true;
    run_form_identity(result, seed, trials, 4,
                      [&](Rng& rng, int d, int k) { return gen_half_form(rng, d, k, opt); },
                      [](const HalfForm& f) { return ext_d(ext_d(f)).is_zero(); });
    return result;
}

inline CheckResult dd_zero_disc(uint64_t seed, int trials) {
    auto result = make_result("dd_zero_disc", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int degree = rng.uniform_int(0, d + 2);
        DiscForm form = gen_disc_form(rng, d, degree);
        if (!ext_d(ext_d(form)).is_zero()) {
            result.fail({"dd != 0 for " + form.str(), {}, 0.0});
            return result;
        }
    }
    return result;
}

inline CheckResult graded_leibniz(uint64_t seed, int trials) {
    auto result = make_result("graded_leibniz", seed, trials);
    Rng rng(seed);
    FuncGenOptions opt;
    opt.even_m = true;
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int ka = rng.uniform_int(0, 2), kb = rng.uniform_int(0, 2);
        HalfForm a = gen_half_form(rng, d, ka, opt, 3), b = gen_half_form(rng, d, kb, opt, 3);
        HalfForm lhs = ext_d(wedge(a, b));
        HalfForm rhs = wedge(ext_d(a), b) +
                       (ka % 2 == 0 ? wedge(a, ext_d(b)) : -wedge(a, ext_d(b)));
        if (!(lhs == rhs)) {
            result.fail({"Leibniz failure, a=" + a.str() + " b=" + b.str(), {}, 0.0});
            return result;
        }
    }
    return result;
}

inline CheckResult cartan_invariance(uint64_t seed, int trials) {
    auto result = make_result("cartan_invariance", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int degree = rng.uniform_int(0, d + 2);
        FuncGenOptions opt;
        opt.even_m = true;
        opt.invariant = rng.uniform_int(0, 1) == 0;
        HalfForm form = gen_half_form(rng, d, degree, opt);
        bool all_k_zero = true;
        for (auto& [key, coeff] : form.terms())
            for (auto& [mode, c] : coeff.terms())
                if (mode.k != 0) all_k_zero = false;
        bool lie_zero = lie_derivative(d, form).is_zero();
        if (lie_zero != all_k_zero) {
            result.fail({"invariance mismatch: " + form.str(), {}, 0.0});
            return result;
        }
    }
    return result;
}

// Symbolic exterior derivative vs central finite differences of the
// coefficient functions.
inline CheckResult ext_d_fd_crosscheck(uint64_t seed, int trials) {
    auto result = make_result("ext_d_fd_crosscheck", seed, trials);
    result.tolerances["derivative"] = tol::deriv;
    Rng rng(seed);
    const double h = 1e-4;
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 2);
        int degree = rng.uniform_int(0, d + 1);
        FuncGenOptions opt;
        opt.even_m = true;
        HalfForm form = gen_half_form(rng, d, degree, opt, 3);
        HalfForm dform = ext_d(form);

        for (int pt = 0; pt < 20; ++pt) {
            HalfPoint p;
            for (int i = 0; i < d; ++i) p.x.push_back(rng.uniform(-0.7, 0.7));
            p.theta = rng.uniform(0, 6.28);
            p.s = rng.uniform(0.1, 0.8);

            std::map<std::vector<int>, std::complex<double>> fd;
            for (auto& [key, coeff] : form.terms()) {
                for (int v = 0; v < d + 2; ++v) {
                    if (std::find(key.begin(), key.end(), v) != key.end()) continue;
                    HalfPoint hi = p, lo = p;
                    double* hi_slot = v < d ? &hi.x[v] : (v == d ? &hi.theta : &hi.s);
                    double* lo_slot = v < d ? &lo.x[v] : (v == d ? &lo.theta : &lo.s);
                    *hi_slot += h;
                    *lo_slot -= h;
                    auto quotient = (coeff.eval(hi) - coeff.eval(lo)) / (2 * h);
                    std::vector<int> new_key{v};
                    new_key.insert(new_key.end(), key.begin(), key.end());
                    int sign = detail::sort_key(new_key);
                    fd[new_key] += double(sign) * quotient;
                }
            }
            auto symbolic = dform.eval_at(p);
            for (auto& [key, val] : fd)
                if (std::abs(val - (symbolic.count(key) ? symbolic[key] : 0.0)) > tol::deriv) {
                    result.fail({"d vs finite differences at term", pack(p),
                                 std::abs(val - symbolic[key])});
                    return result;
                }
        }
    }
    return result;
}

// --- cutting properties -----

inline CheckResult d_commutes_cut(uint64_t seed, int trials) {
    auto result = make_result("d_commutes_cut", seed, trials);
    run_form_identity(
        result, seed, trials, 3,
        [](Rng& rng, int d, int k) { return gen_basic_invariant_form(rng, d, k); },
        [](const HalfForm& f) { return cut_form(ext_d(f)) == ext_d(cut_form(f)); });
    return result;
}

inline CheckResult wedge_commutes_cut(uint64_t seed, int trials) {
    auto result = make_result("wedge_commutes_cut", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int ka = rng.uniform_int(0, 2), kb = rng.uniform_int(0, 2);
        HalfForm a = gen_basic_invariant_form(rng, d, ka, 3);
        HalfForm b = gen_basic_invariant_form(rng, d, kb, 3);
        if (!(cut_form(wedge(a, b)) == wedge(cut_form(a), cut_form(b)))) {
            result.fail({"wedge naturality failure: a=" + a.str() + " b=" + b.str(), {}, 0.0});
            return result;
        }
    }
    return result;
}

inline CheckResult closed_iff_cut(uint64_t seed, int trials) {
    auto result = make_result("closed_iff_cut", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int degree = rng.uniform_int(0, 2);
        HalfForm form = gen_basic_invariant_form(rng, d, degree);
        if (rng.uniform_int(0, 1) == 0) form = ext_d(form);  // exercise the closed branch
        bool closed_half = ext_d(form).is_zero();
        bool closed_disc = ext_d(cut_form(form)).is_zero();
        if (closed_half != closed_disc) {
            result.fail({"closedness not preserved: " + form.str(), {}, 0.0});
            return result;
        }
    }
    return result;
}

// At a boundary point, the Hadamard-bucket coefficients (beta_k, beta_{k-1},
// beta_{k-2}) and their descended images (beta_l)cut vanish together: both
// routes evaluate the same b_I(x,0), through the half-model evaluator and
// through descent plus the disc evaluator.  The s beta^ dtheta bucket dies on
// both sides and is excluded.
inline CheckResult nonzero_boundary(uint64_t seed, int trials) {
    auto result = make_result("nonzero_boundary", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int degree = rng.uniform_int(0, 2);
        HalfForm form = gen_basic_invariant_form(rng, d, degree, 1);
        for (int pt = 0; pt < 20; ++pt) {
            HalfPoint p;
            for (int i = 0; i < d; ++i) p.x.push_back(rng.uniform(-0.8, 0.8));
            p.theta = rng.uniform(0, 6.28);
            p.s = 0.0;
            DiscPoint q = to_disc(p);
            double half_mag = 0, cut_mag = 0;
            for (auto& [key, coeff] : form.terms()) {
                bool theta_only =
                    std::find(key.begin(), key.end(), d) != key.end() &&
                    std::find(key.begin(), key.end(), d + 1) == key.end();
                if (theta_only) continue;
                half_mag = std::max(half_mag, std::abs(coeff.eval(p)));
                auto verdict = descend_function(coeff);
                cut_mag = std::max(cut_mag, std::abs(verdict.image->eval(q)));
            }
            if ((half_mag < 1e-12) != (cut_mag < 1e-12)) {
                result.fail({"boundary vanishing mismatch: " + form.str(), pack(p),
                             std::abs(half_mag - cut_mag)});
                return result;
            }
        }
    }
    return result;
}

// Restriction of the cut form to {u = v = 0} with du = dv = 0.
inline DiscForm restrict_to_red(const DiscForm& form) {
    int d = form.base_dim();
    DiscForm out(d, form.degree());
    for (auto& [key, coeff] : form.terms()) {
        if (std::any_of(key.begin(), key.end(), [&](int idx) { return idx >= d; })) continue;
        DiscFunc at_zero(d);
        for (auto& [mode, c] : coeff.terms())
            if (mode.p == 0 && mode.q == 0) at_zero.add_term(mode, c);
        out.add_term(key, std::move(at_zero));
    }
    return out;
}

inline CheckResult reduction_compat(uint64_t seed, int trials) {
    auto result = make_result("reduction_compat", seed, trials);
    run_form_identity(
        result, seed, trials, 3,
        [](Rng& rng, int d, int k) { return gen_basic_invariant_form(rng, d, k); },
        [](const HalfForm& f) { return restrict_to_red(cut_form(f)) == reduced_form(f); });
    return result;
}

inline CheckResult symplectic_reduction(uint64_t seed, int trials) {
    auto result = make_result("symplectic_reduction", seed, trials);
    Rng rng(seed);
    int tested = 0;
    for (int t = 0; t < trials; ++t) {
        int d = 2;
        HalfForm omega(d, 2);
        omega.add_term({0, 1}, HalfFunc::constant(d, Scalar(1)));
        omega.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));  // ds ^ dtheta
        HalfForm eta = gen_basic_invariant_form(rng, d, 1, 2);
        omega = omega + Scalar(Rat(1, 8)) * ext_d(eta);  // closed basic perturbation

        SamplePlan plan{.base_dim = d, .interior = 10, .boundary = 5, .near_boundary = 5,
                        .seed = seed + t};
        if (!is_symplectic(omega, plan.half_points())) continue;  // perturbation too large
        ++tested;
        std::vector<std::vector<double>> xs;
        for (auto& p : plan.half_points()) xs.push_back(p.x);
        if (!is_symplectic_on_red(reduced_form(omega), xs)) {
            result.fail({"reduced form not symplectic: " + omega.str(), {}, 0.0});
            return result;
        }
        if (!is_symplectic(cut_form(omega), plan.disc_points())) {
            result.fail({"cut form not symplectic: " + omega.str(), {}, 0.0});
            return result;
        }
    }
    if (tested == 0) {
        result.status = CheckResult::Status::Error;
        result.message = "no nondegenerate samples generated";
    }
    return result;
}

inline CheckResult contact_reduction(uint64_t seed, int trials) {
    auto result = make_result("contact_reduction", seed, trials);
    Rng rng(seed);
    int tested = 0;
    for (int t = 0; t < trials; ++t) {
        int d = 1;
        HalfForm beta(d, 1);
        beta.add_term({0}, HalfFunc::constant(d, Scalar(1)));
        beta.add_term({d}, HalfFunc::s(d));  // dx + s dtheta
        FuncGenOptions opt;
        opt.invariant = true;
        opt.even_m = true;
        opt.max_m = 2;
        HalfForm perturbation(d, 1);
        perturbation.add_term({0}, Scalar(Rat(1, 8)) * gen_half_func(rng, d, opt));
        beta = beta + perturbation;

        SamplePlan plan{.base_dim = d, .interior = 10, .boundary = 5, .near_boundary = 5,
                        .seed = seed + t};
        if (!is_contact(beta, plan.half_points())) continue;
        ++tested;
        std::vector<std::vector<double>> xs;
        for (auto& p : plan.half_points()) xs.push_back(p.x);
        if (!is_contact_on_red(reduced_form(beta), xs)) {
            result.fail({"reduced form not contact: " + beta.str(), {}, 0.0});
            return result;
        }
        if (!is_contact(cut_form(beta), plan.disc_points())) {
            result.fail({"cut form not contact: " + beta.str(), {}, 0.0});
            return result;
        }
    }
    if (tested == 0) {
        result.status = CheckResult::Status::Error;
        result.message = "no contact samples generated";
    }
    return result;
}

inline CheckResult functoriality_maps(uint64_t seed, int trials) {
    auto result = make_result("functoriality_maps", seed, trials);
    result.tolerances["commute"] = tol::commute;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d1 = rng.uniform_int(0, 2), d2 = rng.uniform_int(0, 2), d3 = rng.uniform_int(0, 2);
        LocalMap psi1 = gen_local_map(rng, d1, d2);
        LocalMap psi2 = gen_local_map(rng, d2, d3);
        CutMap lhs = cut_map(compose_maps(psi1, psi2));
        CutMap c1 = cut_map(psi1), c2 = cut_map(psi2);
        for (int pt = 0; pt < 50; ++pt) {
            DiscPoint p;
            for (int i = 0; i < d1; ++i) p.x.push_back(rng.uniform(-0.8, 0.8));
            p.u = rng.uniform(-0.7, 0.7);
            p.v = rng.uniform(-0.7, 0.7);
            auto via_composed = lhs.apply(p);
            auto mid = c1.apply(p);
            DiscPoint midp{std::vector<double>(mid.begin(), mid.end() - 2),
                           mid[mid.size() - 2], mid.back()};
            auto via_two = c2.apply(midp);
            double residual = 0;
            for (size_t i = 0; i < via_two.size(); ++i)
                residual = std::max(residual, std::abs(via_two[i] - via_composed[i]));
            if (residual > tol::commute) {
                result.fail({"functoriality residual", pack(p), residual});
                return result;
            }
        }
    }
    return result;
}

inline CheckResult identity_cut(uint64_t seed, int trials) {
    auto result = make_result("identity_cut", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        CutMap id = cut_map(LocalMap::identity(d));
        for (int pt = 0; pt < 20; ++pt) {
            DiscPoint p;
            for (int i = 0; i < d; ++i) p.x.push_back(rng.uniform(-0.8, 0.8));
            p.u = rng.uniform(-0.7, 0.7);
            p.v = rng.uniform(-0.7, 0.7);
            auto out = id.apply(p);
            auto in = pack(p);
            for (size_t i = 0; i < in.size(); ++i)
                if (std::abs(out[i] - in[i]) > 1e-12) {
                    result.fail({"identity cut differs from identity", in,
                                 std::abs(out[i] - in[i])});
                    return result;
                }
        }
    }
    return result;
}

inline CheckResult rank_preservation(uint64_t seed, int trials) {
    auto result = make_result("rank_preservation", seed, trials);
    result.tolerances["rank"] = tol::rank;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(1, 3), dp = rng.uniform_int(1, 3);
        int r = rng.uniform_int(0, std::min(d, dp));
        LocalMap map = gen_local_map_with_rank(rng, d, dp, r);
        auto jac = local_map_jacobian(map);
        CutMap cut = cut_map(map);
        auto cut_jac = jacobian_exprs(cut.components, d + 2);

        for (int pt = 0; pt < 20; ++pt) {
            HalfPoint p;
            for (int i = 0; i < d; ++i) p.x.push_back(rng.uniform(-0.8, 0.8));
            p.theta = rng.uniform(0, 6.28);
            p.s = 0.0;
            int rank_half = rank_of(eval_matrix(jac, pack(p)));
            int rank_disc = rank_of(eval_matrix(cut_jac, pack(to_disc(p))));
            bool immersion_half = rank_half == d + 2, immersion_disc = rank_disc == d + 2;
            bool submersion_half = rank_half == dp + 2, submersion_disc = rank_disc == dp + 2;
            if (rank_half != r + 2 || rank_disc != r + 2 ||
                immersion_half != immersion_disc || submersion_half != submersion_disc) {
                result.fail({"rank mismatch half=" + std::to_string(rank_half) +
                                 " disc=" + std::to_string(rank_disc) +
                                 " expected=" + std::to_string(r + 2),
                             pack(p), 0.0});
                return result;
            }
        }
    }
    return result;
}

// --- blowup properties -----

inline CheckResult roundtrip_forms(uint64_t seed, int trials) {
    auto result = make_result("roundtrip_forms", seed, trials);
    run_form_identity(
        result, seed, trials, 3,
        [](Rng& rng, int d, int k) { return gen_basic_invariant_form(rng, d, k); },
        [](const HalfForm& f) { return roundtrip_check(f); });
    return result;
}

inline CheckResult roundtrip_disc(uint64_t seed, int trials) {
    auto result = make_result("roundtrip_disc", seed, trials);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(0, 3);
        int degree = rng.uniform_int(0, std::min(3, d + 2));
        DiscForm gamma = cut_form(gen_basic_invariant_form(rng, d, degree));
        if (gamma.is_zero()) continue;
        if (!roundtrip_check_disc(gamma)) {
            result.fail({"cut-then-pullback differs: " + gamma.str(), {}, 0.0});
            return result;
        }
    }
    // du alone is not in the image of a smooth form
    try {
        blowup_pullback(DiscForm::basis(0, {0}));
        result.fail({"pullback of du failed to reject", {}, 0.0});
    } catch (const ResidualNegativePower&) {
    }
    return result;
}

inline CheckResult lift_radial_commute(uint64_t seed, int trials) {
    auto result = make_result("lift_radial_commute", seed, trials);
    result.tolerances["commute"] = tol::commute;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        BlowupLiftInput input;
        input.base_dim = rng.uniform_int(1, 2);
        input.fiber_dim = 2;
        input.target_base_dim = input.base_dim;
        input.target_fiber_dim = 2;
        int d = input.base_dim;
        for (int i = 0; i < d; ++i) {
            Expr comp = Expr::variable(i);
            for (int j = 0; j < 2; ++j)
                comp = comp + Expr::constant(rng.small_rational()) * Expr::variable(d + j);
            input.phi1.push_back(comp);
        }
        // dominant diagonal plus small x-dependent perturbation keeps A(t,0)
        // away from the singular locus
        Rat c(rng.uniform_int(1, 3));
        Expr pert = Expr::constant(Rat(1, 8)) * Expr::variable(d);
        Expr off1 = Expr::constant(Rat(rng.uniform_int(-1, 1), 4));
        Expr off2 = Expr::constant(Rat(rng.uniform_int(-1, 1), 4));
        input.A = {{Expr::constant(c) + pert, off1},
                   {off2, Expr::constant(c) + pert}};
        auto report = lift_map_radial(input, {100, seed + t});
        if (report.max_commute_residual > tol::commute) {
            result.fail({"radial lift square residual", {}, report.max_commute_residual});
            return result;
        }
        if (report.min_boundary_slope <= 0) {
            result.fail({"boundary-defining slope not positive", {}, report.min_boundary_slope});
            return result;
        }
    }
    return result;
}

inline CheckResult lift_squared_commute(uint64_t seed, int trials) {
    auto result = make_result("lift_squared_commute", seed, trials);
    result.tolerances["commute"] = tol::commute;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        BlowupLiftInput input;
        input.base_dim = rng.uniform_int(1, 2);
        input.fiber_dim = 2;
        input.target_base_dim = input.base_dim;
        input.target_fiber_dim = 2;
        input.param = LiftParametrization::Invariant;
        int d = input.base_dim;
        Expr s = Expr::variable(d);
        for (int i = 0; i < d; ++i)
            input.phi1.push_back(Expr::variable(i) +
                                 Expr::constant(rng.small_rational()) * s);
        Rat c(rng.uniform_int(1, 3));
        Expr diag = Expr::constant(c) + Expr::constant(Rat(1, 8)) * s;
        input.A = {{diag, Expr::constant(0)}, {Expr::constant(0), diag}};
        auto report = lift_map_radial_squared(input, {100, seed + t});
        if (report.max_commute_residual > tol::commute) {
            result.fail({"squared lift square residual", {}, report.max_commute_residual});
            return result;
        }
    }
    return result;
}

inline BlowupLiftInput shear_input() {
    BlowupLiftInput input;
    input.base_dim = 1;
    input.fiber_dim = 2;
    input.target_base_dim = 1;
    input.target_fiber_dim = 2;
    input.phi1 = {Expr::variable(0) + Expr::variable(1)};  // t + L(x), L = x_1
    input.A = {{Expr::constant(1), Expr::constant(0)},
               {Expr::constant(0), Expr::constant(1)}};
    return input;
}

inline CheckResult shear_counterexample(uint64_t seed, int trials) {
    auto result = make_result("shear_counterexample", seed, trials);
    auto input = shear_input();
    auto radial = lift_map_radial(input, {50, seed});
    if (radial.max_commute_residual > tol::commute) {
        result.fail({"radial lift of the shear should commute", {}, radial.max_commute_residual});
        return result;
    }
    bool rejected = false;
    try {
        lift_map_radial_squared(input, {50, seed});
    } catch (const NonInvariantInput&) {
        rejected = true;
    }
    if (!rejected) {
        result.fail({"squared lift accepted the non-equivariant shear", {}, 0.0});
        return result;
    }
    // the would-be lift (t + sqrt(s) u_1, u, s) is not smooth along s = 0
    LiftedMap would_be{1, 2, 1, 2, true,
                       {Expr::variable(0) + Expr::sqrt(Expr::variable(3)) * Expr::variable(1),
                        Expr::variable(1), Expr::variable(2), Expr::variable(3)}};
    auto probe = probe_lift_smooth_in_s(would_be, {0.3, 1.0, 0.0});
    if (probe.smooth) {
        result.fail({"smoothness probe missed the sqrt(s) shear", {}, probe.max_jump});
        return result;
    }
    return result;
}

inline CheckResult polar_correspondence_suite(uint64_t seed, int trials) {
    auto result = make_result("polar_correspondence_suite", seed, trials);
    result.tolerances["commute"] = tol::commute;
    Expr s = Expr::variable(0);
    // a = e^{is}, g = 1 + s/2
    PolarDiffeoPair pair{Expr::cos(s), Expr::sin(s),
                         Expr::constant(1) + Expr::constant(Rat(1, 2)) * s};
    auto report = polar_correspondence(pair, 50, seed);
    if (report.max_commute_residual > tol::commute || !report.diffeo_ok) {
        result.fail({"polar correspondence residual", {}, report.max_commute_residual});
        return result;
    }
    // phi(z) = z e^{i|z|^2} is smooth; phi(z) = z e^{i|z|} is not
    Expr u = Expr::variable(0), v = Expr::variable(1);
    Expr s2 = u * u + v * v;
    Expr r = Expr::sqrt(s2);
    auto smooth = probe_equivariant_smooth_at_origin(u * Expr::cos(s2) - v * Expr::sin(s2),
                                                     u * Expr::sin(s2) + v * Expr::cos(s2));
    auto rough = probe_equivariant_smooth_at_origin(u * Expr::cos(r) - v * Expr::sin(r),
                                                    u * Expr::sin(r) + v * Expr::cos(r));
    if (!smooth.smooth) {
        result.fail({"probe rejected the smooth equivariant map", {}, smooth.max_jump});
        return result;
    }
    if (rough.smooth) {
        result.fail({"probe accepted z e^{i|z|}", {}, rough.max_jump});
        return result;
    }
    return result;
}

inline CheckResult jacobian_fd_agreement(uint64_t seed, int trials) {
    auto result = make_result("jacobian_fd_agreement", seed, trials);
    result.tolerances["derivative"] = tol::deriv;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int d = rng.uniform_int(1, 3);
        LocalMap map = gen_local_map(rng, d, rng.uniform_int(1, 3));
        CutMap cut = cut_map(map);
        for (int pt = 0; pt < 5; ++pt) {
            std::vector<double> p;
            for (int i = 0; i < d + 2; ++i) p.push_back(rng.uniform(-0.6, 0.6));
            auto sym = jacobian_at(cut.components, d + 2, p);
            auto fd = fd_jacobian_at(cut.components, d + 2, p);
            if ((sym - fd).cwiseAbs().maxCoeff() > tol::deriv) {
                result.fail({"jacobian disagreement", p, (sym - fd).cwiseAbs().maxCoeff()});
                return result;
            }
        }
    }
    return result;
}

// --- registry -----

inline const std::map<std::string, Property>& property_registry() {
    static const std::map<std::string, Property> registry = {
        {"descent_lift_roundtrip", descent_lift_roundtrip},
        {"descent_ring_hom", descent_ring_hom},
        {"rescale_verdict_invariance", rescale_verdict_invariance},
        {"dd_zero_half", dd_zero_half},
        {"dd_zero_disc", dd_zero_disc},
        {"graded_leibniz", graded_leibniz},
        {"cartan_invariance", cartan_invariance},
        {"ext_d_fd_crosscheck", ext_d_fd_crosscheck},
        {"d_commutes_cut", d_commutes_cut},
        {"wedge_commutes_cut", wedge_commutes_cut},
        {"closed_iff_cut", closed_iff_cut},
        {"nonzero_boundary", nonzero_boundary},
        {"reduction_compat", reduction_compat},
        {"symplectic_reduction", symplectic_reduction},
        {"contact_reduction", contact_reduction},
        {"functoriality_maps", functoriality_maps},
        {"identity_cut", identity_cut},
        {"rank_preservation", rank_preservation},
        {"roundtrip_forms", roundtrip_forms},
        {"roundtrip_disc", roundtrip_disc},
        {"lift_radial_commute", lift_radial_commute},
        {"lift_squared_commute", lift_squared_commute},
        {"shear_counterexample", shear_counterexample},
        {"polar_correspondence_suite", polar_correspondence_suite},
        {"jacobian_fd_agreement", jacobian_fd_agreement},
    };
    return registry;
}

inline CheckResult run_property(const std::string& name, uint64_t seed, int trials) {
    auto& registry = property_registry();
    auto it = registry.find(name);
    if (it == registry.end()) throw UnknownProperty(name);
    try {
        return it->second(seed, trials);
    } catch (const Error& err) {
        auto result = make_result(name, seed, trials);
        result.status = CheckResult::Status::Error;
        result.message = err.what();
        return result;
    }
}

}  // namespace props
}  // namespace cutkit
