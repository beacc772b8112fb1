// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each.  argv[1] is the path to the cutkit binary (used by
// the determinism criterion).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cutkit/corpus.hpp"
#include "cutkit/io.hpp"
#include "cutkit/properties.hpp"
#include "cutkit/scenario.hpp"
#include "oracle.hpp"

using namespace cutkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, bool passed,
               const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << (passed ? "PASS" : "FAIL") << "] "
              << description;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!passed) ++failures;
}

bool prop_passes(const std::string& name, uint64_t seed, int trials, std::string& detail) {
    auto result = props::run_property(name, seed, trials);
    if (!result.passed()) {
        detail += name + ": " + result.message;
        if (!result.witnesses.empty()) detail += " " + result.witnesses.front().description;
        return false;
    }
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cutkit_bin = argc > 1 ? argv[1] : "";
    const uint64_t seed = 42;

    // 1. exact substitution identities, byte-exact after canonicalization
    {
        int d = 2;
        HalfForm omega(d, 2);
        omega.add_term({d, d + 1}, HalfFunc::constant(d, Scalar(-1)));  // ds ^ dtheta
        DiscForm expected1(d, 2);
        expected1.add_term({d, d + 1}, DiscFunc::constant(d, Scalar(2)));

        HalfForm sdth(d, 1);
        sdth.add_term({d}, HalfFunc::s(d));
        DiscForm expected2(d, 1);
        expected2.add_term({d + 1}, DiscFunc::u(d));
        expected2.add_term({d}, -DiscFunc::v(d));

        HalfForm dx1ds(d, 2);
        dx1ds.add_term({0, d + 1}, HalfFunc::constant(d, Scalar(1)));
        DiscForm expected3(d, 2);
        expected3.add_term({0, d}, Scalar(2) * DiscFunc::u(d));
        expected3.add_term({0, d + 1}, Scalar(2) * DiscFunc::v(d));

        bool ok = to_json(cut_form(omega)).dump() == to_json(expected1).dump() &&
                  to_json(cut_form(sdth)).dump() == to_json(expected2).dump() &&
                  to_json(cut_form(dx1ds)).dump() == to_json(expected3).dump();
        criterion(1, "exact substitution identities for cut_form", ok);
    }

    // 2. naturality of d and wedge under cutting, >= 100 random forms, exact
    {
        std::string detail;
        bool ok = prop_passes("d_commutes_cut", seed, 100, detail) &&
                  prop_passes("wedge_commutes_cut", seed, 100, detail);
        criterion(2, "naturality: cut commutes with d and wedge on 100 random forms", ok,
                  detail);
    }

    // 3. roundtrip suite: pullback o cut = id, cut o pullback = id where defined
    {
        std::string detail;
        bool ok = prop_passes("roundtrip_forms", seed, 100, detail) &&
                  prop_passes("roundtrip_disc", seed, 100, detail);
        criterion(3, "blowup pullback inverts cut_form on 100 random forms", ok, detail);
    }

    // 4. descent criterion vs numeric oracle, all m <= 8, |k| <= 8 (153 cases)
    {
        int cases = 0, agreed = 0;
        std::string mismatch;
        for (int m = 0; m <= 8; ++m)
            for (int k = -8; k <= 8; ++k) {
                ++cases;
                bool lhs = mono_descends(m, k);
                bool rhs = oracle::monomial_descends(m, k);
                if (lhs == rhs)
                    ++agreed;
                else
                    mismatch += " (m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
            }
        criterion(4,
                  "descent criterion agrees with the least-squares oracle on " +
                      std::to_string(cases) + " monomials",
                  cases == 153 && agreed == cases, mismatch);
    }

    // 5. dependence-on-action counterexample family
    {
        auto expand = [](const std::vector<std::pair<int, Rat>>& g) {
            HalfFunc h(0);
            for (auto& [j, c] : g) {
                h.add_term({{}, j + 1, 1}, Scalar(c * Rat(1, 2)));
                h.add_term({{}, j - 1, 1}, Scalar(c * Rat(1, 2)));
            }
            return h;
        };
        using Poly = std::vector<std::pair<int, Rat>>;
        const std::vector<Poly> nonconstant = {
            {{1, Rat(1)}},                 // w
            {{2, Rat(1)}},                 // w^2
            {{3, Rat(1)}},                 // w^3
            {{4, Rat(1)}},                 // w^4
            {{-1, Rat(1)}},                // conj w
            {{-2, Rat(1)}},                // conj w^2
            {{0, Rat(1)}, {1, Rat(1)}},    // 1 + w
            {{0, Rat(1)}, {1, Rat(-1)}},   // 1 - w
            {{1, Rat(1)}, {-1, Rat(1)}},   // w + conj w
            {{0, Rat(2)}, {1, Rat(3)}},    // 2 + 3w
        };
        const std::vector<Poly> constants = {
            {{0, Rat(1)}}, {{0, Rat(2)}}, {{0, Rat(-1, 2)}}};
        bool ok = true;
        for (auto& g : nonconstant) ok = ok && !descend_function(expand(g)).descends;
        for (auto& g : constants) ok = ok && descend_function(expand(g)).descends;
        criterion(5, "g(e^{i theta}) sqrt(s) cos(theta) descends iff g is constant (13 cases)",
                  ok);
    }

    // 6. symplectic/contact certification with degenerate controls
    {
        SamplePlan plan0{.base_dim = 0, .seed = seed};
        HalfForm omega(0, 2);
        omega.add_term({0, 1}, HalfFunc::constant(0, Scalar(-1)));
        bool ok = is_symplectic(omega, plan0.half_points());
        ok = ok && is_symplectic(cut_form(omega), plan0.disc_points());

        SamplePlan plan1{.base_dim = 1, .seed = seed};
        HalfForm beta(1, 1);
        beta.add_term({0}, HalfFunc::constant(1, Scalar(1)));
        beta.add_term({1}, HalfFunc::s(1));
        ok = ok && is_contact(beta, plan1.half_points());
        ok = ok && is_contact(cut_form(beta), plan1.disc_points());

        // reduced forms on M_red samples
        SamplePlan plan2{.base_dim = 2, .seed = seed};
        HalfForm omega2(2, 2);
        omega2.add_term({0, 1}, HalfFunc::constant(2, Scalar(1)));
        omega2.add_term({2, 3}, HalfFunc::constant(2, Scalar(-1)));
        std::vector<std::vector<double>> xs2, xs1;
        for (auto& p : plan2.half_points()) xs2.push_back(p.x);
        for (auto& p : plan1.half_points()) xs1.push_back(p.x);
        ok = ok && is_symplectic_on_red(reduced_form(omega2), xs2);
        ok = ok && is_contact_on_red(reduced_form(beta), xs1);

        // degenerate controls
        HalfForm degenerate(0, 2);
        degenerate.add_term({0, 1}, -HalfFunc::s(0));
        ok = ok && !is_symplectic(degenerate, plan0.half_points());
        ok = ok && !is_contact(HalfForm::basis(1, {0}), plan1.half_points());
        criterion(6, "symplectic/contact certification incl. reduced forms and controls", ok);
    }

    // 7. functoriality at 50 points per pair (25 pairs) and rank preservation
    {
        std::string detail;
        bool ok = prop_passes("functoriality_maps", seed, 25, detail) &&
                  prop_passes("identity_cut", seed, 10, detail) &&
                  prop_passes("rank_preservation", seed, 25, detail);
        criterion(7, "functoriality of cut maps and immersion/submersion preservation", ok,
                  detail);
    }

    // 8. lift formulas: commuting squares and the shear behaviour pair
    {
        std::string detail;
        bool ok = prop_passes("lift_radial_commute", seed, 10, detail) &&
                  prop_passes("lift_squared_commute", seed, 10, detail) &&
                  prop_passes("shear_counterexample", seed, 1, detail);
        criterion(8, "radial and radial-squared lifts commute; shear rejected/accepted", ok,
                  detail);
    }

    // 9. momentum conventions
    {
        HalfForm omega(0, 2);
        omega.add_term({0, 1}, HalfFunc::constant(0, Scalar(-1)));
        bool ok = momentum_check(omega, HalfFunc::s(0));
        ok = ok && !momentum_check(omega, HalfFunc::s(0) * HalfFunc::s(0));
        HalfForm beta(1, 1);
        beta.add_term({0}, HalfFunc::constant(1, Scalar(1)));
        beta.add_term({1}, HalfFunc::s(1));
        HalfFunc mu = contact_momentum(beta);
        ok = ok && mu == HalfFunc::s(1) && vanishes_on_boundary(mu);
        criterion(9, "momentum sign convention and contact momentum", ok);
    }

    // 10. determinism: two suite runs with the same seed are byte-identical
    {
        bool ok = false;
        std::string detail;
        if (cutkit_bin.empty()) {
            detail = "no cutkit binary path given";
        } else {
            namespace fs = std::filesystem;
            auto dir = fs::temp_directory_path();
            std::string out1 = (dir / "cutkit_suite_run1.json").string();
            std::string out2 = (dir / "cutkit_suite_run2.json").string();
            std::string base = "\"" + cutkit_bin + "\" suite --seed 42 --trials 40 --json ";
            int rc1 = std::system((base + "\"" + out1 + "\" > /dev/null").c_str());
            int rc2 = std::system((base + "\"" + out2 + "\" > /dev/null").c_str());
            std::string a = slurp(out1), b = slurp(out2);
            ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
            if (!ok)
                detail = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) +
                         ", bytes " + std::to_string(a.size()) + "/" + std::to_string(b.size());
            fs::remove(out1);
            fs::remove(out2);
        }
        criterion(10, "cutkit suite --seed 42 is byte-identical across runs", ok, detail);
    }

    // corpus completeness backs several criteria; fail loudly if it regresses
    {
        bool ok = true;
        std::string detail;
        for (auto& [name, text] : corpus()) {
            auto report = scenario_from_string(text).run();
            if (!report.passed()) {
                ok = false;
                detail += name + " ";
            }
        }
        criterion(11, "bundled corpus passes end to end (supporting check)", ok, detail);
    }

    if (failures == 0)
        std::cout << "acceptance: all criteria PASS\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return failures == 0 ? 0 : 1;
}
