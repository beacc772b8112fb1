#pragma once

#include <iostream>
#include <optional>
#include <set>
#include <variant>

#include "cutkit/io.hpp"
#include "cutkit/properties.hpp"

namespace cutkit {

// A declarative verification job file.  Objects are exact forms, functions,
// maps and lift inputs keyed by id; jobs run in order and may store results
// back into the object table for later jobs.

struct ExprMap {
    int nvars = 0;
    std::vector<Expr> components;
};

using ObjectValue = std::variant<HalfFunc, DiscFunc, HalfForm, DiscForm, LocalMap,
                                 DistributionFrame, BlowupLiftInput, PolarDiffeoPair, ExprMap>;

struct JobOutcome {
    std::string name;
    std::string op;
    enum class Status { Pass, Fail, Error } status = Status::Pass;
    std::string detail;

    static const char* status_str(Status s) {
        switch (s) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            default: return "error";
        }
    }
};

struct ScenarioReport {
    std::string scenario;
    uint64_t seed = 0;
    std::vector<JobOutcome> jobs;

    bool passed() const {
        for (auto& j : jobs)
            if (j.status != JobOutcome::Status::Pass) return false;
        return true;
    }
    bool errored() const {
        for (auto& j : jobs)
            if (j.status == JobOutcome::Status::Error) return true;
        return false;
    }

    json to_json() const {
        json out{{"scenario", scenario}, {"seed", seed}, {"status", passed() ? "pass" : "fail"}};
        out["jobs"] = json::array();
        for (auto& j : jobs)
            out["jobs"].push_back({{"name", j.name},
                                   {"op", j.op},
                                   {"status", JobOutcome::status_str(j.status)},
                                   {"detail", j.detail}});
        return out;
    }

    void print(std::ostream& os) const {
        os << "scenario " << scenario << " (seed " << seed << ")\n";
        for (auto& j : jobs) {
            os << "  [" << (j.status == JobOutcome::Status::Pass ? "PASS" : "FAIL") << "] "
               << j.name;
            if (!j.detail.empty()) os << ": " << j.detail;
            os << "\n";
        }
        os << (passed() ? "PASS" : "FAIL") << " " << scenario << "\n";
    }
};

namespace detail {

inline std::string error_name(const Error& e) {
    if (dynamic_cast<const NonInvariantInput*>(&e)) return "NonInvariantInput";
    if (dynamic_cast<const ResidualNegativePower*>(&e)) return "ResidualNegativePower";
    if (dynamic_cast<const NotBasicInvariant*>(&e)) return "NotBasicInvariant";
    if (dynamic_cast<const NonDescendingCoefficient*>(&e)) return "NonDescendingCoefficient";
    if (dynamic_cast<const SingularDifferential*>(&e)) return "SingularDifferential";
    if (dynamic_cast<const DegenerateA*>(&e)) return "DegenerateA";
    if (dynamic_cast<const DegenerateFrame*>(&e)) return "DegenerateFrame";
    if (dynamic_cast<const ModelMismatch*>(&e)) return "ModelMismatch";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const UnknownProperty*>(&e)) return "UnknownProperty";
    if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
    return "Error";
}

// Accept covector keys in any order, with wedge sign semantics.
template <class Form>
Form sorted_form_from_json(const json& j, bool half_model) {
    int d = j.at("dim").get<int>();
    Form form(d, j.at("degree").get<int>());
    for (auto& term : j.at("terms")) {
        std::vector<int> key;
        for (auto& name : term.at("key"))
            key.push_back(covector_index_from_name(name.get<std::string>(), d, half_model));
        int sign = sort_key(key);
        if (sign == 0) continue;
        auto coeff = [&] {
            if constexpr (std::is_same_v<Form, HalfForm>)
                return half_func_from_json(term.at("coeff"), d);
            else
                return disc_func_from_json(term.at("coeff"), d);
        }();
        form.add_term(std::move(key), sign > 0 ? coeff : -coeff);
    }
    return form;
}

}  // namespace detail

class Scenario {
public:
    std::string name;
    uint64_t seed = 1;
    std::map<std::string, ObjectValue> objects;
    json jobs;

    static Scenario from_json(const json& j) try {
        Scenario sc;
        if (!j.is_object()) throw SchemaError("scenario must be a JSON object");
        std::string schema = j.value("schema", "");
        if (schema != "cutkit-scenario/1")
            throw SchemaError("unsupported schema '" + schema + "'");
        sc.name = j.value("name", "unnamed");
        sc.seed = j.value("seed", 1u);
        if (j.contains("objects")) {
            if (!j.at("objects").is_object()) throw SchemaError("objects must be an object");
            for (auto& [id, spec] : j.at("objects").items())
                sc.objects.emplace(id, parse_object(spec));
        }
        sc.jobs = j.value("jobs", json::array());
        if (!sc.jobs.is_array()) throw SchemaError("jobs must be an array");
        // all referenced ids must exist (unless produced by an earlier store)
        std::set<std::string> known;
        for (auto& [id, v] : sc.objects) known.insert(id);
        for (auto& job : sc.jobs) {
            for (auto& field : {"input", "omega", "mu", "beta", "frame", "pair", "first",
                                "second", "map"}) {
                if (!job.contains(field)) continue;
                std::string id = job.at(field).get<std::string>();
                if (!known.count(id))
                    throw SchemaError("job references unknown object '" + id + "'");
            }
            if (job.contains("store")) known.insert(job.at("store").get<std::string>());
        }
        return sc;
    } catch (const json::exception& err) {
        throw SchemaError(err.what());
    }

    ScenarioReport run(std::optional<uint64_t> seed_override = {},
                       const std::string& filter = "") const {
        ScenarioReport report;
        report.scenario = name;
        report.seed = seed_override.value_or(seed);
        auto table = objects;

        int index = 0;
        for (auto& job : jobs) {
            std::string job_name = job.value("name", "job" + std::to_string(index));
            ++index;
            if (!filter.empty() && job_name.find(filter) == std::string::npos) continue;
            JobOutcome outcome;
            outcome.name = job_name;
            outcome.op = job.value("op", "");
            try {
                run_job(job, table, report.seed, outcome);
            } catch (const Error& err) {
                std::string expected = job.value("expect_error", "");
                if (!expected.empty() && detail::error_name(err) == expected) {
                    outcome.status = JobOutcome::Status::Pass;
                    outcome.detail = "rejected with " + expected;
                } else {
                    outcome.status = JobOutcome::Status::Error;
                    outcome.detail = err.what();
                }
            } catch (const json::exception& err) {
                throw SchemaError(std::string("malformed job '") + job_name + "': " +
                                  err.what());
            }
            report.jobs.push_back(std::move(outcome));
        }
        return report;
    }

private:
    static ObjectValue parse_object(const json& spec) {
        std::string kind = spec.value("kind", "");
        if (kind == "half_func") return half_func_from_json(spec);
        if (kind == "disc_func") return disc_func_from_json(spec);
        if (kind == "half_form") return detail::sorted_form_from_json<HalfForm>(spec, true);
        if (kind == "disc_form") return detail::sorted_form_from_json<DiscForm>(spec, false);
        if (kind == "local_map") {
            LocalMap map;
            map.source_dim = spec.at("source_dim").get<int>();
            map.target_dim = spec.at("target_dim").get<int>();
            for (auto& c : spec.at("psi_bar")) map.psi_bar.push_back(expr_from_json(c));
            map.twist.re = spec.contains("twist_re") ? expr_from_json(spec.at("twist_re"))
                                                     : Expr::constant(1);
            map.twist.im = spec.contains("twist_im") ? expr_from_json(spec.at("twist_im"))
                                                     : Expr::constant(0);
            return map;
        }
        if (kind == "frame") {
            DistributionFrame frame;
            for (auto& f : spec.at("forms"))
                frame.annihilator.push_back(detail::sorted_form_from_json<HalfForm>(f, true));
            return frame;
        }
        if (kind == "lift_input") {
            BlowupLiftInput input;
            input.base_dim = spec.at("base_dim").get<int>();
            input.fiber_dim = spec.value("fiber_dim", 2);
            input.target_base_dim = spec.value("target_base_dim", input.base_dim);
            input.target_fiber_dim = spec.value("target_fiber_dim", input.fiber_dim);
            input.param = spec.value("param", "radial") == "invariant"
                              ? LiftParametrization::Invariant
                              : LiftParametrization::Radial;
            for (auto& c : spec.at("phi1")) input.phi1.push_back(expr_from_json(c));
            for (auto& row : spec.at("A")) {
                std::vector<Expr> r;
                for (auto& c : row) r.push_back(expr_from_json(c));
                input.A.push_back(std::move(r));
            }
            return input;
        }
        if (kind == "polar_pair")
            return PolarDiffeoPair{expr_from_json(spec.at("a_re")),
                                   expr_from_json(spec.at("a_im")),
                                   expr_from_json(spec.at("g"))};
        if (kind == "expr_map") {
            ExprMap map;
            map.nvars = spec.at("nvars").get<int>();
            for (auto& c : spec.at("components")) map.components.push_back(expr_from_json(c));
            return map;
        }
        throw SchemaError("unknown object kind '" + kind + "'");
    }

    template <class T>
    static const T& get(const std::map<std::string, ObjectValue>& table, const json& job,
                        const std::string& field) {
        std::string id = job.at(field).get<std::string>();
        auto it = table.find(id);
        if (it == table.end()) throw SchemaError("unknown object '" + id + "'");
        const T* value = std::get_if<T>(&it->second);
        if (!value) throw SchemaError("object '" + id + "' has the wrong kind");
        return *value;
    }

    static SamplePlan plan_from_job(const json& job, int base_dim, uint64_t seed) {
        SamplePlan plan;
        plan.base_dim = base_dim;
        plan.seed = seed;
        if (job.contains("samples") && job.at("samples").is_object()) {
            auto& s = job.at("samples");
            plan.interior = s.value("interior", plan.interior);
            plan.boundary = s.value("boundary", plan.boundary);
            plan.near_boundary = s.value("near_boundary", plan.near_boundary);
            plan.seed = s.value("seed", plan.seed);
            plan.delta = s.value("delta", plan.delta);
        }
        return plan;
    }

    static void expect_bool(JobOutcome& outcome, const json& job, const char* field,
                            bool actual) {
        if (!job.contains(field)) return;
        bool expected = job.at(field).get<bool>();
        if (expected != actual) {
            outcome.status = JobOutcome::Status::Fail;
            outcome.detail += std::string(field) + ": expected " +
                              (expected ? "true" : "false") + ", got " +
                              (actual ? "true" : "false") + "; ";
        }
    }

    static HalfPoint apply_local_map(const LocalMap& map, const HalfPoint& p) {
        std::vector<double> xs = p.x;
        xs.push_back(p.s);
        HalfPoint out;
        for (auto& c : map.psi_bar) out.x.push_back(c.eval(xs));
        auto b = map.twist.eval(xs);
        out.theta = p.theta + std::atan2(b.imag(), b.real());
        out.s = p.s;
        return out;
    }

    static void run_job(const json& job, std::map<std::string, ObjectValue>& table,
                        uint64_t seed, JobOutcome& outcome) {
        const std::string op = job.at("op").get<std::string>();
        auto store = [&](ObjectValue value) {
            if (job.contains("store")) table[job.at("store").get<std::string>()] = value;
        };

        if (op == "descend") {
            auto& f = get<HalfFunc>(table, job, "input");
            auto verdict = descend_function(f);
            expect_bool(outcome, job, "expect_descends", verdict.descends);
            if (job.contains("expect_image")) {
                DiscFunc expected = disc_func_from_json(job.at("expect_image"));
                if (!verdict.image || !(*verdict.image == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail += "image mismatch; ";
                }
            }
            if (job.contains("expect_offending")) {
                std::vector<std::pair<int, int>> expected;
                for (auto& km : job.at("expect_offending"))
                    expected.emplace_back(km.at(0).get<int>(), km.at(1).get<int>());
                std::vector<std::pair<int, int>> actual;
                for (auto& key : verdict.offending_modes) actual.emplace_back(key.k, key.m);
                std::sort(actual.begin(), actual.end());
                std::sort(expected.begin(), expected.end());
                if (actual != expected) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail += "offending mode set mismatch; ";
                }
            }
            if (outcome.detail.empty())
                outcome.detail = verdict.descends ? "descends, image " + verdict.image->str()
                                                  : "does not descend";
            if (verdict.image) store(*verdict.image);
        } else if (op == "lift") {
            auto& g = get<DiscFunc>(table, job, "input");
            HalfFunc lifted = lift_function(g);
            if (job.contains("expect")) {
                HalfFunc expected = half_func_from_json(job.at("expect"));
                if (!(lifted == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "lift mismatch: got " + lifted.str();
                }
            }
            store(lifted);
        } else if (op == "is_smooth_on_half") {
            expect_bool(outcome, job, "expect", is_smooth_on_half(get<HalfFunc>(table, job, "input")));
        } else if (op == "is_invariant") {
            expect_bool(outcome, job, "expect", is_invariant(get<HalfFunc>(table, job, "input")));
        } else if (op == "rescale") {
            auto& f = get<HalfFunc>(table, job, "input");
            Rat lambda = rat_from_json(job.at("lambda"));
            HalfFunc scaled = rescale_boundary_function(f, lambda);
            if (job.contains("expect")) {
                HalfFunc expected = half_func_from_json(job.at("expect"));
                if (!(scaled == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "rescale mismatch: got " + scaled.str();
                }
            }
            if (job.value("expect_verdict_unchanged", false)) {
                auto v1 = descend_function(f), v2 = descend_function(scaled);
                if (v1.descends != v2.descends || v1.offending_modes != v2.offending_modes) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail += "descent verdict changed under rescale; ";
                }
            }
            store(scaled);
        } else if (op == "is_basic_invariant") {
            auto verdict = is_basic_invariant(get<HalfForm>(table, job, "input"));
            expect_bool(outcome, job, "expect", verdict.ok);
            if (!verdict.ok && outcome.status == JobOutcome::Status::Pass)
                outcome.detail = "witness: " + half_key_str(verdict.failures.front().mode) +
                                 " (" + verdict.failures.front().reason + ")";
        } else if (op == "cut_form") {
            DiscForm cut = cut_form(get<HalfForm>(table, job, "input"));
            if (job.contains("expect")) {
                DiscForm expected =
                    detail::sorted_form_from_json<DiscForm>(job.at("expect"), false);
                if (!(cut == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "cut mismatch: got " + cut.str();
                }
            }
            if (outcome.detail.empty()) outcome.detail = "cut = " + cut.str();
            store(cut);
        } else if (op == "reduced_form") {
            DiscForm red = reduced_form(get<HalfForm>(table, job, "input"));
            if (job.contains("expect")) {
                DiscForm expected =
                    detail::sorted_form_from_json<DiscForm>(job.at("expect"), false);
                if (!(red == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "reduced form mismatch: got " + red.str();
                }
            }
            store(red);
        } else if (op == "boundary_pullback") {
            BoundaryForm bd = boundary_pullback(get<HalfForm>(table, job, "input"));
            if (job.contains("expect")) {
                HalfForm expected =
                    detail::sorted_form_from_json<HalfForm>(job.at("expect"), true);
                if (!(bd.form() == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "boundary pullback mismatch: got " + bd.form().str();
                }
            }
        } else if (op == "momentum_check") {
            bool ok = momentum_check(get<HalfForm>(table, job, "omega"),
                                     get<HalfFunc>(table, job, "mu"));
            expect_bool(outcome, job, "expect", ok);
        } else if (op == "contact_momentum") {
            HalfFunc mu = contact_momentum(get<HalfForm>(table, job, "beta"));
            if (job.contains("expect")) {
                HalfFunc expected = half_func_from_json(job.at("expect"));
                if (!(mu == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "momentum mismatch: got " + mu.str();
                }
            }
            expect_bool(outcome, job, "expect_vanishes_on_boundary", vanishes_on_boundary(mu));
            store(mu);
        } else if (op == "is_symplectic" || op == "is_contact") {
            std::string id = job.at("input").get<std::string>();
            auto& object = table.at(id);
            bool actual;
            if (auto* half = std::get_if<HalfForm>(&object)) {
                auto plan = plan_from_job(job, half->base_dim(), seed);
                actual = op == "is_symplectic" ? is_symplectic(*half, plan.half_points())
                                               : is_contact(*half, plan.half_points());
            } else if (auto* disc = std::get_if<DiscForm>(&object)) {
                auto plan = plan_from_job(job, disc->base_dim(), seed);
                actual = op == "is_symplectic" ? is_symplectic(*disc, plan.disc_points())
                                               : is_contact(*disc, plan.disc_points());
            } else {
                throw SchemaError("object '" + id + "' is not a form");
            }
            expect_bool(outcome, job, "expect", actual);
        } else if (op == "is_symplectic_on_red" || op == "is_contact_on_red") {
            auto& red = get<DiscForm>(table, job, "input");
            auto plan = plan_from_job(job, red.base_dim(), seed);
            std::vector<std::vector<double>> xs;
            for (auto& p : plan.half_points()) xs.push_back(p.x);
            bool actual = op == "is_symplectic_on_red" ? is_symplectic_on_red(red, xs)
                                                       : is_contact_on_red(red, xs);
            expect_bool(outcome, job, "expect", actual);
        } else if (op == "cut_map_check") {
            auto& map = get<LocalMap>(table, job, "input");
            auto plan = plan_from_job(job, map.source_dim, seed);
            auto points = plan.half_points();
            validate_local_map(map, points);
            CutMap cut = cut_map(map);
            double residual = 0;
            for (auto& p : points) {
                auto via_cut = cut.apply(to_disc(p));
                auto down = to_disc(apply_local_map(map, p));
                auto expected = pack(down);
                for (size_t i = 0; i < expected.size(); ++i)
                    residual = std::max(residual, std::abs(via_cut[i] - expected[i]));
            }
            if (residual > tol::commute) {
                outcome.status = JobOutcome::Status::Fail;
                outcome.detail = "commuting square residual " + std::to_string(residual);
            } else {
                outcome.detail = "commuting square holds";
            }
        } else if (op == "compose_cut_check") {
            auto& first = get<LocalMap>(table, job, "first");
            auto& second = get<LocalMap>(table, job, "second");
            LocalMap composed = compose_maps(first, second);
            CutMap all = cut_map(composed);
            CutMap c1 = cut_map(first), c2 = cut_map(second);
            Rng rng(seed);
            double residual = 0;
            int points = job.value("points", 50);
            for (int i = 0; i < points; ++i) {
                DiscPoint p;
                for (int j = 0; j < first.source_dim; ++j) p.x.push_back(rng.uniform(-0.8, 0.8));
                p.u = rng.uniform(-0.7, 0.7);
                p.v = rng.uniform(-0.7, 0.7);
                auto direct = all.apply(p);
                auto mid = c1.apply(p);
                DiscPoint midp{std::vector<double>(mid.begin(), mid.end() - 2),
                               mid[mid.size() - 2], mid.back()};
                auto chained = c2.apply(midp);
                for (size_t c = 0; c < direct.size(); ++c)
                    residual = std::max(residual, std::abs(direct[c] - chained[c]));
            }
            if (residual > tol::commute) {
                outcome.status = JobOutcome::Status::Fail;
                outcome.detail = "functoriality residual " + std::to_string(residual);
            }
            store(composed);
        } else if (op == "rank_check") {
            auto& map = get<LocalMap>(table, job, "input");
            auto jac = local_map_jacobian(map);
            CutMap cut = cut_map(map);
            auto cut_jac = jacobian_exprs(cut.components, map.source_dim + 2);
            Rng rng(seed);
            int points = job.value("points", 20);
            for (int i = 0; i < points; ++i) {
                HalfPoint p;
                for (int j = 0; j < map.source_dim; ++j) p.x.push_back(rng.uniform(-0.8, 0.8));
                p.theta = rng.uniform(0, 6.28);
                p.s = 0.0;
                int rank_half = rank_of(eval_matrix(jac, pack(p)));
                int rank_disc = rank_of(eval_matrix(cut_jac, pack(to_disc(p))));
                if (rank_half != rank_disc) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "rank differs at boundary: " + std::to_string(rank_half) +
                                     " vs " + std::to_string(rank_disc);
                    return;
                }
                if (job.contains("expect_rank") &&
                    rank_half != job.at("expect_rank").get<int>()) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "rank " + std::to_string(rank_half) + " != expected";
                    return;
                }
            }
            outcome.detail = "ranks agree at " + std::to_string(points) + " boundary points";
        } else if (op == "cut_distribution") {
            auto& frame = get<DistributionFrame>(table, job, "frame");
            auto plan = plan_from_job(job, frame.annihilator.front().base_dim(), seed);
            auto report = cut_distribution(frame, plan);
            expect_bool(outcome, job, "expect_transverse", report.transverse_to_boundary);
            expect_bool(outcome, job, "expect_involutive_before", report.involutive_before);
            expect_bool(outcome, job, "expect_involutive_after", report.involutive_after);
            if (job.contains("expect_contact_before"))
                expect_bool(outcome, job, "expect_contact_before",
                            report.contact_before.value_or(false));
            if (job.contains("expect_contact_after"))
                expect_bool(outcome, job, "expect_contact_after",
                            report.contact_after.value_or(false));
            if (job.contains("expect_cut_frame")) {
                auto& expected_list = job.at("expect_cut_frame");
                for (size_t i = 0; i < report.cut_frame.size(); ++i) {
                    DiscForm expected =
                        detail::sorted_form_from_json<DiscForm>(expected_list.at(i), false);
                    if (!(report.cut_frame[i] == expected)) {
                        outcome.status = JobOutcome::Status::Fail;
                        outcome.detail += "cut frame mismatch at " + std::to_string(i) + "; ";
                    }
                }
            }
        } else if (op == "blowup_pullback") {
            HalfForm lifted = blowup_pullback(get<DiscForm>(table, job, "input"));
            if (job.contains("expect")) {
                HalfForm expected =
                    detail::sorted_form_from_json<HalfForm>(job.at("expect"), true);
                if (!(lifted == expected)) {
                    outcome.status = JobOutcome::Status::Fail;
                    outcome.detail = "pullback mismatch: got " + lifted.str();
                }
            }
            store(lifted);
        } else if (op == "roundtrip_check") {
            expect_bool(outcome, job, "expect",
                        roundtrip_check(get<HalfForm>(table, job, "input")));
        } else if (op == "lift_radial" || op == "lift_radial_squared") {
            auto& input = get<BlowupLiftInput>(table, job, "input");
            LiftCheckPlan plan{job.value("samples", 100), seed};
            LiftReport report = op == "lift_radial" ? lift_map_radial(input, plan)
                                                    : lift_map_radial_squared(input, plan);
            double max_residual = job.value("max_residual", tol::commute);
            if (report.max_commute_residual > max_residual) {
                outcome.status = JobOutcome::Status::Fail;
                outcome.detail = "commuting residual " +
                                 std::to_string(report.max_commute_residual);
            }
            if (op == "lift_radial" && report.min_boundary_slope <= 0) {
                outcome.status = JobOutcome::Status::Fail;
                outcome.detail += "boundary-defining slope not positive; ";
            }
            if (job.contains("expect_values")) {
                for (auto& check : job.at("expect_values")) {
                    auto at = check.at("at").get<std::vector<double>>();
                    auto want = check.at("out").get<std::vector<double>>();
                    auto got = report.map.apply(at);
                    for (size_t i = 0; i < want.size(); ++i)
                        if (std::abs(got[i] - want[i]) > 1e-10) {
                            outcome.status = JobOutcome::Status::Fail;
                            outcome.detail += "lift value mismatch at component " +
                                              std::to_string(i) + "; ";
                        }
                }
            }
            if (outcome.status == JobOutcome::Status::Pass && outcome.detail.empty())
                outcome.detail =
                    "residual " + std::to_string(report.max_commute_residual);
        } else if (op == "polar_correspondence") {
            auto& pair = get<PolarDiffeoPair>(table, job, "pair");
            auto report = polar_correspondence(pair, job.value("samples", 50), seed);
            if (report.max_commute_residual > job.value("max_residual", tol::commute)) {
                outcome.status = JobOutcome::Status::Fail;
                outcome.detail = "commuting residual " +
                                 std::to_string(report.max_commute_residual);
            }
            expect_bool(outcome, job, "expect_diffeo", report.diffeo_ok);
        } else if (op == "smoothness_probe") {
            auto& map = get<ExprMap>(table, job, "input");
            if (map.components.size() != 2 || map.nvars != 2)
                throw SchemaError("smoothness_probe needs a planar map (2 vars, 2 components)");
            auto probe =
                probe_equivariant_smooth_at_origin(map.components[0], map.components[1]);
            expect_bool(outcome, job, "expect_smooth", probe.smooth);
            if (outcome.detail.empty())
                outcome.detail = "max quotient jump " + std::to_string(probe.max_jump);
        } else if (op == "lift_smoothness_probe") {
            auto& map = get<ExprMap>(table, job, "input");
            LiftedMap lifted;
            lifted.components = map.components;
            auto at = job.at("at").get<std::vector<double>>();
            auto probe = probe_lift_smooth_in_s(lifted, at);
            expect_bool(outcome, job, "expect_smooth", probe.smooth);
            if (outcome.detail.empty())
                outcome.detail = "max quotient jump " + std::to_string(probe.max_jump);
        } else if (op == "property") {
            std::string id = job.at("id").get<std::string>();
            int trials = job.value("trials", 100);
            CheckResult result = props::run_property(id, seed, trials);
            if (!result.passed()) {
                outcome.status = result.status == CheckResult::Status::Error
                                     ? JobOutcome::Status::Error
                                     : JobOutcome::Status::Fail;
                outcome.detail = result.message;
                if (!result.witnesses.empty())
                    outcome.detail += " " + result.witnesses.front().description;
            } else {
                outcome.detail = std::to_string(trials) + " trials";
            }
        } else {
            throw SchemaError("unknown op '" + op + "'");
        }
    }
};

inline Scenario scenario_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("invalid JSON");
    return Scenario::from_json(j);
}

}  // namespace cutkit
