#include <catch_amalgamated.hpp>

#include "cutkit/corpus.hpp"
#include "cutkit/scenario.hpp"

using namespace cutkit;

TEST_CASE("every bundled scenario passes on a clean build") {
    const std::vector<std::string> required = {
        "cylinder_symplectic", "contact_model", "dependence_on_action", "roundtrip_forms",
        "functoriality_maps", "immersion_ranks", "distribution_cut", "momentum_checks",
        "radial_lift", "radial_squared_lift", "polar_correspondence",
        "nonequivariant_shear_rejection"};
    for (auto& name : required) REQUIRE(find_corpus_entry(name) != nullptr);

    for (auto& [name, text] : corpus()) {
        auto scenario = scenario_from_string(text);
        auto report = scenario.run();
        for (auto& job : report.jobs) {
            INFO(name << " / " << job.name << ": " << job.detail);
            REQUIRE(job.status == JobOutcome::Status::Pass);
        }
    }
}

TEST_CASE("scenario schema violations are typed errors") {
    REQUIRE_THROWS_AS(scenario_from_string("not json at all"), SchemaError);
    REQUIRE_THROWS_AS(scenario_from_string(R"({"schema": "wrong/9"})"), SchemaError);
    REQUIRE_THROWS_AS(scenario_from_string(R"({
        "schema": "cutkit-scenario/1", "name": "x",
        "jobs": [{"op": "cut_form", "input": "missing"}]
    })"),
                      SchemaError);
    REQUIRE_THROWS_AS(scenario_from_string(R"({
        "schema": "cutkit-scenario/1", "name": "x",
        "objects": {"f": {"kind": "alien"}}
    })"),
                      SchemaError);
}

TEST_CASE("failed expectations are reported, not thrown") {
    auto scenario = scenario_from_string(R"({
        "schema": "cutkit-scenario/1",
        "name": "failing",
        "objects": {
            "omega": {"kind": "half_form", "dim": 0, "degree": 2,
                      "terms": [{"key": ["ds", "dtheta"], "coeff": "1"}]}
        },
        "jobs": [
            {"name": "wrong_expect", "op": "cut_form", "input": "omega",
             "expect": {"dim": 0, "degree": 2,
                        "terms": [{"key": ["du", "dv"], "coeff": "3"}]}}
        ]
    })");
    auto report = scenario.run();
    REQUIRE_FALSE(report.passed());
    REQUIRE(report.jobs.front().status == JobOutcome::Status::Fail);
}

TEST_CASE("seed override and job filter") {
    const std::string* text = find_corpus_entry("cylinder_symplectic");
    auto scenario = scenario_from_string(*text);
    auto filtered = scenario.run(1234, "momentum");
    REQUIRE(filtered.seed == 1234);
    REQUIRE(filtered.jobs.size() == 2);
    for (auto& job : filtered.jobs) REQUIRE(job.name.find("momentum") != std::string::npos);
}

TEST_CASE("store chains results between jobs") {
    auto scenario = scenario_from_string(R"({
        "schema": "cutkit-scenario/1",
        "name": "chain",
        "objects": {
            "beta": {"kind": "half_form", "dim": 1, "degree": 1,
                     "terms": [{"key": ["dx1"], "coeff": "1"},
                               {"key": ["dtheta"], "coeff": {"terms": [{"m": 2, "re": "1"}]}}]}
        },
        "jobs": [
            {"name": "cut", "op": "cut_form", "input": "beta", "store": "beta_cut"},
            {"name": "check", "op": "is_contact", "input": "beta_cut", "expect": true}
        ]
    })");
    REQUIRE(scenario.run().passed());
}

TEST_CASE("form JSON round trips through the io layer") {
    HalfForm beta(2, 2);
    beta.add_term({0, 2}, HalfFunc::x_var(2, 1) + HalfFunc::s(2));
    beta.add_term({2, 3}, HalfFunc::constant(2, Scalar(-1)));
    auto j = to_json(beta);
    REQUIRE(half_form_from_json(j) == beta);

    Rng rng(5);
    DiscFunc g = gen_disc_func(rng, 2);
    REQUIRE(disc_func_from_json(to_json(g)) == g);

    // radicals survive serialization
    HalfFunc with_rad =
        rescale_boundary_function(HalfFunc::monomial(0, {}, 1, 1, Scalar(1)), Rat(2));
    REQUIRE(half_func_from_json(to_json(with_rad)) == with_rad);
}
