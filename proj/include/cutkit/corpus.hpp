#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cutkit {

// Bundled scenario corpus.  Each entry is a full scenario JSON document; the
// CLI can list them, run one by name, or run them all.
inline const std::vector<std::pair<std::string, std::string>>& corpus() {
    static const std::vector<std::pair<std::string, std::string>> entries = {

        {"cylinder_symplectic", R"json({
  "schema": "cutkit-scenario/1",
  "name": "cylinder_symplectic",
  "seed": 42,
  "objects": {
    "omega": {"kind": "half_form", "dim": 0, "degree": 2,
              "terms": [{"key": ["ds", "dtheta"], "coeff": "1"}]},
    "omega_degenerate": {"kind": "half_form", "dim": 0, "degree": 2,
                         "terms": [{"key": ["ds", "dtheta"],
                                    "coeff": {"terms": [{"m": 2, "re": "1"}]}}]},
    "mu": {"kind": "half_func", "dim": 0, "terms": [{"m": 2, "re": "1"}]},
    "mu_sq": {"kind": "half_func", "dim": 0, "terms": [{"m": 4, "re": "1"}]}
  },
  "jobs": [
    {"name": "basic_invariant", "op": "is_basic_invariant", "input": "omega", "expect": true},
    {"name": "momentum_s", "op": "momentum_check", "omega": "omega", "mu": "mu", "expect": true},
    {"name": "momentum_s_squared", "op": "momentum_check", "omega": "omega", "mu": "mu_sq",
     "expect": false},
    {"name": "omega_symplectic", "op": "is_symplectic", "input": "omega", "expect": true},
    {"name": "cut_omega", "op": "cut_form", "input": "omega", "store": "omega_cut",
     "expect": {"dim": 0, "degree": 2, "terms": [{"key": ["du", "dv"], "coeff": "2"}]}},
    {"name": "cut_symplectic", "op": "is_symplectic", "input": "omega_cut", "expect": true},
    {"name": "degenerate_control", "op": "is_symplectic", "input": "omega_degenerate",
     "expect": false},
    {"name": "roundtrip", "op": "roundtrip_check", "input": "omega", "expect": true}
  ]
})json"},

        {"contact_model", R"json({
  "schema": "cutkit-scenario/1",
  "name": "contact_model",
  "seed": 42,
  "objects": {
    "beta": {"kind": "half_form", "dim": 1, "degree": 1,
             "terms": [{"key": ["dx1"], "coeff": "1"},
                       {"key": ["dtheta"], "coeff": {"terms": [{"m": 2, "re": "1"}]}}]},
    "dx_only": {"kind": "half_form", "dim": 1, "degree": 1,
                "terms": [{"key": ["dx1"], "coeff": "1"}]}
  },
  "jobs": [
    {"name": "beta_contact", "op": "is_contact", "input": "beta", "expect": true},
    {"name": "momentum", "op": "contact_momentum", "beta": "beta",
     "expect": {"dim": 1, "terms": [{"m": 2, "re": "1"}]},
     "expect_vanishes_on_boundary": true},
    {"name": "cut_beta", "op": "cut_form", "input": "beta", "store": "beta_cut",
     "expect": {"dim": 1, "degree": 1, "terms": [
        {"key": ["dx1"], "coeff": "1"},
        {"key": ["du"], "coeff": {"terms": [{"p": 1, "im": "1/2"}, {"q": 1, "im": "-1/2"}]}},
        {"key": ["dv"], "coeff": {"terms": [{"p": 1, "re": "1/2"}, {"q": 1, "re": "1/2"}]}}]}},
    {"name": "cut_contact", "op": "is_contact", "input": "beta_cut", "expect": true},
    {"name": "reduce_beta", "op": "reduced_form", "input": "beta", "store": "beta_red",
     "expect": {"dim": 1, "degree": 1, "terms": [{"key": ["dx1"], "coeff": "1"}]}},
    {"name": "red_contact", "op": "is_contact_on_red", "input": "beta_red", "expect": true},
    {"name": "control_dx", "op": "is_contact", "input": "dx_only", "expect": false},
    {"name": "roundtrip", "op": "roundtrip_check", "input": "beta", "expect": true}
  ]
})json"},

        {"dependence_on_action", R"json({
  "schema": "cutkit-scenario/1",
  "name": "dependence_on_action",
  "seed": 42,
  "objects": {
    "h_const_1": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 1, "re": "1/2"}, {"k": -1, "m": 1, "re": "1/2"}]},
    "h_const_2": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 1, "re": "1"}, {"k": -1, "m": 1, "re": "1"}]},
    "h_const_neg_half": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 1, "re": "-1/4"}, {"k": -1, "m": 1, "re": "-1/4"}]},
    "h_w": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 2, "m": 1, "re": "1/2"}, {"k": 0, "m": 1, "re": "1/2"}]},
    "h_w2": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 3, "m": 1, "re": "1/2"}, {"k": 1, "m": 1, "re": "1/2"}]},
    "h_w3": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 4, "m": 1, "re": "1/2"}, {"k": 2, "m": 1, "re": "1/2"}]},
    "h_w4": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 5, "m": 1, "re": "1/2"}, {"k": 3, "m": 1, "re": "1/2"}]},
    "h_wbar": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 0, "m": 1, "re": "1/2"}, {"k": -2, "m": 1, "re": "1/2"}]},
    "h_wbar2": {"kind": "half_func", "dim": 0, "terms": [
      {"k": -1, "m": 1, "re": "1/2"}, {"k": -3, "m": 1, "re": "1/2"}]},
    "h_1_plus_w": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 1, "re": "1/2"}, {"k": -1, "m": 1, "re": "1/2"},
      {"k": 2, "m": 1, "re": "1/2"}, {"k": 0, "m": 1, "re": "1/2"}]},
    "h_1_minus_w": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 1, "re": "1/2"}, {"k": -1, "m": 1, "re": "1/2"},
      {"k": 2, "m": 1, "re": "-1/2"}, {"k": 0, "m": 1, "re": "-1/2"}]},
    "h_w_plus_wbar": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 2, "m": 1, "re": "1/2"}, {"k": 0, "m": 1, "re": "1"},
      {"k": -2, "m": 1, "re": "1/2"}]},
    "h_2_plus_3w": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 1, "re": "1"}, {"k": -1, "m": 1, "re": "1"},
      {"k": 2, "m": 1, "re": "3/2"}, {"k": 0, "m": 1, "re": "3/2"}]},
    "root_z": {"kind": "half_func", "dim": 0, "terms": [{"k": 1, "m": 1, "re": "1"}]},
    "s_cos": {"kind": "half_func", "dim": 0, "terms": [
      {"k": 1, "m": 2, "re": "1/2"}, {"k": -1, "m": 2, "re": "1/2"}]}
  },
  "jobs": [
    {"name": "const_1", "op": "descend", "input": "h_const_1", "expect_descends": true,
     "expect_image": {"dim": 0, "terms": [{"p": 1, "re": "1/2"}, {"q": 1, "re": "1/2"}]}},
    {"name": "const_2", "op": "descend", "input": "h_const_2", "expect_descends": true},
    {"name": "const_neg_half", "op": "descend", "input": "h_const_neg_half",
     "expect_descends": true},
    {"name": "g_w", "op": "descend", "input": "h_w", "expect_descends": false,
     "expect_offending": [[0, 1], [2, 1]]},
    {"name": "g_w2", "op": "descend", "input": "h_w2", "expect_descends": false,
     "expect_offending": [[3, 1]]},
    {"name": "g_w3", "op": "descend", "input": "h_w3", "expect_descends": false,
     "expect_offending": [[2, 1], [4, 1]]},
    {"name": "g_w4", "op": "descend", "input": "h_w4", "expect_descends": false,
     "expect_offending": [[3, 1], [5, 1]]},
    {"name": "g_wbar", "op": "descend", "input": "h_wbar", "expect_descends": false,
     "expect_offending": [[-2, 1], [0, 1]]},
    {"name": "g_wbar2", "op": "descend", "input": "h_wbar2", "expect_descends": false,
     "expect_offending": [[-3, 1]]},
    {"name": "g_1_plus_w", "op": "descend", "input": "h_1_plus_w", "expect_descends": false,
     "expect_offending": [[0, 1], [2, 1]]},
    {"name": "g_1_minus_w", "op": "descend", "input": "h_1_minus_w", "expect_descends": false,
     "expect_offending": [[0, 1], [2, 1]]},
    {"name": "g_w_plus_wbar", "op": "descend", "input": "h_w_plus_wbar",
     "expect_descends": false, "expect_offending": [[-2, 1], [0, 1], [2, 1]]},
    {"name": "g_2_plus_3w", "op": "descend", "input": "h_2_plus_3w", "expect_descends": false,
     "expect_offending": [[0, 1], [2, 1]]},
    {"name": "s_cos_fails", "op": "descend", "input": "s_cos", "expect_descends": false,
     "expect_offending": [[-1, 2], [1, 2]]},
    {"name": "rescale_4", "op": "rescale", "input": "root_z", "lambda": "4",
     "store": "root_z_4", "expect": {"dim": 0, "terms": [{"k": 1, "m": 1, "re": "2"}]},
     "expect_verdict_unchanged": true},
    {"name": "descend_rescaled", "op": "descend", "input": "root_z_4",
     "expect_descends": true,
     "expect_image": {"dim": 0, "terms": [{"p": 1, "q": 0, "re": "2"}]}},
    {"name": "rescale_sqrt2", "op": "rescale", "input": "root_z", "lambda": "2",
     "expect": {"dim": 0, "terms": [{"k": 1, "m": 1, "re": "1", "rad": "2"}]},
     "expect_verdict_unchanged": true},
    {"name": "rescale_9_s_cos", "op": "rescale", "input": "s_cos", "lambda": "9",
     "expect": {"dim": 0, "terms": [{"k": 1, "m": 2, "re": "9/2"},
                                    {"k": -1, "m": 2, "re": "9/2"}]},
     "expect_verdict_unchanged": true},
    {"name": "identity_rescale", "op": "rescale", "input": "s_cos", "lambda": "1",
     "expect": {"dim": 0, "terms": [{"k": 1, "m": 2, "re": "1/2"},
                                    {"k": -1, "m": 2, "re": "1/2"}]}},
    {"name": "smoothness_s_cos", "op": "is_smooth_on_half", "input": "s_cos", "expect": true},
    {"name": "smoothness_root", "op": "is_smooth_on_half", "input": "root_z", "expect": false},
    {"name": "invariance_s_cos", "op": "is_invariant", "input": "s_cos", "expect": false}
  ]
})json"},

        {"roundtrip_forms", R"json({
  "schema": "cutkit-scenario/1",
  "name": "roundtrip_forms",
  "seed": 42,
  "objects": {
    "omega": {"kind": "half_form", "dim": 2, "degree": 2,
              "terms": [{"key": ["ds", "dtheta"], "coeff": "1"}]},
    "sdth": {"kind": "half_form", "dim": 2, "degree": 1,
             "terms": [{"key": ["dtheta"], "coeff": {"terms": [{"m": 2, "re": "1"}]}}]},
    "dx1ds": {"kind": "half_form", "dim": 2, "degree": 2,
              "terms": [{"key": ["dx1", "ds"], "coeff": "1"}]},
    "mix": {"kind": "half_form", "dim": 2, "degree": 2,
            "terms": [{"key": ["dx1", "dx2"], "coeff": "1"},
                      {"key": ["ds", "dtheta"], "coeff": "1"}]},
    "two_dudv": {"kind": "disc_form", "dim": 2, "degree": 2,
                 "terms": [{"key": ["du", "dv"], "coeff": "2"}]},
    "u_dv_minus_v_du": {"kind": "disc_form", "dim": 2, "degree": 1,
      "terms": [{"key": ["dv"], "coeff": {"terms": [{"p": 1, "re": "1/2"}, {"q": 1, "re": "1/2"}]}},
                {"key": ["du"], "coeff": {"terms": [{"p": 1, "im": "1/2"}, {"q": 1, "im": "-1/2"}]}}]},
    "dx1_disc": {"kind": "disc_form", "dim": 2, "degree": 1,
                 "terms": [{"key": ["dx1"], "coeff": "1"}]},
    "du_alone": {"kind": "disc_form", "dim": 2, "degree": 1,
                 "terms": [{"key": ["du"], "coeff": "1"}]},
    "z_func": {"kind": "disc_func", "dim": 0, "terms": [{"p": 1, "re": "1"}]}
  },
  "jobs": [
    {"name": "roundtrip_omega", "op": "roundtrip_check", "input": "omega", "expect": true},
    {"name": "roundtrip_sdth", "op": "roundtrip_check", "input": "sdth", "expect": true},
    {"name": "roundtrip_dx1ds", "op": "roundtrip_check", "input": "dx1ds", "expect": true},
    {"name": "roundtrip_mix", "op": "roundtrip_check", "input": "mix", "expect": true},
    {"name": "cut_dx1ds", "op": "cut_form", "input": "dx1ds",
     "expect": {"dim": 2, "degree": 2, "terms": [
       {"key": ["dx1", "du"], "coeff": {"terms": [{"p": 1, "re": "1"}, {"q": 1, "re": "1"}]}},
       {"key": ["dx1", "dv"], "coeff": {"terms": [{"p": 1, "im": "-1"}, {"q": 1, "im": "1"}]}}]}},
    {"name": "pullback_dudv", "op": "blowup_pullback", "input": "two_dudv",
     "expect": {"dim": 2, "degree": 2, "terms": [{"key": ["ds", "dtheta"], "coeff": "1"}]}},
    {"name": "pullback_udv", "op": "blowup_pullback", "input": "u_dv_minus_v_du",
     "expect": {"dim": 2, "degree": 1,
                "terms": [{"key": ["dtheta"], "coeff": {"terms": [{"m": 2, "re": "1"}]}}]}},
    {"name": "pullback_dx1", "op": "blowup_pullback", "input": "dx1_disc",
     "expect": {"dim": 2, "degree": 1, "terms": [{"key": ["dx1"], "coeff": "1"}]}},
    {"name": "pullback_du_rejected", "op": "blowup_pullback", "input": "du_alone",
     "expect_error": "ResidualNegativePower"},
    {"name": "lift_z", "op": "lift", "input": "z_func",
     "expect": {"dim": 0, "terms": [{"k": 1, "m": 1, "re": "1"}]}, "store": "z_lifted"},
    {"name": "descend_z", "op": "descend", "input": "z_lifted", "expect_descends": true,
     "expect_image": {"dim": 0, "terms": [{"p": 1, "re": "1"}]}},
    {"name": "random_roundtrip", "op": "property", "id": "roundtrip_forms", "trials": 100},
    {"name": "random_disc_roundtrip", "op": "property", "id": "roundtrip_disc", "trials": 50}
  ]
})json"},

        {"functoriality_maps", R"json({
  "schema": "cutkit-scenario/1",
  "name": "functoriality_maps",
  "seed": 42,
  "objects": {
    "identity": {"kind": "local_map", "source_dim": 1, "target_dim": 1,
                 "psi_bar": [{"op": "var", "index": 0}]},
    "shift": {"kind": "local_map", "source_dim": 1, "target_dim": 1,
              "psi_bar": [{"op": "add", "args": [{"op": "var", "index": 0},
                                                 {"op": "var", "index": 1}]}]},
    "twist_i": {"kind": "local_map", "source_dim": 1, "target_dim": 1,
                "psi_bar": [{"op": "var", "index": 0}], "twist_re": 0, "twist_im": 1},
    "curve": {"kind": "local_map", "source_dim": 1, "target_dim": 2,
              "psi_bar": [{"op": "var", "index": 0},
                          {"op": "mul", "args": [{"op": "var", "index": 0},
                                                 {"op": "var", "index": 0}]}],
              "twist_re": {"op": "cos", "args": [{"op": "var", "index": 1}]},
              "twist_im": {"op": "sin", "args": [{"op": "var", "index": 1}]}},
    "proj": {"kind": "local_map", "source_dim": 2, "target_dim": 1,
             "psi_bar": [{"op": "add", "args": [{"op": "var", "index": 0},
                                                {"op": "var", "index": 1}]}]}
  },
  "jobs": [
    {"name": "identity_square", "op": "cut_map_check", "input": "identity"},
    {"name": "shift_square", "op": "cut_map_check", "input": "shift"},
    {"name": "twist_square", "op": "cut_map_check", "input": "twist_i"},
    {"name": "curve_square", "op": "cut_map_check", "input": "curve"},
    {"name": "compose_shift_twist", "op": "compose_cut_check", "first": "shift",
     "second": "twist_i", "points": 50},
    {"name": "compose_curve_proj", "op": "compose_cut_check", "first": "curve",
     "second": "proj", "points": 50},
    {"name": "random_functoriality", "op": "property", "id": "functoriality_maps",
     "trials": 25},
    {"name": "identity_is_identity", "op": "property", "id": "identity_cut", "trials": 10}
  ]
})json"},

        {"immersion_ranks", R"json({
  "schema": "cutkit-scenario/1",
  "name": "immersion_ranks",
  "seed": 42,
  "objects": {
    "immersion": {"kind": "local_map", "source_dim": 1, "target_dim": 2,
                  "psi_bar": [{"op": "var", "index": 0},
                              {"op": "mul", "args": [{"op": "var", "index": 0},
                                                     {"op": "var", "index": 0}]}],
                  "twist_re": {"op": "cos", "args": [{"op": "var", "index": 1}]},
                  "twist_im": {"op": "sin", "args": [{"op": "var", "index": 1}]}},
    "submersion": {"kind": "local_map", "source_dim": 2, "target_dim": 1,
                   "psi_bar": [{"op": "add", "args": [{"op": "var", "index": 0},
                                                      {"op": "var", "index": 1}]}]},
    "endo": {"kind": "local_map", "source_dim": 1, "target_dim": 1,
             "psi_bar": [{"op": "mul", "args": [2, {"op": "var", "index": 0}]}]},
    "collapse": {"kind": "local_map", "source_dim": 1, "target_dim": 1,
                 "psi_bar": ["1/2"]}
  },
  "jobs": [
    {"name": "immersion_rank", "op": "rank_check", "input": "immersion", "points": 20,
     "expect_rank": 3},
    {"name": "submersion_rank", "op": "rank_check", "input": "submersion", "points": 20,
     "expect_rank": 3},
    {"name": "endo_rank", "op": "rank_check", "input": "endo", "points": 20,
     "expect_rank": 3},
    {"name": "collapse_rank", "op": "rank_check", "input": "collapse", "points": 20,
     "expect_rank": 2},
    {"name": "random_rank_preservation", "op": "property", "id": "rank_preservation",
     "trials": 25}
  ]
})json"},

        {"distribution_cut", R"json({
  "schema": "cutkit-scenario/1",
  "name": "distribution_cut",
  "seed": 42,
  "objects": {
    "frame_dx1": {"kind": "frame", "forms": [
      {"dim": 2, "degree": 1, "terms": [{"key": ["dx1"], "coeff": "1"}]}]},
    "frame_contact": {"kind": "frame", "forms": [
      {"dim": 1, "degree": 1, "terms": [
        {"key": ["dx1"], "coeff": "1"},
        {"key": ["dtheta"], "coeff": {"terms": [{"m": 2, "re": "1"}]}}]}]},
    "frame_ds": {"kind": "frame", "forms": [
      {"dim": 1, "degree": 1, "terms": [{"key": ["ds"], "coeff": "1"}]}]}
  },
  "jobs": [
    {"name": "constant_frame", "op": "cut_distribution", "frame": "frame_dx1",
     "expect_transverse": true, "expect_involutive_before": true,
     "expect_involutive_after": true},
    {"name": "contact_frame", "op": "cut_distribution", "frame": "frame_contact",
     "expect_transverse": true, "expect_involutive_before": false,
     "expect_involutive_after": false, "expect_contact_before": true,
     "expect_contact_after": true},
    {"name": "ds_frame", "op": "cut_distribution", "frame": "frame_ds",
     "expect_transverse": false, "expect_involutive_before": true,
     "expect_involutive_after": true, "expect_contact_before": false,
     "expect_contact_after": false,
     "expect_cut_frame": [{"dim": 1, "degree": 1, "terms": [
       {"key": ["du"], "coeff": {"terms": [{"p": 1, "re": "1"}, {"q": 1, "re": "1"}]}},
       {"key": ["dv"], "coeff": {"terms": [{"p": 1, "im": "-1"}, {"q": 1, "im": "1"}]}}]}]}
  ]
})json"},

        {"momentum_checks", R"json({
  "schema": "cutkit-scenario/1",
  "name": "momentum_checks",
  "seed": 42,
  "objects": {
    "omega": {"kind": "half_form", "dim": 2, "degree": 2,
              "terms": [{"key": ["ds", "dtheta"], "coeff": "1"}]},
    "omega_x": {"kind": "half_form", "dim": 2, "degree": 2,
                "terms": [{"key": ["dx1", "dx2"], "coeff": "1"}]},
    "mu_s": {"kind": "half_func", "dim": 2, "terms": [{"m": 2, "re": "1"}]},
    "mu_s2": {"kind": "half_func", "dim": 2, "terms": [{"m": 4, "re": "1"}]},
    "mu_zero": {"kind": "half_func", "dim": 2, "terms": []},
    "beta_contact": {"kind": "half_form", "dim": 1, "degree": 1,
                     "terms": [{"key": ["dx1"], "coeff": "1"},
                               {"key": ["dtheta"], "coeff": {"terms": [{"m": 2, "re": "1"}]}}]},
    "beta_dtheta": {"kind": "half_form", "dim": 1, "degree": 1,
                    "terms": [{"key": ["dtheta"], "coeff": "1"}]},
    "beta_dx": {"kind": "half_form", "dim": 1, "degree": 1,
                "terms": [{"key": ["dx1"], "coeff": "1"}]}
  },
  "jobs": [
    {"name": "standard_pair", "op": "momentum_check", "omega": "omega", "mu": "mu_s",
     "expect": true},
    {"name": "wrong_momentum", "op": "momentum_check", "omega": "omega", "mu": "mu_s2",
     "expect": false},
    {"name": "horizontal_form", "op": "momentum_check", "omega": "omega_x", "mu": "mu_zero",
     "expect": true},
    {"name": "contact_momentum_s", "op": "contact_momentum", "beta": "beta_contact",
     "expect": {"dim": 1, "terms": [{"m": 2, "re": "1"}]},
     "expect_vanishes_on_boundary": true},
    {"name": "dtheta_not_cuttable", "op": "contact_momentum", "beta": "beta_dtheta",
     "expect": {"dim": 1, "terms": [{"re": "1"}]},
     "expect_vanishes_on_boundary": false},
    {"name": "horizontal_one_form", "op": "contact_momentum", "beta": "beta_dx",
     "expect": {"dim": 1, "terms": []}, "expect_vanishes_on_boundary": true}
  ]
})json"},

        {"radial_lift", R"json({
  "schema": "cutkit-scenario/1",
  "name": "radial_lift",
  "seed": 42,
  "objects": {
    "identity": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2,
                 "phi1": [{"op": "var", "index": 0}],
                 "A": [[1, 0], [0, 1]]},
    "scale2": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2,
               "phi1": [{"op": "var", "index": 0}],
               "A": [[2, 0], [0, 2]]},
    "rotation": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2,
                 "phi1": [{"op": "var", "index": 0}],
                 "A": [[0, -1], [1, 0]]}
  },
  "jobs": [
    {"name": "identity_lift", "op": "lift_radial", "input": "identity", "samples": 100,
     "expect_values": [{"at": [0.3, 0.6, 0.8, 0.25], "out": [0.3, 0.6, 0.8, 0.25]}]},
    {"name": "scale_lift", "op": "lift_radial", "input": "scale2", "samples": 100,
     "expect_values": [{"at": [0.3, 0.6, 0.8, 0.25], "out": [0.3, 0.6, 0.8, 0.5]}]},
    {"name": "rotation_lift", "op": "lift_radial", "input": "rotation", "samples": 100,
     "expect_values": [{"at": [0.3, 0.6, 0.8, 0.25], "out": [0.3, -0.8, 0.6, 0.25]}]},
    {"name": "random_radial_lifts", "op": "property", "id": "lift_radial_commute",
     "trials": 10}
  ]
})json"},

        {"radial_squared_lift", R"json({
  "schema": "cutkit-scenario/1",
  "name": "radial_squared_lift",
  "seed": 42,
  "objects": {
    "scale2": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2, "param": "invariant",
               "phi1": [{"op": "var", "index": 0}],
               "A": [[2, 0], [0, 2]]},
    "shift": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2, "param": "invariant",
              "phi1": [{"op": "add", "args": [{"op": "var", "index": 0},
                                              {"op": "var", "index": 1}]}],
              "A": [[1, 0], [0, 1]]},
    "radial_style": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2, "param": "radial",
      "phi1": [{"op": "var", "index": 0}],
      "A": [[{"op": "add", "args": [1, {"op": "add", "args": [
               {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]},
               {"op": "mul", "args": [{"op": "var", "index": 2}, {"op": "var", "index": 2}]}]}]},
             0],
            [0,
             {"op": "add", "args": [1, {"op": "add", "args": [
               {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]},
               {"op": "mul", "args": [{"op": "var", "index": 2}, {"op": "var", "index": 2}]}]}]}]]}
  },
  "jobs": [
    {"name": "scale_lift", "op": "lift_radial_squared", "input": "scale2", "samples": 100,
     "expect_values": [{"at": [0.3, 0.6, 0.8, 0.25], "out": [0.3, 0.6, 0.8, 1.0]}]},
    {"name": "shift_lift", "op": "lift_radial_squared", "input": "shift", "samples": 100,
     "expect_values": [{"at": [0.3, 0.6, 0.8, 0.25], "out": [0.55, 0.6, 0.8, 0.25]}]},
    {"name": "invariant_radial_style", "op": "lift_radial_squared", "input": "radial_style",
     "samples": 100,
     "expect_values": [{"at": [0.3, 0.6, 0.8, 0.25], "out": [0.3, 0.6, 0.8, 0.390625]}]},
    {"name": "random_squared_lifts", "op": "property", "id": "lift_squared_commute",
     "trials": 10}
  ]
})json"},

        {"polar_correspondence", R"json({
  "schema": "cutkit-scenario/1",
  "name": "polar_correspondence",
  "seed": 42,
  "objects": {
    "pair_scale4": {"kind": "polar_pair", "a_re": 1, "a_im": 0, "g": 4},
    "pair_identity": {"kind": "polar_pair", "a_re": 1, "a_im": 0, "g": 1},
    "pair_phase": {"kind": "polar_pair",
                   "a_re": {"op": "cos", "args": [{"op": "var", "index": 0}]},
                   "a_im": {"op": "sin", "args": [{"op": "var", "index": 0}]},
                   "g": 1},
    "map_smooth": {"kind": "expr_map", "nvars": 2, "components": [
      {"op": "sub", "args": [
        {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "cos", "args": [
          {"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]},
        {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "sin", "args": [
          {"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]}]},
      {"op": "add", "args": [
        {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "sin", "args": [
          {"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]},
        {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "cos", "args": [
          {"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]}]}]},
    "map_rough": {"kind": "expr_map", "nvars": 2, "components": [
      {"op": "sub", "args": [
        {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "cos", "args": [
          {"op": "sqrt", "args": [{"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]}]},
        {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "sin", "args": [
          {"op": "sqrt", "args": [{"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]}]}]},
      {"op": "add", "args": [
        {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "sin", "args": [
          {"op": "sqrt", "args": [{"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]}]},
        {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "cos", "args": [
          {"op": "sqrt", "args": [{"op": "add", "args": [
            {"op": "mul", "args": [{"op": "var", "index": 0}, {"op": "var", "index": 0}]},
            {"op": "mul", "args": [{"op": "var", "index": 1}, {"op": "var", "index": 1}]}]}]}]}]}]}]}
  },
  "jobs": [
    {"name": "scale4", "op": "polar_correspondence", "pair": "pair_scale4", "samples": 50,
     "expect_diffeo": true},
    {"name": "identity", "op": "polar_correspondence", "pair": "pair_identity", "samples": 50,
     "expect_diffeo": true},
    {"name": "phase", "op": "polar_correspondence", "pair": "pair_phase", "samples": 50,
     "expect_diffeo": true},
    {"name": "probe_smooth", "op": "smoothness_probe", "input": "map_smooth",
     "expect_smooth": true},
    {"name": "probe_rough", "op": "smoothness_probe", "input": "map_rough",
     "expect_smooth": false},
    {"name": "suite", "op": "property", "id": "polar_correspondence_suite", "trials": 1}
  ]
})json"},

        {"nonequivariant_shear_rejection", R"json({
  "schema": "cutkit-scenario/1",
  "name": "nonequivariant_shear_rejection",
  "seed": 42,
  "objects": {
    "shear": {"kind": "lift_input", "base_dim": 1, "fiber_dim": 2, "param": "radial",
              "phi1": [{"op": "add", "args": [{"op": "var", "index": 0},
                                              {"op": "var", "index": 1}]}],
              "A": [[1, 0], [0, 1]]},
    "would_be_lift": {"kind": "expr_map", "nvars": 4, "components": [
      {"op": "add", "args": [{"op": "var", "index": 0},
                             {"op": "mul", "args": [{"op": "sqrt", "args": [{"op": "var", "index": 3}]},
                                                    {"op": "var", "index": 1}]}]},
      {"op": "var", "index": 1},
      {"op": "var", "index": 2},
      {"op": "var", "index": 3}]}
  },
  "jobs": [
    {"name": "radial_accepts", "op": "lift_radial", "input": "shear", "samples": 100},
    {"name": "squared_rejects", "op": "lift_radial_squared", "input": "shear",
     "samples": 100, "expect_error": "NonInvariantInput"},
    {"name": "would_be_lift_not_smooth", "op": "lift_smoothness_probe",
     "input": "would_be_lift", "at": [0.3, 1.0, 0.0], "expect_smooth": false},
    {"name": "paired_behaviour", "op": "property", "id": "shear_counterexample", "trials": 1}
  ]
})json"},
    };
    return entries;
}

inline const std::string* find_corpus_entry(const std::string& name) {
    for (auto& [entry_name, text] : corpus())
        if (entry_name == name) return &text;
    return nullptr;
}

}  // namespace cutkit
