#pragma once

// JSON views of the pipeline records (vendored nlohmann/json); header-only so
// the core library stays free of the dependency.

#include <json.hpp>

#include "atap/pipeline.hpp"
#include "atap/selftest.hpp"

namespace atap {

inline constexpr const char* kSchemaVersion = "1";

inline nlohmann::json cplx_to_json(cplx v) {
  return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
}

inline cplx cplx_from_json(const nlohmann::json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline nlohmann::json record_to_json(const OutputRecord& r) {
  nlohmann::json j;
  j["params"] = {{"m", r.params.m}, {"n", r.params.n}};
  j["s"] = cplx_to_json(r.s);
  j["x"] = cplx_to_json(r.x);
  j["y"] = cplx_to_json(r.y);
  j["z"] = cplx_to_json(r.z);
  j["riley_residual"] = r.riley_residual;
  j["verify_residual"] = r.verify_residual;
  j["multiplicity"] = r.multiplicity;
  j["delta_source"] = r.delta_source;
  j["delta_coeffs"] = nlohmann::json::array();
  for (const cplx& c : r.delta_coeffs) j["delta_coeffs"].push_back(cplx_to_json(c));
  if (r.A) j["A"] = cplx_to_json(*r.A);
  if (r.B) j["B"] = cplx_to_json(*r.B);
  if (r.C) j["C"] = cplx_to_json(*r.C);
  if (r.quad_mid) j["quad_mid"] = cplx_to_json(*r.quad_mid);
  if (r.D1) j["D1"] = cplx_to_json(*r.D1);
  if (r.D2) j["D2"] = cplx_to_json(*r.D2);
  if (r.torsion_closed) j["torsion_closed"] = cplx_to_json(*r.torsion_closed);
  if (r.torsion_limit) j["torsion_limit"] = cplx_to_json(*r.torsion_limit);
  j["crosscheck"] = {{"ran", r.crosscheck.ran},
                     {"pass", r.crosscheck.pass},
                     {"discrepancy", r.crosscheck.discrepancy},
                     {"unit_shift", r.crosscheck.unit_shift},
                     {"sign", r.crosscheck.sign}};
  j["flags"] = r.flags;
  return j;
}

inline nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["m"] = c.m;
  j["n"] = c.n;
  if (c.x) j["x"] = cplx_to_json(*c.x);
  if (c.s) j["s"] = cplx_to_json(*c.s);
  j["tolerances"] = {{"equality", c.tol.equality},
                     {"root_residual", c.tol.root_residual},
                     {"dedup", c.tol.dedup}};
  j["seed"] = c.seed;
  return j;
}

inline nlohmann::json grid_summary_to_json(const GridSummary& g) {
  nlohmann::json j;
  j["cells"] = g.cells;
  j["records"] = g.records;
  j["crosscheck_pass"] = g.crosscheck_pass;
  j["crosscheck_fail"] = g.crosscheck_fail;
  j["closed_form_skipped"] = g.closed_form_skipped;
  j["worst_discrepancy"] = g.worst_discrepancy;
  j["torsion_sigma"] = g.torsion_sigma;
  j["torsion_sign_consistent"] = g.torsion_sign_consistent;
  j["worst_torsion_err"] = g.worst_torsion_err;
  j["pass"] = g.pass();
  auto cell_list = [](const std::vector<GridCell>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GridCell& c : cells) {
      nlohmann::json e;
      e["m"] = c.m;
      e["n"] = c.n;
      e["x"] = cplx_to_json(c.x);
      e["record"] = record_to_json(c.record);
      arr.push_back(e);
    }
    return arr;
  };
  j["failures"] = cell_list(g.failures);
  j["flagged"] = cell_list(g.flagged);
  return j;
}

inline nlohmann::json suites_to_json(const std::vector<SuiteResult>& suites) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SuiteResult& s : suites) {
    arr.push_back({{"name", s.name},
                   {"checks", s.checks},
                   {"failures", s.failures},
                   {"worst_err", s.worst_err},
                   {"notes", s.notes}});
  }
  return arr;
}

}  // namespace atap
