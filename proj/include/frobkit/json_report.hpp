#ifndef FROBKIT_JSON_REPORT_HPP
#define FROBKIT_JSON_REPORT_HPP

#include <string>

#include <json.hpp>

#include "frobkit/dmodule.hpp"
#include "frobkit/frobenius_root.hpp"
#include "frobkit/semigroup.hpp"
#include "frobkit/test_ideal.hpp"

namespace frobkit {

// nlohmann::json objects iterate in sorted key order, which gives the
// byte-identical output the reports promise.
using json = nlohmann::json;

inline json to_json(const Ideal& a) { return json(a.generator_strings()); }

inline std::string monomial_string(const Ring& R, const Monomial& m) {
  return Polynomial::from_term(R, m, 1).to_string();
}

inline json to_json(const FrobeniusChainReport& r) {
  json levels = json::array();
  for (const auto& [e, ideal] : r.levels)
    levels.push_back({{"e", e}, {"ideal", to_json(ideal)}});
  json out{{"x", r.x.to_string()},
           {"e_max", r.e_max},
           {"levels", levels},
           {"stabilized", r.stabilization_index.has_value()}};
  if (r.stabilization_index)
    out["stabilization_index"] = *r.stabilization_index;
  return out;
}

inline json to_json(const DeltaCertificate& c) {
  json images = json::array();
  for (const auto& [mu, g] : c.images)
    images.push_back({{"basis_monomial", monomial_string(c.x.ring(), mu)},
                      {"image", g.to_string()}});
  return json{{"p", c.x.ring().characteristic()},
              {"level", c.level},
              {"x", c.x.to_string()},
              {"images", images}};
}

inline json to_json(const GenerationReport& r) {
  json out{{"chain", to_json(r.chain)},
           {"generated", r.generated},
           {"conclusion", r.conclusion}};
  if (r.delta) {
    out["delta"] = to_json(*r.delta);
    out["delta_verified"] = r.delta_verified;
  }
  return out;
}

inline json to_json(const TestIdealResult& r) {
  return json{{"tau", to_json(r.tau)},
              {"stabilized_at", r.stabilized_at},
              {"consecutive_equalities", r.equalities},
              {"heuristic_guard", r.heuristic_guard}};
}

inline json to_json(const JumpReport& r) {
  json plateaus = json::array();
  for (const auto& pl : r.plateaus)
    plateaus.push_back({{"from", pl.from.str()},
                        {"to", pl.to.str()},
                        {"tau_generators", to_json(pl.tau)},
                        {"interior_checked", pl.interior_checked}});
  json jumps = json::array();
  for (const auto& j : r.jumps) {
    json jj{{"interval_lo", j.lo.str()},
            {"interval_hi", j.hi.str()},
            {"tau_left", to_json(j.tau_left)},
            {"tau_right", to_json(j.tau_right)},
            {"exact_candidate", j.exact_candidate}};
    if (j.exact_candidate) jj["value"] = j.hi.str();
    jumps.push_back(jj);
  }
  const Ring& R = r.a.ring();
  return json{{"p", R.characteristic()},
              {"vars", R.variables()},
              {"generators", to_json(r.a)},
              {"T", r.T.str()},
              {"e_max", r.e_max},
              {"resolution", r.resolution.str()},
              {"plateaus", plateaus},
              {"jumps", jumps},
              {"heuristic_guard_used", r.heuristic_guard_used}};
}

inline json to_json(const FFRTDecomposition& d) {
  json classes = json::array();
  for (const auto& cl : d.classes)
    classes.push_back({{"residue", cl.residue},
                       {"least", cl.least},
                       {"scaled_ideal", cl.scaled_ideal.str()},
                       {"isomorphic_to_conductor_ideal",
                        cl.isomorphic_to_conductor_ideal}});
  return json{{"q", d.q},
              {"classes", classes},
              {"multiplicity_claim", d.multiplicity_claim}};
}

inline json to_json(const FracChainReport& r) {
  json levels = json::array();
  for (const auto& [e, ideal] : r.levels)
    levels.push_back({{"e", e}, {"ideal", ideal.str()}});
  json out{{"x", r.x},
           {"module", r.module.str()},
           {"e_max", r.e_max},
           {"levels", levels},
           {"stabilized", r.stabilization_index.has_value()}};
  if (r.stabilization_index)
    out["stabilization_index"] = *r.stabilization_index;
  return out;
}

}  // namespace frobkit

#endif
