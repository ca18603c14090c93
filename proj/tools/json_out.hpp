#pragma once

#include "slagforge/acceptance.hpp"
#include "slagforge/cohomology.hpp"
#include "slagforge/deform.hpp"
#include "slagforge/lattice.hpp"
#include "slagforge/mirror.hpp"
#include "slagforge/parse.hpp"
#include "slagforge/slag.hpp"

#include <json.hpp>

namespace slagforge::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "slagforge/1";

// forms carry both the display string and a literal that parse_form reads back
inline json to_json(const WeightedForm& f, const std::vector<std::string>& dirs) {
  return {{"text", f.is_zero() ? "0" : f.str(dirs)}, {"literal", form_literal(f, dirs)}};
}

inline json to_json(const Scalar& s) { return s.str(); }

inline json to_json(const QuadMat2& m) {
  json rows = json::array();
  for (auto& r : m) rows.push_back({r[0].str(), r[1].str()});
  return rows;
}

inline json to_json(const IntMat2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

inline json model_json(const ModelManifold& m) {
  const auto& dn = m.direction_names;
  json br = json::array();
  for (auto& [ij, v] : brackets(m)) br.push_back(bracket_string(m, ij.first, ij.second));
  json fol = json::array();
  for (auto& f : m.foliations)
    fol.push_back({{"id", f.id}, {"triple", triple_name(f.triple)}, {"transverse", f.transverse}, {"section", f.section}});
  json out{{"name", m.name},
           {"complex", m.is_complex()},
           {"symplectic", m.is_symplectic()},
           {"dim", m.dim},
           {"params", m.params},
           {"structure_equations", structure_equations(m)},
           {"brackets", br},
           {"omega", to_json(m.omega, dn)},
           {"Omega", to_json(m.Omega, dn)},
           {"foliations", fol}};
  if (m.lattice.present) {
    out["lattice"] = {{"M", to_json(m.lattice.M)}, {"tau", m.lattice.tau.describe()}};
  }
  json checks = json::array();
  for (auto& c : consistency_report(m).checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  out["checks"] = checks;
  return out;
}

inline json to_json(const SlagSystem& s) {
  json eqs = json::array();
  for (auto& e : s.equations) eqs.push_back(e.str());
  return {{"phase", phase_name(s.phase)}, {"equations", eqs}};
}

inline json to_json(const DeformEquation& e) {
  json jets = json::array(), zero = json::array();
  for (auto& [mr, c] : e.jets) jets.push_back({{"field", mr.first + 1}, {"alpha", mr.second + 1}, {"coeff", c.str()}});
  for (auto& [r, c] : e.zero) zero.push_back({{"alpha", r + 1}, {"coeff", c.str()}});
  return {{"label", e.label}, {"text", e.str()}, {"jets", jets}, {"zero_order", zero}};
}

inline json to_json(const DeformSystem& s) {
  json eqs = json::array();
  for (auto& e : s.equations) eqs.push_back(to_json(e));
  const auto& cf = s.closed_form;
  return {{"triple", triple_name(s.triple)},
          {"signed_j", s.signed_j},
          {"equations", eqs},
          {"closed_form",
           {{"matches", cf.matches},
            {"statement_variant", cf.statement_variant},
            {"proof_variant", cf.proof_variant},
            {"discrepancies", cf.discrepancies}}}};
}

inline json to_json(const CohomologyTable& t, const ModelManifold& m) {
  json groups = json::array();
  for (auto& [pq, g] : t.groups) {
    json reps = json::array();
    for (auto& r : g.representatives) reps.push_back(to_json(r, m.direction_names));
    json entry{{"dim", g.dim}, {"representatives", reps}};
    if (t.bigraded) {
      entry["p"] = pq.first;
      entry["q"] = pq.second;
    } else {
      entry["degree"] = pq.first;
    }
    groups.push_back(entry);
  }
  json chars = json::array();
  for (auto& c : t.characters) chars.push_back(character_literal(c, m.direction_names));
  json out{{"kind", t.kind}, {"model", t.model}, {"bigraded", t.bigraded}, {"groups", groups}, {"characters", chars}};
  if (t.bigraded) {
    json rows = json::array();
    for (int k = 0; k <= m.dim; ++k) rows.push_back(t.row(k));
    out["rows"] = rows;
  } else {
    out["betti"] = t.betti();
  }
  return out;
}

inline json to_json(const ClosureVerdict& v) {
  return {{"verdict", kind_name(v.kind)},
          {"condition", v.condition},
          {"parameters", v.parameters},
          {"summary", v.str()}};
}

inline json to_json(const SusyReport& r, const ModelManifold& m) {
  const auto& dn = m.direction_names;
  json out{{"type", susy_name(r.type)},
           {"pass", r.pass()},
           {"dOmega", to_json(r.dOmega, dn)},
           {"domega", to_json(r.domega, dn)},
           {"conformal", to_json(r.conformal, dn)},
           {"rho", to_json(r.rho, dn)},
           {"notes", r.notes}};
  out["F"] = r.F ? json(r.F->str()) : json(nullptr);
  out["norm_sq"] = r.norm_sq ? json(r.norm_sq->str()) : json(nullptr);
  return out;
}

inline json to_json(const MirrorPair& p, const ModelManifold& m) {
  json dict = json::object();
  for (auto& [g, f] : p.dictionary) dict[std::to_string(g + 1)] = to_json(f, m.direction_names);
  json out{{"dual", p.dual.name},
           {"dual_tau", p.dual.lattice.tau.describe()},
           {"fiber_lattice", to_json(p.fiber_lattice)},
           {"dual_lattice", to_json(p.dual_lattice)},
           {"dictionary", dict},
           {"omega_transported", p.omega_transported}};
  out["Omega_transported"] = p.Omega_transported ? json(*p.Omega_transported) : json(nullptr);
  return out;
}

inline json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}};
}

}  // namespace slagforge::cli
