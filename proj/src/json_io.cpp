#include "fusionprod/json_io.hpp"

namespace fusionprod {

namespace {

json rat_json(const Rat& r) {
  constexpr long long kSafe = 1LL << 53;
  if (!r.is_big() && r.num_small() < kSafe && r.num_small() > -kSafe)
    return json{r.num_small(), r.den_small()};
  return json{r.num_str(), r.den_str()};
}

}  // namespace

json character_to_json(const CharacterPoly& ch) {
  json out = json::array();
  for (const auto& [w, mult] : ch.terms()) out.push_back(json{w, mult});
  return out;
}

json graded_character_to_json(const GradedCharacter& gc) {
  json out = json::array();
  for (const auto& [key, mult] : gc)
    out.push_back(json{key.first, key.second, mult});
  return out;
}

json module_to_json(const ExplicitModule& mod) {
  json out;
  out["rank"] = mod.rank;
  out["dimension"] = mod.dim;
  out["highest"] = mod.highest;
  out["weights"] = mod.weights;
  json actions = json::object();
  for (const auto& [g, mat] : mod.actions) {
    json entries = json::array();
    for (int col = 0; col < static_cast<int>(mat.size()); ++col)
      for (const auto& [row, c] : mat[col]) {
        json quad = json::array();
        quad.push_back(row);
        quad.push_back(col);
        json r = rat_json(c);
        quad.push_back(r[0]);
        quad.push_back(r[1]);
        entries.push_back(quad);
      }
    actions[g.str()] = entries;
  }
  out["actions"] = actions;
  return out;
}

json caps_to_json(const RelationCaps& caps) {
  json out;
  out["max_tdegree"] = caps.max_tdegree;
  out["max_rs"] = caps.max_rs;
  out["max_word"] = caps.max_word;
  return out;
}

std::string partition_str(const Partition& p) { return p.str(); }

json verdict_to_json(const Verdict& v) {
  json out;
  json inst;
  inst["n"] = v.n;
  inst["m"] = v.m;
  inst["ell"] = v.ell.parts();
  json params = json::array();
  for (const Rat& c : v.params) params.push_back(c.str());
  inst["params"] = params;
  out["instance"] = inst;
  out["surjection_witness"] = v.surjection_witness;
  out["dim_presented"] = v.dim_presented;
  out["dim_fusion"] = v.dim_fusion;
  out["graded_char_equal"] = v.graded_char_equal;
  out["families_equivalent"] = v.families_equivalent;
  out["pass"] = v.pass;
  out["caps_used"] = caps_to_json(v.caps_used);
  out["stabilization_iterations"] = v.stabilization_iterations;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

json schur_verdict_to_json(const SchurVerdict& v) {
  json out;
  out["n"] = v.n;
  out["m"] = v.m;
  out["ell"] = v.ell.parts();
  out["r"] = v.r.parts();
  out["dominates"] = v.applicable;
  out["schur_positive"] = v.schur_positive;
  out["witness"] = v.witness;
  json dec = json::array();
  for (const auto& [w, mult] : v.decomposition) dec.push_back(json{w, mult});
  out["decomposition"] = dec;
  return out;
}

}  // namespace fusionprod
