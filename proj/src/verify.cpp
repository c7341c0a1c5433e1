#include "fusionprod/errors.hpp"
#include "fusionprod/presented.hpp"

namespace fusionprod {

Verdict verify_theorem_instance(int n, int m, const Partition& ell,
                                RelationCaps caps_in, std::vector<Rat> params) {
  Verdict v;
  v.n = n;
  v.m = m;
  v.ell = ell;
  RelationCaps caps = resolve_caps(n, m, ell, caps_in);
  v.caps_used = caps;

  FusionProduct fusion = FusionProduct::build(n, m, ell, params);
  v.params = fusion.space().params();
  v.dim_fusion = fusion.dim();

  if (fusion.top_degree() > caps.max_tdegree)
    throw CapExceeded("verify: fusion product reaches degree " +
                      std::to_string(fusion.top_degree()) +
                      " beyond the t-degree cap " +
                      std::to_string(caps.max_tdegree));

  std::vector<RelationElement> rels = relation_set(n, m, ell, caps);
  WitnessReport witness = relations_annihilate(rels, fusion);
  v.surjection_witness = witness.all_hold;
  if (!witness.all_hold) v.detail = "relation fails on the fusion generator: " +
                                    witness.first_failure;

  if (ell.length() > 0) {
    auto [raw_ok, divided_ok] = family_equivalence(fusion, caps);
    v.families_equivalent = (raw_ok == divided_ok);
    if (!v.families_equivalent)
      v.detail = "plain-power and divided-power families disagree";
  } else {
    v.families_equivalent = true;
  }

  PresentedModule presented = PresentedModule::build(n, m, ell, caps);
  v.dim_presented = presented.dim();
  v.stabilization_iterations = presented.stabilization_iterations();
  v.graded_char_equal =
      presented.graded_character() == fusion.graded_character();
  if (!v.graded_char_equal && v.detail.empty())
    v.detail = "graded characters differ";

  v.pass = v.surjection_witness && v.families_equivalent &&
           v.dim_presented == v.dim_fusion && v.graded_char_equal;
  if (v.pass) v.detail.clear();
  return v;
}

}  // namespace fusionprod
