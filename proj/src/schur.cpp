#include "fusionprod/schur.hpp"

#include "fusionprod/presented.hpp"

namespace fusionprod {

CharacterPoly product_character(int n, int m, const Partition& ell) {
  CharacterPoly out = CharacterPoly::monomial(zero_weight(n));
  for (int i = 1; i <= ell.length(); ++i) {
    Weight lw = fundamental_weight(n, m);
    for (int& x : lw) x *= ell.part(i);
    out = out * weyl_character(n, lw);
  }
  return out;
}

SchurVerdict schur_positivity_check(int n, int m, const Partition& ell,
                                    const Partition& r, bool diagnostic) {
  SchurVerdict v;
  v.n = n;
  v.m = m;
  v.ell = ell;
  v.r = r;
  v.applicable = dominates(ell, r);
  if (!v.applicable && !diagnostic) return v;
  CharacterPoly diff = product_character(n, m, ell);
  diff -= product_character(n, m, r);
  v.decomposition = decompose_character(diff);
  v.schur_positive = true;
  for (const auto& [w, mult] : v.decomposition)
    if (mult < 0) v.schur_positive = false;
  return v;
}

bool surjection_witness(int n, int m, const Partition& ell, const Partition& r,
                        const RelationCaps& caps_in) {
  if (ell.total() != r.total())
    throw std::invalid_argument("surjection_witness: totals differ");
  RelationCaps caps = resolve_caps(n, m, ell, caps_in);
  // The target's grading can be deeper than the source's default cap.
  RelationCaps rcaps = resolve_caps(n, m, r, caps_in);
  caps.max_tdegree = std::max(caps.max_tdegree, rcaps.max_tdegree);
  std::vector<RelationElement> rels = relation_set(n, m, ell, caps);
  FusionProduct target = FusionProduct::build(n, m, r);
  return relations_annihilate(rels, target).all_hold;
}

SchurVerdict schur_pair_verdict(int n, int m, const Partition& ell,
                                const Partition& r, bool diagnostic) {
  SchurVerdict v = schur_positivity_check(n, m, ell, r, diagnostic);
  if (v.applicable || diagnostic) v.witness = surjection_witness(n, m, ell, r);
  return v;
}

}  // namespace fusionprod
