#pragma once

#include <utility>
#include <vector>

#include "fusionprod/characters.hpp"
#include "fusionprod/cv.hpp"
#include "fusionprod/partitions.hpp"

namespace fusionprod {

struct SchurVerdict {
  int n = 0, m = 0;
  Partition ell, r;
  bool applicable = false;      // tail-sum dominance holds
  bool schur_positive = false;  // all decomposition coefficients >= 0
  bool witness = false;         // relations of ell annihilate fusion(r)
  std::vector<std::pair<Weight, long long>> decomposition;
};

/// Character difference prod ch V(l_i w_m) - prod ch V(r_i w_m) decomposed
/// into irreducibles.  When dominance fails the verdict is marked not
/// applicable; with diagnostic set the signed decomposition is still
/// reported.
SchurVerdict schur_positivity_check(int n, int m, const Partition& ell,
                                    const Partition& r,
                                    bool diagnostic = false);

/// True iff every defining relation of the pair (m, ell) annihilates the
/// graded cyclic vector of the fusion product for (m, r).
bool surjection_witness(int n, int m, const Partition& ell, const Partition& r,
                        const RelationCaps& caps = {});

/// Combined verdict (positivity plus witness) for a dominant pair.
SchurVerdict schur_pair_verdict(int n, int m, const Partition& ell,
                                const Partition& r, bool diagnostic = false);

CharacterPoly product_character(int n, int m, const Partition& ell);

}  // namespace fusionprod
