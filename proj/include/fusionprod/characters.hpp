#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fusionprod/weights.hpp"

namespace fusionprod {

/// Finitely supported integer multiplicity function on the weight lattice.
/// Zero multiplicities are never stored; the ordered map keeps the support
/// lexicographically sorted, which makes serialization deterministic.
class CharacterPoly {
 public:
  CharacterPoly() : rank_(0) {}
  explicit CharacterPoly(int rank) : rank_(rank) {}
  static CharacterPoly monomial(const Weight& w, long long mult = 1);

  int rank() const { return rank_; }
  bool empty() const { return coeffs_.empty(); }
  long long at(const Weight& w) const;
  void add(const Weight& w, long long mult);

  CharacterPoly& operator+=(const CharacterPoly& o);
  CharacterPoly& operator-=(const CharacterPoly& o);
  CharacterPoly operator*(const CharacterPoly& o) const;
  friend CharacterPoly operator+(CharacterPoly a, const CharacterPoly& b) {
    return a += b;
  }
  friend CharacterPoly operator-(CharacterPoly a, const CharacterPoly& b) {
    return a -= b;
  }
  bool operator==(const CharacterPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Total multiplicity; the dimension when this is a module character.
  long long dimension() const;

  /// Image under a simple reflection of every support weight.
  CharacterPoly reflected(int i) const;
  bool weyl_invariant() const;

  const std::map<Weight, long long>& terms() const { return coeffs_; }

 private:
  int rank_;
  std::map<Weight, long long> coeffs_;
};

/// Demazure operator D_i(f) = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i}),
/// evaluated termwise through the closed-form weight string; total on the
/// lattice, never performs polynomial division.
CharacterPoly demazure(int i, const CharacterPoly& f);

/// Character of the simple module V(lambda), lambda dominant: the Demazure
/// operators along the canonical reduced word of w_0 applied to e^lambda.
CharacterPoly weyl_character(int n, const Weight& lambda);

long long weyl_dimension(int n, const Weight& lambda);

/// Decomposition of a Weyl-invariant polynomial into irreducible characters.
/// Repeatedly strips mult * weyl_character at the maximal support weight
/// (dominance order, ties broken lexicographically).  Multiplicities may be
/// negative; throws std::invalid_argument when f is not Weyl-invariant.
std::vector<std::pair<Weight, long long>> decompose_character(
    const CharacterPoly& f);

}  // namespace fusionprod
