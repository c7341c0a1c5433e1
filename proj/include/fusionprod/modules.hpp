#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusionprod/characters.hpp"
#include "fusionprod/linalg.hpp"
#include "fusionprod/weights.hpp"

namespace fusionprod {

/// Chevalley generator label: e/f carry an interval root, h a simple index.
struct GenLabel {
  char type;  // 'e', 'f' or 'h'
  int lo;
  int hi;  // for 'h': lo == hi == i

  static GenLabel E(const Root& a) { return {'e', a.lo, a.hi}; }
  static GenLabel F(const Root& a) { return {'f', a.lo, a.hi}; }
  static GenLabel H(int i) { return {'h', i, i}; }
  auto operator<=>(const GenLabel&) const = default;
  std::string str() const;
};

/// Sparse column-major action matrix: column j lists (row, coeff).
using SparseMat = std::vector<SparseVec>;

SparseVec apply_sparse(const SparseMat& m, const SparseVec& v);
SparseMat sparse_commutator(const SparseMat& a, const SparseMat& b);

/// Finite-dimensional sl(n+1)-module with a weight-labelled basis and exact
/// rational action matrices for all Chevalley generators (simple e_i, f_i,
/// h_i plus the interval root vectors e_alpha, f_alpha).
struct ExplicitModule {
  int rank = 0;
  int dim = 0;
  std::vector<Weight> weights;        // weight of each basis vector
  std::map<GenLabel, SparseMat> actions;
  int highest = -1;                   // index of the highest weight vector

  const SparseMat& action(const GenLabel& g) const;
  SparseVec apply(const GenLabel& g, const SparseVec& v) const;
  CharacterPoly character() const;
};

/// The simple module V(l * varpi_m), realized as the span of all f-words on
/// the top vector of Sym^l(Lambda^m C^{n+1}).  l = 0 gives the trivial
/// module.
ExplicitModule build_irrep(int n, int l, int m);

/// Plain tensor product; generators act by x (x) 1 + 1 (x) x.
ExplicitModule tensor(const ExplicitModule& a, const ExplicitModule& b);

/// Exact bracket identity checks ([h_i,e_j] = a_ij e_j, [e_i,f_j] =
/// delta_ij h_i, [e_a,f_a] = h_a, ...).  Returns an empty string on success,
/// otherwise a description of the first failure.
std::string check_module_brackets(const ExplicitModule& mod);

}  // namespace fusionprod
