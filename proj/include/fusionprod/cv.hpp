#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "fusionprod/fusion.hpp"

namespace fusionprod {

/// Exponent sequence (b_j)_{j >= 0}, stored up to the last nonzero entry.
using ExponentSeq = std::vector<int>;

enum class SeqMode { Full, BelowK, FromK };

/// All sequences with sum b_j = r and sum j b_j = s, optionally restricted to
/// b_j = 0 for j >= k (BelowK) or j < k (FromK).
std::vector<ExponentSeq> enum_exponent_sequences(int r, int s,
                                                 SeqMode mode = SeqMode::Full,
                                                 int k = 0);

/// One letter of a relation word: (x (x) t^tdeg)^power, divided by power!
/// when divided is set.
struct RelLetter {
  GenLabel gen;
  int tdeg = 0;
  long long power = 1;
  bool divided = false;
};

struct RelTerm {
  Rat coeff;
  std::vector<RelLetter> word;  // empty word = identity
};

/// Formal combination of ordered words, homogeneous in t-degree.
struct RelationElement {
  std::string family;
  std::string label;
  int tdegree = 0;
  std::vector<RelTerm> terms;
};

/// Evaluates R v on an evaluation tensor; the left letter of a word acts
/// last.
SparseVec apply_relation(const RelationElement& R, const EvaluationTensor& T,
                         const SparseVec& v);

/// Divided-power sums over exponent sequences in the letters x (x) t^j.
RelationElement power_sum(const GenLabel& gen, int r, int s,
                          SeqMode mode = SeqMode::Full, int k = 0);

/// Plain-power relation (e_a (x) t)^s f_a^{r+s}.
RelationElement raw_relation(const Root& a, int r, int s);

enum class CheckStatus { Holds, Fails, Inapplicable };

/// Exact identity (e_a (x) t)^{(s)} f_a^{(r+s)} v = (-1)^s f_a(r,s) v on the
/// associated graded cyclic vector of a fusion product; Inapplicable when the
/// hypotheses (e_a (x) C[t] and h_a (x) t C[t] annihilate v) fail.
CheckStatus check_garland(const FusionProduct& G, const Root& a, int r, int s);

/// Symbolic recursion x(r,s) = _k x(r,s) + sum_{r',s'} x(r-r',s-s')_k _k
/// x(r',s') over commuting indeterminates, the sum over r' < r, s' <= s with
/// r' + s' >= k r' + K.
CheckStatus check_cv_recursion(int r, int s, int k, int K);

/// True when r,s,k >= 1 and r + s >= 1 + k r + L_{k+q}.
bool tq_admissible(const Partition& ell, int q, int r, int s, int k);

struct RelationCaps {
  int max_tdegree = -1;  // D: t-degree bound for the degreewise families
  int max_rs = -1;       // R: bound on r+s in the power-sum families
  long long max_word = -1;  // W: optional monomial length bound
};

RelationCaps resolve_caps(int n, int m, const Partition& ell,
                          const RelationCaps& caps);

/// The defining relation list for the pair (m, ell): annihilation of the
/// raising currents, Cartan eigenvalue relations, annihilation by the level
/// zero lowering currents, the power relations f_a^{L1+1}, and for each
/// level one root both the plain-power family and its divided-power forms.
/// Throws CapExceeded when max_rs cannot reach the k = p family.
std::vector<RelationElement> relation_set(int n, int m, const Partition& ell,
                                          const RelationCaps& caps = {});

struct WitnessReport {
  bool all_hold = true;
  int checked = 0;
  std::string first_failure;
};

/// Checks that every relation annihilates the graded cyclic vector of G.
WitnessReport relations_annihilate(const std::vector<RelationElement>& rels,
                                   const FusionProduct& G);

/// Both sides of the equivalence between the plain-power family and the
/// divided-power family on the graded cyclic vector: (raw holds, divided
/// holds).  The hypotheses are checked first; throws when they fail.
std::pair<bool, bool> family_equivalence(const FusionProduct& G,
                                         const RelationCaps& caps = {});

}  // namespace fusionprod
