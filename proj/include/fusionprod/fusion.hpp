#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fusionprod/modules.hpp"
#include "fusionprod/partitions.hpp"

namespace fusionprod {

/// Multiplicity function on (weight, grading degree).
using GradedCharacter = std::map<std::pair<Weight, int>, long long>;

CharacterPoly graded_character_at_q1(const GradedCharacter& gc, int rank);

/// Evaluation module V_c: x (x) t^s acts as c^s x.
struct CurrentModule {
  std::shared_ptr<const ExplicitModule> mod;
  Rat c;

  SparseVec apply(const GenLabel& g, int s, const SparseVec& v) const;
};

CurrentModule evaluation_module(std::shared_ptr<const ExplicitModule> v, Rat c);

/// Tensor product of evaluation modules of V(l_i varpi_m) at pairwise
/// distinct parameters, with the current action x (x) t^s |-> sum_i c_i^s
/// x^(i).  Basis indices run in mixed radix over the factors.
class EvaluationTensor {
 public:
  EvaluationTensor(int n, int m, const Partition& ell, std::vector<Rat> params);

  int rank() const { return n_; }
  int fund_index() const { return m_; }
  const Partition& ell() const { return ell_; }
  const std::vector<Rat>& params() const { return params_; }
  int factors() const { return static_cast<int>(mods_.size()); }
  long long dim() const { return dim_; }

  Weight weight_of(long long idx) const;
  long long highest_index() const;
  SparseVec apply(const GenLabel& g, int s, const SparseVec& v) const;

  /// Applies a plain power (x (x) t^s)^pow, optionally divided by pow!.
  SparseVec apply_power(const GenLabel& g, int s, long long pow, bool divided,
                        const SparseVec& v) const;

 private:
  int n_, m_;
  Partition ell_;
  std::vector<Rat> params_;
  std::vector<std::shared_ptr<const ExplicitModule>> mods_;
  std::vector<long long> strides_;
  long long dim_;
};

/// The fusion product: associated graded of the cyclic degree filtration on
/// an EvaluationTensor.  Built by breadth-first application of the lowering
/// current generators f_alpha (x) t^s (alpha at level one for varpi_m) to the
/// product of highest weight vectors, one degree level at a time, with
/// echelonized bases per weight space.
class FusionProduct {
 public:
  static FusionProduct build(int n, int m, const Partition& ell,
                             std::vector<Rat> params = {});

  const EvaluationTensor& space() const { return *space_; }
  long long dim() const { return dim_; }
  int top_degree() const { return top_degree_; }
  const GradedCharacter& graded_character() const { return gchar_; }

  SparseVec cyclic_vector() const;

  /// True when v lies in the filtration step F^{<= k}; F^{<= -1} = 0.
  bool in_filtration(const SparseVec& v, int k) const;

  /// Smallest k with v in F^{<= k}; -1 for v = 0.
  int filtration_degree(const SparseVec& v) const;

  /// Graded image of a basis row under x (x) t^s (degree tag + s component);
  /// used by property tests.  Returns (row -> coeff) on rows of that tag.
  std::vector<std::pair<int, Rat>> graded_apply(const GenLabel& g, int s,
                                                int row) const;
  int row_count() const { return static_cast<int>(row_weight_.size()); }
  int row_tag(int row) const { return row_tag_[row]; }
  const SparseVec& row_rep(int row) const { return row_rep_[row]; }

 private:
  FusionProduct() = default;

  struct Block {
    std::vector<long long> local_to_global;
    std::map<long long, int> global_to_local;
    EchelonBasis ech{0};
    std::vector<int> row_ids;  // global row id per echelon row
  };

  std::shared_ptr<EvaluationTensor> space_;
  long long dim_ = 0;
  int top_degree_ = 0;
  GradedCharacter gchar_;
  std::map<Weight, Block> blocks_;
  std::vector<int> row_tag_;
  std::vector<Weight> row_weight_;
  std::vector<SparseVec> row_rep_;

  Block& block_for(const Weight& w);
  bool expand_in_blocks(const SparseVec& v,
                        std::vector<std::pair<int, Rat>>* row_coeffs) const;
};

/// Roots alpha with <h_alpha, varpi_m> = 1 (the lowering current directions).
std::vector<Root> level_one_roots(int n, int m);

std::vector<Rat> default_params(int p);

bool parameter_independence_check(int n, int m, const Partition& ell,
                                  const std::vector<Rat>& params1,
                                  const std::vector<Rat>& params2);

/// Shared cache of irreducible modules keyed by (n, l, m).
std::shared_ptr<const ExplicitModule> irrep_cached(int n, int l, int m);

}  // namespace fusionprod
