#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fusionprod/cv.hpp"
#include "fusionprod/fusion.hpp"
#include "fusionprod/partitions.hpp"

namespace fusionprod {

/// The cyclic module presented by the defining relation list, built by
/// iterative closure of the relation subspace inside the free commutative
/// algebra on the lowering currents f_alpha (x) t^s (alpha at level one).
///
/// The closure runs in three certified stages: a single-root quotient (the
/// sl2 subalgebra attached to each level one root), pairwise sub-closures
/// that pre-collapse the tuple universe, and the full closure under the
/// parabolic letters.  Every monomial dropped along the way is certified to
/// lie in the relation submodule, so the result is exactly the degree
/// truncation of the presented module at the configured t-degree cap.
class PresentedModule {
 public:
  static PresentedModule build(int n, int m, const Partition& ell,
                               RelationCaps caps = {});

  int rank() const { return n_; }
  int fund_index() const { return m_; }
  const Partition& ell() const { return ell_; }
  long long dim() const { return dim_; }
  int top_degree() const { return top_degree_; }
  const GradedCharacter& graded_character() const { return gchar_; }
  const RelationCaps& caps_used() const { return caps_; }
  long long stabilization_iterations() const { return iterations_; }

  /// Dimensions per grading degree, degree 0 first.
  std::vector<long long> graded_dims() const;

 private:
  friend class PresentedBuilder;
  int n_ = 0, m_ = 0;
  Partition ell_;
  long long dim_ = 0;
  int top_degree_ = 0;
  GradedCharacter gchar_;
  RelationCaps caps_;
  long long iterations_ = 0;
};

struct Verdict {
  int n = 0, m = 0;
  Partition ell;
  std::vector<Rat> params;
  bool surjection_witness = false;
  long long dim_presented = 0;
  long long dim_fusion = 0;
  bool graded_char_equal = false;
  bool families_equivalent = false;
  bool pass = false;
  RelationCaps caps_used;
  long long stabilization_iterations = 0;
  std::string detail;
};

/// Per-instance verification: the relation list annihilates the graded
/// cyclic vector of the fusion product, both modules have equal dimension,
/// and the graded characters agree termwise.
Verdict verify_theorem_instance(int n, int m, const Partition& ell,
                                RelationCaps caps = {},
                                std::vector<Rat> params = {});

}  // namespace fusionprod
