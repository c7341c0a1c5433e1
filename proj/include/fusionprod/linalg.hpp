#pragma once

#include <utility>
#include <vector>

#include "fusionprod/rational.hpp"

namespace fusionprod {

using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by index

void sparse_add(SparseVec& acc, const SparseVec& v, const Rat& coeff);
SparseVec sparse_scale(const SparseVec& v, const Rat& c);

/// Incrementally maintained basis of a subspace of Q^dim.
/// Pivot selection is by earliest coordinate index; each stored row is
/// normalized so its pivot entry is 1 and reduced against the rows present
/// at insertion time.  Rows carry an integer tag (filtration degree).
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the basis; if a nonzero remainder survives it joins
  /// the basis and the new row index is returned, otherwise -1.
  int insert(std::vector<Rat> v, int tag);

  /// Expands v in the basis rows.  Returns true when the remainder is zero;
  /// coeffs then holds the unique expansion (row index, coefficient).
  bool expand(std::vector<Rat> v,
              std::vector<std::pair<int, Rat>>* coeffs = nullptr) const;

  /// Remainder of v after eliminating all pivot coordinates; the canonical
  /// representative of v's class modulo the row span.
  std::vector<Rat> reduce(std::vector<Rat> v) const;

  int tag(int row) const { return tags_[row]; }
  int pivot(int row) const { return pivots_[row]; }
  const std::vector<Rat>& row(int r) const { return rows_[r]; }

 private:
  int dim_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> tags_;
  std::vector<int> pivots_;
  std::vector<int> row_at_pivot_;
};

/// Rank by fraction-free (Bareiss) elimination with pivoting by earliest
/// column index; used as an independent cross-check of EchelonBasis.
int rank_bareiss(std::vector<std::vector<Rat>> m);

}  // namespace fusionprod
