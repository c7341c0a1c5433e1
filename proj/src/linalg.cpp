#include "fusionprod/linalg.hpp"

#include <stdexcept>

namespace fusionprod {

void sparse_add(SparseVec& acc, const SparseVec& v, const Rat& coeff) {
  if (coeff.is_zero() || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j >= v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i >= acc.size() || v[j].first < acc[i].first) {
      out.emplace_back(v[j].first, v[j].second * coeff);
      ++j;
    } else {
      Rat s = acc[i].second + v[j].second * coeff;
      if (!s.is_zero()) out.emplace_back(acc[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

SparseVec sparse_scale(const SparseVec& v, const Rat& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * c);
  return out;
}

EchelonBasis::EchelonBasis(int dim) : dim_(dim), row_at_pivot_(dim, -1) {}

int EchelonBasis::insert(std::vector<Rat> v, int tag) {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("EchelonBasis::insert: dimension mismatch");
  int piv = -1;
  for (int j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    int r = row_at_pivot_[j];
    if (r < 0) {
      piv = j;
      break;
    }
    Rat c = v[j];
    const std::vector<Rat>& row = rows_[r];
    for (int k = j; k < dim_; ++k) {
      if (!row[k].is_zero()) v[k] -= c * row[k];
    }
  }
  if (piv < 0) return -1;
  Rat inv = v[piv].inv();
  for (int k = piv; k < dim_; ++k)
    if (!v[k].is_zero()) v[k] *= inv;
  rows_.push_back(std::move(v));
  tags_.push_back(tag);
  pivots_.push_back(piv);
  row_at_pivot_[piv] = static_cast<int>(rows_.size()) - 1;
  return static_cast<int>(rows_.size()) - 1;
}

bool EchelonBasis::expand(std::vector<Rat> v,
                          std::vector<std::pair<int, Rat>>* coeffs) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("EchelonBasis::expand: dimension mismatch");
  if (coeffs) coeffs->clear();
  for (int j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    int r = row_at_pivot_[j];
    if (r < 0) return false;
    Rat c = v[j];
    const std::vector<Rat>& row = rows_[r];
    for (int k = j; k < dim_; ++k)
      if (!row[k].is_zero()) v[k] -= c * row[k];
    if (coeffs) coeffs->emplace_back(r, std::move(c));
  }
  return true;
}

std::vector<Rat> EchelonBasis::reduce(std::vector<Rat> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("EchelonBasis::reduce: dimension mismatch");
  for (int j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    int r = row_at_pivot_[j];
    if (r < 0) continue;
    Rat c = v[j];
    const std::vector<Rat>& row = rows_[r];
    for (int k = j; k < dim_; ++k)
      if (!row[k].is_zero()) v[k] -= c * row[k];
  }
  return v;
}

int rank_bareiss(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  Rat prev(1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[rank], m[sel]);
    const Rat piv = m[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * piv - m[r][col] * m[rank][c]) / prev;
      m[r][col] = Rat(0);
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace fusionprod
