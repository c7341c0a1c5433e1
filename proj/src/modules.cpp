#include "fusionprod/modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusionprod {

std::string GenLabel::str() const {
  if (type == 'h') return "h" + std::to_string(lo);
  std::string s(1, type);
  s += "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
  return s;
}

SparseVec apply_sparse(const SparseMat& m, const SparseVec& v) {
  SparseVec out;
  for (const auto& [j, c] : v) sparse_add(out, m[j], c);
  return out;
}

SparseMat sparse_commutator(const SparseMat& a, const SparseMat& b) {
  size_t dim = a.size();
  SparseMat out(dim);
  for (size_t j = 0; j < dim; ++j) {
    SparseVec col = apply_sparse(a, b[j]);
    sparse_add(col, apply_sparse(b, a[j]), Rat(-1));
    out[j] = std::move(col);
  }
  return out;
}

const SparseMat& ExplicitModule::action(const GenLabel& g) const {
  auto it = actions.find(g);
  if (it == actions.end())
    throw std::invalid_argument("ExplicitModule: no action for " + g.str());
  return it->second;
}

SparseVec ExplicitModule::apply(const GenLabel& g, const SparseVec& v) const {
  return apply_sparse(action(g), v);
}

CharacterPoly ExplicitModule::character() const {
  CharacterPoly ch(rank);
  for (const Weight& w : weights) ch.add(w, 1);
  return ch;
}

namespace {

// Basis bookkeeping for Sym^l(Lambda^m C^{n+1}): a wedge is a sorted m-subset
// of {1..n+1}, a symmetric monomial a sorted multiset of l wedge indices.
struct SymSpace {
  int n, l, m;
  std::vector<std::vector<int>> wedges;
  std::map<std::vector<int>, int> wedge_index;
  std::vector<std::vector<int>> monos;
  std::map<std::vector<int>, int> mono_index;

  SymSpace(int n_, int l_, int m_) : n(n_), l(l_), m(m_) {
    std::vector<int> cur;
    gen_wedges(1, cur);
    std::vector<int> mono;
    gen_monos(0, mono);
  }

  void gen_wedges(int start, std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) == m) {
      wedge_index[cur] = static_cast<int>(wedges.size());
      wedges.push_back(cur);
      return;
    }
    for (int a = start; a <= n + 1; ++a) {
      cur.push_back(a);
      gen_wedges(a + 1, cur);
      cur.pop_back();
    }
  }

  void gen_monos(int min_idx, std::vector<int>& mono) {
    if (static_cast<int>(mono.size()) == l) {
      mono_index[mono] = static_cast<int>(monos.size());
      monos.push_back(mono);
      return;
    }
    for (int w = min_idx; w < static_cast<int>(wedges.size()); ++w) {
      mono.push_back(w);
      gen_monos(w, mono);
      mono.pop_back();
    }
  }

  Weight wedge_weight(int w) const {
    Weight out(n, 0);
    for (int a : wedges[w]) {
      if (a <= n) out[a - 1] += 1;
      if (a - 2 >= 0) out[a - 2] -= 1;
    }
    return out;
  }

  Weight mono_weight(const std::vector<int>& mono) const {
    Weight out(n, 0);
    for (int w : mono) out = weight_add(out, wedge_weight(w));
    return out;
  }

  // f_i on a wedge replaces letter i by i+1 (0 if impossible); e_i the
  // reverse.  Adjacent replacement keeps the subset sorted, so no signs.
  int wedge_f(int w, int i) const {
    std::vector<int> s = wedges[w];
    auto it = std::find(s.begin(), s.end(), i);
    if (it == s.end() || std::find(s.begin(), s.end(), i + 1) != s.end())
      return -1;
    *it = i + 1;
    std::sort(s.begin(), s.end());
    return wedge_index.at(s);
  }

  int wedge_e(int w, int i) const {
    std::vector<int> s = wedges[w];
    auto it = std::find(s.begin(), s.end(), i + 1);
    if (it == s.end() || std::find(s.begin(), s.end(), i) != s.end()) return -1;
    *it = i;
    std::sort(s.begin(), s.end());
    return wedge_index.at(s);
  }

  // Leibniz action on a symmetric monomial.
  SparseVec apply_ef(char type, int i, int mono_idx) const {
    SparseVec out;
    const std::vector<int>& mono = monos[mono_idx];
    for (size_t pos = 0; pos < mono.size(); ++pos) {
      if (pos > 0 && mono[pos] == mono[pos - 1]) continue;  // dedupe positions
      long long rep = std::count(mono.begin(), mono.end(), mono[pos]);
      int img = type == 'f' ? wedge_f(mono[pos], i) : wedge_e(mono[pos], i);
      if (img < 0) continue;
      std::vector<int> t = mono;
      t[pos] = img;
      std::sort(t.begin(), t.end());
      SparseVec term{{mono_index.at(t), Rat(rep)}};
      sparse_add(out, term, Rat(1));
    }
    return out;
  }
};

}  // namespace

ExplicitModule build_irrep(int n, int l, int m) {
  if (n < 1) throw std::invalid_argument("build_irrep: rank must be >= 1");
  if (m < 1 || m > n) throw std::invalid_argument("build_irrep: index out of range");
  if (l < 0) throw std::invalid_argument("build_irrep: negative highest weight");

  ExplicitModule mod;
  mod.rank = n;
  if (l == 0) {
    mod.dim = 1;
    mod.weights = {zero_weight(n)};
    mod.highest = 0;
    for (int i = 1; i <= n; ++i) {
      mod.actions[GenLabel::H(i)] = SparseMat(1);
      mod.actions[GenLabel::E(simple_root(i))] = SparseMat(1);
      mod.actions[GenLabel::F(simple_root(i))] = SparseMat(1);
    }
    for (const Root& a : positive_roots(n)) {
      if (a.hi > a.lo) {
        mod.actions[GenLabel::E(a)] = SparseMat(1);
        mod.actions[GenLabel::F(a)] = SparseMat(1);
      }
    }
    return mod;
  }

  SymSpace amb(n, l, m);
  int amb_dim = static_cast<int>(amb.monos.size());

  // f-closure of the top monomial, echelonized per weight space.
  struct Block {
    EchelonBasis ech;
    std::vector<int> local_to_global;  // ambient indices of the local coords
    std::map<int, int> global_to_local;
    Block() : ech(0) {}
  };
  std::map<Weight, Block> blocks;
  std::vector<int> top_mono(l, amb.wedge_index.at([&] {
                              std::vector<int> t(m);
                              for (int i = 0; i < m; ++i) t[i] = i + 1;
                              return t;
                            }()));
  std::vector<SparseVec> basis_vecs;  // module basis in ambient coords
  std::vector<Weight> basis_wts;

  // Local blocks are indexed over the full ambient weight space so that
  // insertion never needs re-indexing.
  auto block_for = [&](const Weight& w) -> Block& {
    auto it = blocks.find(w);
    if (it != blocks.end()) return it->second;
    Block b;
    for (int g = 0; g < amb_dim; ++g)
      if (amb.mono_weight(amb.monos[g]) == w) {
        b.global_to_local[g] = static_cast<int>(b.local_to_global.size());
        b.local_to_global.push_back(g);
      }
    b.ech = EchelonBasis(static_cast<int>(b.local_to_global.size()));
    return blocks.emplace(w, std::move(b)).first->second;
  };

  // The module basis is the echelon rows themselves, so the stored vectors
  // must be the normalized reduced rows, not the raw images.
  auto try_insert = [&](const SparseVec& v, const Weight& w) -> bool {
    Block& b = block_for(w);
    std::vector<Rat> dense(b.local_to_global.size());
    for (const auto& [g, c] : v) dense[b.global_to_local.at(g)] = c;
    int r = b.ech.insert(std::move(dense), 0);
    if (r < 0) return false;
    SparseVec row;
    const std::vector<Rat>& stored = b.ech.row(r);
    for (size_t k = 0; k < stored.size(); ++k)
      if (!stored[k].is_zero())
        row.emplace_back(b.local_to_global[k], stored[k]);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    basis_vecs.push_back(std::move(row));
    basis_wts.push_back(w);
    return true;
  };

  SparseVec top{{amb.mono_index.at(top_mono), Rat(1)}};
  Weight top_w = amb.mono_weight(top_mono);
  try_insert(top, top_w);
  top = basis_vecs.back();
  mod.highest = 0;

  std::vector<std::pair<SparseVec, Weight>> queue{{top, top_w}};
  while (!queue.empty()) {
    auto [v, w] = std::move(queue.back());
    queue.pop_back();
    for (int i = 1; i <= n; ++i) {
      SparseVec img;
      for (const auto& [g, c] : v) sparse_add(img, amb.apply_ef('f', i, g), c);
      if (img.empty()) continue;
      Weight wi = weight_sub(w, root_weight(n, simple_root(i)));
      if (try_insert(img, wi)) queue.emplace_back(basis_vecs.back(), wi);
    }
  }

  mod.dim = static_cast<int>(basis_vecs.size());
  mod.weights = basis_wts;

  // Map (weight, block row) -> module basis index; rows were inserted in
  // basis order, so the r-th row of a block is the r-th basis vector with
  // that weight.
  std::map<Weight, std::vector<int>> block_rows;
  for (int b = 0; b < mod.dim; ++b) block_rows[basis_wts[b]].push_back(b);

  auto module_coords = [&](const SparseVec& v, const Weight& w) -> SparseVec {
    if (v.empty()) return {};
    Block& b = block_for(w);
    std::vector<Rat> dense(b.local_to_global.size());
    for (const auto& [g, c] : v) dense[b.global_to_local.at(g)] = c;
    std::vector<std::pair<int, Rat>> coeffs;
    if (!b.ech.expand(std::move(dense), &coeffs))
      throw std::runtime_error("build_irrep: image escapes the module span");
    const std::vector<int>& rows = block_rows.at(w);
    SparseVec out;
    for (auto& [row, c] : coeffs) out.emplace_back(rows[row], std::move(c));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    return out;
  };

  for (int i = 1; i <= n; ++i) {
    SparseMat fe(mod.dim), ee(mod.dim), hh(mod.dim);
    for (int bidx = 0; bidx < mod.dim; ++bidx) {
      const SparseVec& v = basis_vecs[bidx];
      const Weight& w = basis_wts[bidx];
      SparseVec fi, eiv;
      for (const auto& [g, c] : v) {
        sparse_add(fi, amb.apply_ef('f', i, g), c);
        sparse_add(eiv, amb.apply_ef('e', i, g), c);
      }
      if (!fi.empty())
        fe[bidx] = module_coords(fi, weight_sub(w, root_weight(n, simple_root(i))));
      if (!eiv.empty())
        ee[bidx] = module_coords(eiv, weight_add(w, root_weight(n, simple_root(i))));
      if (w[i - 1] != 0) hh[bidx] = SparseVec{{bidx, Rat(w[i - 1])}};
    }
    mod.actions[GenLabel::F(simple_root(i))] = std::move(fe);
    mod.actions[GenLabel::E(simple_root(i))] = std::move(ee);
    mod.actions[GenLabel::H(i)] = std::move(hh);
  }

  // Interval root vectors by right-nested brackets of the simple ones,
  // shorter intervals first; f_alpha is rescaled so that [e_alpha, f_alpha]
  // = h_alpha exactly.
  std::vector<Root> by_length = positive_roots(n);
  std::sort(by_length.begin(), by_length.end(),
            [](const Root& x, const Root& y) {
              return std::make_tuple(x.hi - x.lo, x.lo) <
                     std::make_tuple(y.hi - y.lo, y.lo);
            });
  for (const Root& a : by_length) {
    if (a.hi == a.lo) continue;
    Root sub{a.lo + 1, a.hi, true};
    SparseMat ea = sparse_commutator(mod.action(GenLabel::E(simple_root(a.lo))),
                                     mod.action(GenLabel::E(sub)));
    // The stored f_sub is already normalized, so the nested bracket picks up
    // one sign; flipping it keeps [e_a, f_a] = h_a exact at every length.
    SparseMat fa = sparse_commutator(mod.action(GenLabel::F(sub)),
                                     mod.action(GenLabel::F(simple_root(a.lo))));
    mod.actions[GenLabel::E(a)] = std::move(ea);
    mod.actions[GenLabel::F(a)] = std::move(fa);
  }

  return mod;
}

ExplicitModule tensor(const ExplicitModule& a, const ExplicitModule& b) {
  if (a.rank != b.rank) throw std::invalid_argument("tensor: rank mismatch");
  ExplicitModule out;
  out.rank = a.rank;
  out.dim = a.dim * b.dim;
  out.weights.reserve(out.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      out.weights.push_back(weight_add(a.weights[i], b.weights[j]));
  if (a.highest >= 0 && b.highest >= 0)
    out.highest = a.highest * b.dim + b.highest;

  for (const auto& [g, ma] : a.actions) {
    const SparseMat& mb = b.action(g);
    SparseMat m(out.dim);
    for (int i = 0; i < a.dim; ++i) {
      for (int j = 0; j < b.dim; ++j) {
        SparseVec col;
        for (const auto& [r, c] : ma[i]) col.emplace_back(r * b.dim + j, c);
        SparseVec col2;
        for (const auto& [r, c] : mb[j]) col2.emplace_back(i * b.dim + r, c);
        sparse_add(col, col2, Rat(1));
        m[i * b.dim + j] = std::move(col);
      }
    }
    out.actions[g] = std::move(m);
  }
  return out;
}

namespace {

bool mats_equal(const SparseMat& x, const SparseMat& y) {
  if (x.size() != y.size()) return false;
  for (size_t j = 0; j < x.size(); ++j) {
    SparseVec d = x[j];
    sparse_add(d, y[j], Rat(-1));
    if (!d.empty()) return false;
  }
  return true;
}

SparseMat scaled(const SparseMat& x, const Rat& c) {
  SparseMat out(x.size());
  for (size_t j = 0; j < x.size(); ++j) out[j] = sparse_scale(x[j], c);
  return out;
}

}  // namespace

std::string check_module_brackets(const ExplicitModule& mod) {
  int n = mod.rank;
  auto cartan = [&](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const SparseMat& ej = mod.action(GenLabel::E(simple_root(j)));
      const SparseMat& fj = mod.action(GenLabel::F(simple_root(j)));
      SparseMat he = sparse_commutator(mod.action(GenLabel::H(i)), ej);
      if (!mats_equal(he, scaled(ej, Rat(cartan(i, j)))))
        return "[h" + std::to_string(i) + ", e" + std::to_string(j) + "] != a_ij e_j";
      SparseMat hf = sparse_commutator(mod.action(GenLabel::H(i)), fj);
      if (!mats_equal(hf, scaled(fj, Rat(-cartan(i, j)))))
        return "[h" + std::to_string(i) + ", f" + std::to_string(j) + "] != -a_ij f_j";
      SparseMat ef = sparse_commutator(mod.action(GenLabel::E(simple_root(i))), fj);
      if (i == j) {
        if (!mats_equal(ef, mod.action(GenLabel::H(i))))
          return "[e" + std::to_string(i) + ", f" + std::to_string(i) + "] != h_i";
      } else if (!mats_equal(ef, SparseMat(mod.dim))) {
        return "[e" + std::to_string(i) + ", f" + std::to_string(j) + "] != 0";
      }
    }
  }
  // [e_a, f_a] = h_a for every positive root under the fixed convention.
  for (const Root& a : positive_roots(n)) {
    SparseMat ha = sparse_commutator(mod.action(GenLabel::E(a)), mod.action(GenLabel::F(a)));
    SparseMat expect(mod.dim);
    for (int b = 0; b < mod.dim; ++b) {
      int p = pairing(a, mod.weights[b]);
      if (p != 0) expect[b] = SparseVec{{b, Rat(p)}};
    }
    if (!mats_equal(ha, expect)) return "[e_a, f_a] != h_a for " + a.str();
  }
  return "";
}

}  // namespace fusionprod
