#include "fusionprod/fusion.hpp"

#include <mutex>
#include <stdexcept>

#include "fusionprod/errors.hpp"

namespace fusionprod {

CharacterPoly graded_character_at_q1(const GradedCharacter& gc, int rank) {
  CharacterPoly out(rank);
  for (const auto& [key, m] : gc) out.add(key.first, m);
  return out;
}

SparseVec CurrentModule::apply(const GenLabel& g, int s, const SparseVec& v) const {
  Rat scale(1);
  for (int i = 0; i < s; ++i) scale *= c;
  return sparse_scale(mod->apply(g, v), scale);
}

CurrentModule evaluation_module(std::shared_ptr<const ExplicitModule> v, Rat c) {
  return CurrentModule{std::move(v), std::move(c)};
}

std::shared_ptr<const ExplicitModule> irrep_cached(int n, int l, int m) {
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const ExplicitModule>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, l, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto mod = std::make_shared<ExplicitModule>(build_irrep(n, l, m));
  cache.emplace(key, mod);
  return mod;
}

EvaluationTensor::EvaluationTensor(int n, int m, const Partition& ell,
                                   std::vector<Rat> params)
    : n_(n), m_(m), ell_(ell), params_(std::move(params)) {
  if (params_.empty()) params_ = default_params(ell_.length());
  if (static_cast<int>(params_.size()) != ell_.length())
    throw std::invalid_argument("EvaluationTensor: one parameter per part");
  for (size_t i = 0; i < params_.size(); ++i)
    for (size_t j = i + 1; j < params_.size(); ++j)
      if (params_[i] == params_[j])
        throw std::invalid_argument("EvaluationTensor: parameters must be distinct");
  dim_ = 1;
  for (int i = 1; i <= ell_.length(); ++i)
    mods_.push_back(irrep_cached(n, ell_.part(i), m));
  strides_.resize(mods_.size());
  for (int i = static_cast<int>(mods_.size()) - 1; i >= 0; --i) {
    strides_[i] = dim_;
    dim_ *= mods_[i]->dim;
  }
}

Weight EvaluationTensor::weight_of(long long idx) const {
  Weight w = zero_weight(n_);
  for (size_t i = 0; i < mods_.size(); ++i) {
    long long c = (idx / strides_[i]) % mods_[i]->dim;
    w = weight_add(w, mods_[i]->weights[c]);
  }
  return w;
}

long long EvaluationTensor::highest_index() const {
  long long idx = 0;
  for (size_t i = 0; i < mods_.size(); ++i) idx += mods_[i]->highest * strides_[i];
  return idx;
}

SparseVec EvaluationTensor::apply(const GenLabel& g, int s, const SparseVec& v) const {
  SparseVec out;
  for (size_t i = 0; i < mods_.size(); ++i) {
    Rat scale(1);
    for (int k = 0; k < s; ++k) scale *= params_[i];
    if (scale.is_zero()) continue;
    const SparseMat& mat = mods_[i]->action(g);
    SparseVec part;
    for (const auto& [idx, c] : v) {
      long long local = (idx / strides_[i]) % mods_[i]->dim;
      long long base = idx - local * strides_[i];
      for (const auto& [r, mc] : mat[local]) {
        SparseVec term{{static_cast<int>(base + r * strides_[i]), mc * c}};
        sparse_add(part, term, Rat(1));
      }
    }
    sparse_add(out, part, scale);
  }
  return out;
}

SparseVec EvaluationTensor::apply_power(const GenLabel& g, int s, long long pow,
                                        bool divided, const SparseVec& v) const {
  SparseVec out = v;
  for (long long k = 0; k < pow; ++k) out = apply(g, s, out);
  if (divided && pow > 1) {
    Rat inv = Rat(1) / Rat::factorial(pow);
    out = sparse_scale(out, inv);
  }
  return out;
}

std::vector<Root> level_one_roots(int n, int m) {
  std::vector<Root> out;
  for (const Root& a : positive_roots(n))
    if (root_level(a, m, n) == 1) out.push_back(a);
  return out;
}

std::vector<Rat> default_params(int p) {
  std::vector<Rat> out;
  for (int i = 0; i < p; ++i) out.emplace_back(i);
  return out;
}

FusionProduct::Block& FusionProduct::block_for(const Weight& w) {
  auto it = blocks_.find(w);
  if (it != blocks_.end()) return it->second;
  return blocks_.emplace(w, Block{}).first->second;
}

FusionProduct FusionProduct::build(int n, int m, const Partition& ell,
                                   std::vector<Rat> params) {
  FusionProduct fp;
  fp.space_ = std::make_shared<EvaluationTensor>(n, m, ell, std::move(params));
  const EvaluationTensor& sp = *fp.space_;
  int p = ell.length();

  if (p == 0) {
    // Trivial module concentrated in degree zero.
    Block b;
    b.local_to_global = {0};
    b.global_to_local[0] = 0;
    b.ech = EchelonBasis(1);
    b.ech.insert({Rat(1)}, 0);
    b.row_ids = {0};
    fp.blocks_.emplace(zero_weight(n), std::move(b));
    fp.row_tag_ = {0};
    fp.row_weight_ = {zero_weight(n)};
    fp.row_rep_ = {SparseVec{{0, Rat(1)}}};
    fp.dim_ = 1;
    fp.top_degree_ = 0;
    fp.gchar_[{zero_weight(n), 0}] = 1;
    return fp;
  }

  // The whole tensor is spanned by monomials in the lowering currents
  // f_alpha (x) t^s applied to the top vector (the parabolic part acts on it
  // by scalars), and letter degrees s <= p-1 suffice for distinct parameters.
  std::vector<Root> dirs = level_one_roots(n, m);
  int smax = p - 1;

  long long expected = sp.dim();
  long long total = 0;

  // Bucket the tensor coordinates by weight up front so every block has a
  // fixed local frame.
  for (long long idx = 0; idx < sp.dim(); ++idx) {
    Block& b = fp.block_for(sp.weight_of(idx));
    b.global_to_local[idx] = static_cast<int>(b.local_to_global.size());
    b.local_to_global.push_back(idx);
  }
  for (auto& [w, b] : fp.blocks_)
    b.ech = EchelonBasis(static_cast<int>(b.local_to_global.size()));

  // try_insert returns the new global row id or -1.
  auto try_insert = [&](const SparseVec& v, const Weight& w, int tag) -> int {
    if (v.empty()) return -1;
    Block& b = fp.blocks_.at(w);
    std::vector<Rat> dense(b.ech.dim());
    for (const auto& [g, c] : v) dense[b.global_to_local.at(g)] = c;
    int r = b.ech.insert(std::move(dense), tag);
    if (r < 0) return -1;
    int id = static_cast<int>(fp.row_tag_.size());
    b.row_ids.push_back(id);
    fp.row_tag_.push_back(tag);
    fp.row_weight_.push_back(w);
    fp.row_rep_.push_back(v);
    ++total;
    return id;
  };

  SparseVec v0{{static_cast<int>(sp.highest_index()), Rat(1)}};
  Weight w0 = sp.weight_of(sp.highest_index());

  long long smin = std::min(m, n + 1 - m);
  long long degree_sum = 0;
  for (int i = 1; i <= p; ++i) degree_sum += static_cast<long long>(i - 1) * ell.part(i);
  int guard = static_cast<int>(smin * degree_sum) + n + p + 3;

  for (int level = 0; level <= guard && total < expected; ++level) {
    std::vector<int> fresh;
    if (level == 0) {
      int id = try_insert(v0, w0, 0);
      if (id >= 0) fresh.push_back(id);
    }
    // Positive-degree letters from lower levels.
    for (int id = 0; id < static_cast<int>(fp.row_tag_.size()); ++id) {
      int t = fp.row_tag_[id];
      for (const Root& a : dirs) {
        for (int s = 1; s <= smax; ++s) {
          if (t + s != level) continue;
          SparseVec img = sp.apply(GenLabel::F(a), s, fp.row_rep_[id]);
          Weight w = weight_sub(fp.row_weight_[id], root_weight(n, a));
          int nid = try_insert(img, w, level);
          if (nid >= 0) fresh.push_back(nid);
        }
      }
    }
    // Degree-zero closure within the level.
    size_t qi = 0;
    if (level == 0 && !fresh.empty()) qi = 0;
    std::vector<int> queue = fresh;
    while (qi < queue.size()) {
      int id = queue[qi++];
      for (const Root& a : dirs) {
        SparseVec img = sp.apply(GenLabel::F(a), 0, fp.row_rep_[id]);
        Weight w = weight_sub(fp.row_weight_[id], root_weight(n, a));
        int nid = try_insert(img, w, level);
        if (nid >= 0) queue.push_back(nid);
      }
    }
  }

  if (total != expected)
    throw InternalError(
        "fusion filtration failed to exhaust the tensor space: got " +
        std::to_string(total) + " of " + std::to_string(expected));

  fp.dim_ = total;
  fp.top_degree_ = 0;
  for (int id = 0; id < static_cast<int>(fp.row_tag_.size()); ++id) {
    fp.top_degree_ = std::max(fp.top_degree_, fp.row_tag_[id]);
    fp.gchar_[{fp.row_weight_[id], fp.row_tag_[id]}] += 1;
  }
  return fp;
}

SparseVec FusionProduct::cyclic_vector() const {
  return SparseVec{{static_cast<int>(space_->highest_index()), Rat(1)}};
}

bool FusionProduct::expand_in_blocks(
    const SparseVec& v, std::vector<std::pair<int, Rat>>* row_coeffs) const {
  if (row_coeffs) row_coeffs->clear();
  // Split by weight, expand each homogeneous part in its block.
  std::map<Weight, SparseVec> parts;
  for (const auto& [g, c] : v)
    parts[space_->weight_of(g)].emplace_back(g, c);
  for (auto& [w, part] : parts) {
    auto it = blocks_.find(w);
    if (it == blocks_.end()) return false;
    const Block& b = it->second;
    std::vector<Rat> dense(b.ech.dim());
    for (const auto& [g, c] : part) {
      auto lit = b.global_to_local.find(g);
      if (lit == b.global_to_local.end()) return false;
      dense[lit->second] = c;
    }
    std::vector<std::pair<int, Rat>> coeffs;
    if (!b.ech.expand(std::move(dense), &coeffs)) return false;
    if (row_coeffs)
      for (auto& [r, c] : coeffs) row_coeffs->emplace_back(b.row_ids[r], std::move(c));
  }
  return true;
}

bool FusionProduct::in_filtration(const SparseVec& v, int k) const {
  if (v.empty()) return true;
  if (k < 0) return false;
  std::vector<std::pair<int, Rat>> coeffs;
  if (!expand_in_blocks(v, &coeffs)) return false;
  for (const auto& [row, c] : coeffs)
    if (row_tag_[row] > k) return false;
  return true;
}

int FusionProduct::filtration_degree(const SparseVec& v) const {
  if (v.empty()) return -1;
  std::vector<std::pair<int, Rat>> coeffs;
  if (!expand_in_blocks(v, &coeffs))
    throw InternalError("filtration_degree: vector escapes the module span");
  int deg = -1;
  for (const auto& [row, c] : coeffs) deg = std::max(deg, row_tag_[row]);
  return deg;
}

std::vector<std::pair<int, Rat>> FusionProduct::graded_apply(const GenLabel& g,
                                                             int s, int row) const {
  SparseVec img = space_->apply(g, s, row_rep_[row]);
  std::vector<std::pair<int, Rat>> coeffs;
  if (!expand_in_blocks(img, &coeffs))
    throw InternalError("graded_apply: image escapes the module span");
  int target = row_tag_[row] + s;
  std::vector<std::pair<int, Rat>> out;
  for (auto& [r, c] : coeffs) {
    if (row_tag_[r] > target)
      throw InternalError("graded_apply: action does not respect the filtration");
    if (row_tag_[r] == target) out.emplace_back(r, std::move(c));
  }
  return out;
}

bool parameter_independence_check(int n, int m, const Partition& ell,
                                  const std::vector<Rat>& params1,
                                  const std::vector<Rat>& params2) {
  FusionProduct a = FusionProduct::build(n, m, ell, params1);
  FusionProduct b = FusionProduct::build(n, m, ell, params2);
  return a.graded_character() == b.graded_character();
}

}  // namespace fusionprod
