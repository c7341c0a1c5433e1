#include "fusionprod/characters.hpp"

#include <mutex>
#include <stdexcept>

namespace fusionprod {

CharacterPoly CharacterPoly::monomial(const Weight& w, long long mult) {
  CharacterPoly f(static_cast<int>(w.size()));
  f.add(w, mult);
  return f;
}

long long CharacterPoly::at(const Weight& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? 0 : it->second;
}

void CharacterPoly::add(const Weight& w, long long mult) {
  if (mult == 0) return;
  if (static_cast<int>(w.size()) != rank_)
    throw std::invalid_argument("CharacterPoly: rank mismatch");
  auto [it, inserted] = coeffs_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CharacterPoly& CharacterPoly::operator+=(const CharacterPoly& o) {
  if (rank_ == 0 && coeffs_.empty()) rank_ = o.rank_;
  for (const auto& [w, m] : o.coeffs_) add(w, m);
  return *this;
}

CharacterPoly& CharacterPoly::operator-=(const CharacterPoly& o) {
  if (rank_ == 0 && coeffs_.empty()) rank_ = o.rank_;
  for (const auto& [w, m] : o.coeffs_) add(w, -m);
  return *this;
}

CharacterPoly CharacterPoly::operator*(const CharacterPoly& o) const {
  if (rank_ != o.rank_)
    throw std::invalid_argument("CharacterPoly: rank mismatch in product");
  CharacterPoly out(rank_);
  for (const auto& [w1, m1] : coeffs_)
    for (const auto& [w2, m2] : o.coeffs_) out.add(weight_add(w1, w2), m1 * m2);
  return out;
}

long long CharacterPoly::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : coeffs_) d += m;
  return d;
}

CharacterPoly CharacterPoly::reflected(int i) const {
  CharacterPoly out(rank_);
  for (const auto& [w, m] : coeffs_) out.add(reflect(i, w), m);
  return out;
}

bool CharacterPoly::weyl_invariant() const {
  for (int i = 1; i <= rank_; ++i)
    if (!(reflected(i) == *this)) return false;
  return true;
}

CharacterPoly demazure(int i, const CharacterPoly& f) {
  CharacterPoly out(f.rank());
  int n = f.rank();
  if (i < 1 || i > n) throw std::invalid_argument("demazure: index out of range");
  Weight alpha = root_weight(n, simple_root(i));
  for (const auto& [w, m] : f.terms()) {
    int d = w[i - 1];
    if (d >= 0) {
      Weight cur = w;
      for (int k = 0; k <= d; ++k) {
        out.add(cur, m);
        if (k < d) cur = weight_sub(cur, alpha);
      }
    } else if (d <= -2) {
      Weight cur = weight_add(w, alpha);
      for (int k = 1; k <= -d - 1; ++k) {
        out.add(cur, -m);
        if (k < -d - 1) cur = weight_add(cur, alpha);
      }
    }
    // d == -1: the string is empty.
  }
  return out;
}

namespace {

std::map<std::pair<int, Weight>, CharacterPoly>& weyl_cache() {
  static std::map<std::pair<int, Weight>, CharacterPoly> cache;
  return cache;
}
std::mutex weyl_cache_mutex;

}  // namespace

CharacterPoly weyl_character(int n, const Weight& lambda) {
  check_rank(lambda, n, "weyl_character");
  if (!is_dominant(lambda))
    throw std::invalid_argument("weyl_character: weight not dominant");
  {
    std::lock_guard<std::mutex> lock(weyl_cache_mutex);
    auto it = weyl_cache().find({n, lambda});
    if (it != weyl_cache().end()) return it->second;
  }
  CharacterPoly f = CharacterPoly::monomial(lambda);
  for (int i : w0_word(n)) f = demazure(i, f);
  {
    std::lock_guard<std::mutex> lock(weyl_cache_mutex);
    weyl_cache().emplace(std::make_pair(n, lambda), f);
  }
  return f;
}

long long weyl_dimension(int n, const Weight& lambda) {
  return weyl_character(n, lambda).dimension();
}

std::vector<std::pair<Weight, long long>> decompose_character(
    const CharacterPoly& f) {
  if (!f.weyl_invariant())
    throw std::invalid_argument("decompose_character: input is not Weyl-invariant");
  int n = f.rank();
  std::vector<std::pair<Weight, long long>> out;
  CharacterPoly rem = f;
  // Support shrinks strictly in each round, but guard anyway.
  long long guard = 4 * (f.terms().size() + 1) * (f.terms().size() + 1) + 64;
  while (!rem.empty()) {
    if (--guard < 0)
      throw std::runtime_error("decompose_character: failed to terminate");
    // Maximal support weights in dominance order, lexicographically largest on
    // ties; Weyl invariance of rem forces the chosen weight to be dominant.
    Weight best;
    bool have = false;
    for (const auto& [w, m] : rem.terms()) {
      bool maximal = true;
      for (const auto& [w2, m2] : rem.terms()) {
        if (w2 != w && dominance_geq(w2, w)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      if (!have || best < w) {
        best = w;
        have = true;
      }
    }
    if (!have || !is_dominant(best))
      throw std::runtime_error("decompose_character: no dominant maximal weight");
    long long mult = rem.at(best);
    CharacterPoly irr = weyl_character(n, best);
    for (const auto& [w, m] : irr.terms()) rem.add(w, -mult * m);
    out.emplace_back(best, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  return out;
}

}  // namespace fusionprod
