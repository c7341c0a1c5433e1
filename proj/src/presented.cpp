#include "fusionprod/presented.hpp"

#include <algorithm>
#include <deque>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "fusionprod/errors.hpp"

namespace fusionprod {

namespace {

// ---- gl(n+1) components ----------------------------------------------------
// E_{ab} (a != b) when diag is false, E_aa - E_bb when diag is true;
// 1-based indices.  These are the only shapes the closure ever brackets.
struct Gl {
  bool diag;
  int a, b;
  bool operator==(const Gl&) const = default;
};

struct GlTerm {
  long long c;
  Gl z;
};

std::vector<GlTerm> gl_bracket(const Gl& x, const Gl& y) {
  std::vector<GlTerm> out;
  if (x.diag && y.diag) return out;
  if (x.diag) {
    long long k = (x.a == y.a) - (x.a == y.b) - (x.b == y.a) + (x.b == y.b);
    if (k != 0) out.push_back({k, y});
    return out;
  }
  if (y.diag) {
    out = gl_bracket(y, x);
    for (auto& t : out) t.c = -t.c;
    return out;
  }
  if (x.b == y.a && y.b == x.a) {
    out.push_back({1, Gl{true, x.a, x.b}});
    return out;
  }
  if (x.b == y.a) out.push_back({1, Gl{false, x.a, y.b}});
  if (y.b == x.a) out.push_back({-1, Gl{false, y.a, x.b}});
  return out;
}

Gl e_matrix(const Root& a) { return Gl{false, a.lo, a.hi + 1}; }
Gl f_matrix(const Root& a) { return Gl{false, a.hi + 1, a.lo}; }

// Free commutative monomials in the variables x_{alpha,s} are kept as sorted
// flat vectors of var ids; var id = root_index * s_star + s.
using FlatMon = std::vector<int>;
using FreePoly = std::map<FlatMon, Rat>;

void poly_add(FreePoly& acc, const FlatMon& mon, const Rat& c) {
  if (c.is_zero()) return;
  Rat& slot = acc[mon];
  slot += c;
  if (slot.is_zero()) acc.erase(mon);
}

struct Ctx {
  int n = 0, m = 0, p = 0;
  long long L1 = 0;
  int s_star = 1;
  std::vector<Root> dirs;  // level-one positive roots, (lo,hi)-sorted
  int nroots = 0;
  std::map<std::pair<int, int>, int> dir_index;

  int var(int root, int s) const { return root * s_star + s; }
  int var_root(int v) const { return v / s_star; }
  int var_deg(int v) const { return v % s_star; }

  // Classifies an off-diagonal lowering matrix: returns the level-one root
  // index, or -1 when the interval misses m (a Levi lowering element).
  int lowering_dir(const Gl& z) const {
    int lo = z.b, hi = z.a - 1;
    if (lo <= m && m <= hi) return dir_index.at({lo, hi});
    return -1;
  }
};

// y (x) t^a applied to x_{flat[i]} ... x_{flat.back()} acting on the cyclic
// vector, under the presentation's vacuum rules: raising and Levi-lowering
// letters kill v, h (x) t^a kills v for a >= 1 and is the L1 * <h, varpi_m>
// scalar for a = 0, and a level-one lowering letter becomes a variable.
void act_rec(const Ctx& C, const Gl& y, int a, const FlatMon& flat, size_t i,
             const Rat& coeff, FreePoly& out) {
  if (coeff.is_zero()) return;
  if (i == flat.size()) {
    if (y.diag) {
      if (a == 0) {
        long long pair = (y.a <= C.m ? 1 : 0) - (y.b <= C.m ? 1 : 0);
        if (pair != 0) poly_add(out, {}, coeff * Rat(C.L1 * pair));
      }
      return;
    }
    if (y.a > y.b) {
      int d = C.lowering_dir(y);
      if (d >= 0 && a < C.s_star) poly_add(out, {C.var(d, a)}, coeff);
    }
    return;
  }
  int v = flat[i];
  // x_v * (y t^a acting on the tail)
  {
    FreePoly tail;
    act_rec(C, y, a, flat, i + 1, coeff, tail);
    for (auto& [mon, c] : tail) {
      FlatMon with = mon;
      with.insert(std::upper_bound(with.begin(), with.end(), v), v);
      poly_add(out, with, c);
    }
  }
  // [y t^a, x_v] acting on the tail
  Root rho = C.dirs[C.var_root(v)];
  int a2 = a + C.var_deg(v);
  for (const GlTerm& t : gl_bracket(y, f_matrix(rho))) {
    Rat c2 = coeff * Rat(t.c);
    if (!t.z.diag && t.z.a > t.z.b) {
      int d = C.lowering_dir(t.z);
      if (d >= 0) {
        // Another lowering current: a plain multiplication operator.
        if (a2 < C.s_star) {
          FlatMon with(flat.begin() + i + 1, flat.end());
          int nv = C.var(d, a2);
          with.insert(std::upper_bound(with.begin(), with.end(), nv), nv);
          poly_add(out, with, c2);
        }
        continue;
      }
    }
    act_rec(C, t.z, a2, flat, i + 1, c2, out);
  }
}

FreePoly act_poly(const Ctx& C, const Gl& y, int a, const FreePoly& w) {
  FreePoly out;
  for (const auto& [mon, c] : w) act_rec(C, y, a, mon, 0, c, out);
  return out;
}

// ---- stage one: the single-root quotient ----------------------------------
// Root independent: every level-one sl2 triple has the same structure
// constants, so the quotient of the free algebra on x_s = f (x) t^s by the
// closed relation span is computed once and reused for every root.
struct QData {
  int s_star = 1;
  long long expcap = 0;  // per-variable exponent bound L1 + 1
  std::vector<std::vector<int>> stag;          // exponent vectors
  std::map<std::vector<int>, int> stag_idx;
  std::vector<std::pair<int, int>> stag_grade;  // (N, d)

  std::vector<int> q_rep;                      // q -> staging index
  std::vector<std::pair<int, int>> q_grade;    // (N, d) per q
  std::vector<int> q_of_stag;                  // staging -> q or -1 (pivot)
  int q0 = -1;
  int qsize = 0;
  int maxN = 0, maxd = 0;
  long long iterations = 0;
  // mult[s][q]: class of x_s * rep(q)
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> mult;
  // relation-span rows as exponent-vector polynomials (for leak seeding)
  std::vector<std::map<std::vector<int>, Rat>> nrows;
  // class of an arbitrary staging exponent vector
  std::vector<std::vector<std::pair<int, Rat>>> stag_class;
};

using QVec = std::vector<std::pair<int, Rat>>;

QVec qvec_mult(const QData& Q, int s, const QVec& v) {
  QVec out;
  std::map<int, Rat> acc;
  for (const auto& [q, c] : v)
    for (const auto& [q2, c2] : Q.mult[s][q]) {
      Rat& slot = acc[q2];
      slot += c * c2;
    }
  for (auto& [q, c] : acc)
    if (!c.is_zero()) out.emplace_back(q, std::move(c));
  return out;
}

// Class of the alpha-part exponent vector (arbitrary exponents).
const QVec& class_of_exps(const QData& Q, const std::vector<int>& exps,
                          std::map<std::vector<int>, QVec>& memo) {
  auto it = memo.find(exps);
  if (it != memo.end()) return it->second;
  // Peel one variable occurrence and recurse.
  int s = -1;
  for (int j = 0; j < Q.s_star; ++j)
    if (exps[j] > 0) {
      s = j;
      break;
    }
  QVec result;
  if (s < 0) {
    result = {{Q.q0, Rat(1)}};
  } else {
    std::vector<int> rest = exps;
    rest[s] -= 1;
    QVec base = class_of_exps(Q, rest, memo);
    result = qvec_mult(Q, s, base);
  }
  return memo.emplace(exps, std::move(result)).first->second;
}

struct QBlockKey {
  int N, d;
  bool operator<(const QBlockKey& o) const {
    return std::tie(N, d) < std::tie(o.N, o.d);
  }
};

QData build_Q(const Ctx& C, const Partition& ell, const RelationCaps& caps) {
  QData Q;
  Q.s_star = C.s_star;
  Q.expcap = C.L1 + 1;

  // Enumerate staging monomials: exponents <= L1 + 1 per variable.  The
  // bound is sound because x_s^{L1+2} m v factors through the explicit
  // power relation x_s^{L1+1}.
  {
    std::vector<int> cur(C.s_star, 0);
    std::function<void(int)> rec = [&](int j) {
      if (j == C.s_star) {
        Q.stag_idx[cur] = static_cast<int>(Q.stag.size());
        Q.stag.push_back(cur);
        int N = 0, d = 0;
        for (int s = 0; s < C.s_star; ++s) {
          N += cur[s];
          d += s * cur[s];
        }
        Q.stag_grade.emplace_back(N, d);
        return;
      }
      for (int e = 0; e <= Q.expcap; ++e) {
        cur[j] = e;
        rec(j + 1);
      }
      cur[j] = 0;
    };
    rec(0);
  }

  struct Blk {
    std::vector<int> ids;
    std::map<int, int> local;
    EchelonBasis ech{0};
  };
  std::map<QBlockKey, Blk> blocks;
  for (int i = 0; i < static_cast<int>(Q.stag.size()); ++i) {
    Blk& b = blocks[{Q.stag_grade[i].first, Q.stag_grade[i].second}];
    b.local[i] = static_cast<int>(b.ids.size());
    b.ids.push_back(i);
  }
  for (auto& [k, b] : blocks) b.ech = EchelonBasis(static_cast<int>(b.ids.size()));

  // The closure works on one designated root; the result is root agnostic.
  int r0 = 0;
  auto project = [&](const FreePoly& w) {
    // Free poly (vars of root r0 only) -> staging vector terms, dropping
    // monomials beyond the exponent cap (they factor through the power
    // relations).
    std::map<int, Rat> vec;
    for (const auto& [mon, c] : w) {
      std::vector<int> exps(C.s_star, 0);
      bool drop = false;
      for (int v : mon) {
        if (C.var_root(v) != r0)
          throw InternalError("single-root closure left its variables");
        exps[C.var_deg(v)] += 1;
      }
      for (int s = 0; s < C.s_star; ++s)
        if (exps[s] > Q.expcap) drop = true;
      if (drop) continue;
      Rat& slot = vec[Q.stag_idx.at(exps)];
      slot += c;
    }
    return vec;
  };

  struct Item {
    QBlockKey key;
    int row;
  };
  std::deque<Item> work;
  auto insert_vec = [&](const std::map<int, Rat>& vec) {
    if (vec.empty()) return;
    int sid = vec.begin()->first;
    QBlockKey key{Q.stag_grade[sid].first, Q.stag_grade[sid].second};
    Blk& b = blocks.at(key);
    std::vector<Rat> dense(b.ids.size());
    for (const auto& [id, c] : vec) {
      if (Q.stag_grade[id].first != key.N || Q.stag_grade[id].second != key.d)
        throw InternalError("single-root relation is not homogeneous");
      dense[b.local.at(id)] = c;
    }
    int r = b.ech.insert(std::move(dense), 0);
    if (r >= 0) work.push_back({key, r});
  };

  // Relations: explicit per-variable powers and the truncated divided-power
  // sums _k f(r,s) admissible at q = 1.
  for (int s = 0; s < C.s_star; ++s) {
    std::vector<int> exps(C.s_star, 0);
    exps[s] = static_cast<int>(Q.expcap);
    insert_vec({{Q.stag_idx.at(exps), Rat(1)}});
  }
  int rmax = static_cast<int>(C.s_star * Q.expcap) + 1;
  int dmax_stag = 0;
  for (int s = 0; s < C.s_star; ++s) dmax_stag += s * static_cast<int>(Q.expcap);
  for (int k = 1; k <= C.s_star; ++k) {
    for (int r = 1; r <= rmax; ++r) {
      for (int s = k * r; s <= dmax_stag; ++s) {
        if (!tq_admissible(ell, 1, r, s, k)) continue;
        std::map<int, Rat> vec;
        for (const ExponentSeq& seq :
             enum_exponent_sequences(r, s, SeqMode::FromK, k)) {
          std::vector<int> exps(C.s_star, 0);
          bool drop = false;
          Rat coeff(1);
          for (int j = 0; j < static_cast<int>(seq.size()); ++j) {
            if (seq[j] == 0) continue;
            if (j >= C.s_star || seq[j] > Q.expcap) {
              drop = true;
              break;
            }
            exps[j] = seq[j];
            coeff /= Rat::factorial(seq[j]);
          }
          if (drop) continue;
          Rat& slot = vec[Q.stag_idx.at(exps)];
          slot += coeff;
          if (slot.is_zero()) vec.erase(Q.stag_idx.at(exps));
        }
        insert_vec(vec);
      }
    }
  }
  // Raw relations (e (x) t)^s f^{r+s}, expanded in the free algebra first so
  // boundary terms are not lost to premature reduction.
  for (int r = 1; r + 1 <= caps.max_rs; ++r) {
    for (int s = 1; r + s <= caps.max_rs; ++s) {
      bool adm = false;
      for (int k = 1; k <= s / r + 1 && !adm; ++k)
        adm = tq_admissible(ell, 1, r, s, k);
      if (!adm) continue;
      FreePoly w;
      w[FlatMon(static_cast<size_t>(r + s), C.var(r0, 0))] = Rat(1);
      for (int j = 0; j < s; ++j) w = act_poly(C, e_matrix(C.dirs[r0]), 1, w);
      insert_vec(project(w));
    }
  }

  // Closure letters: e (x) t^a (a >= 0) and h (x) t^a (a >= 1) for the
  // designated sl2 triple, plus multiplication by every variable.
  const Root rho = C.dirs[r0];
  const Gl e_rho = e_matrix(rho);
  const Gl h_rho{true, rho.lo, rho.hi + 1};
  auto block_poly = [&](const QBlockKey& key, int row) {
    const Blk& b = blocks.at(key);
    FreePoly w;
    const std::vector<Rat>& dense = b.ech.row(row);
    for (size_t k = 0; k < dense.size(); ++k) {
      if (dense[k].is_zero()) continue;
      FlatMon mon;
      const std::vector<int>& exps = Q.stag[b.ids[k]];
      for (int s = 0; s < C.s_star; ++s)
        for (int e = 0; e < exps[s]; ++e) mon.push_back(C.var(r0, s));
      w[mon] = dense[k];
    }
    return w;
  };

  while (!work.empty()) {
    Item it = work.front();
    work.pop_front();
    ++Q.iterations;
    FreePoly w = block_poly(it.key, it.row);
    for (int a = 0; a <= dmax_stag; ++a)
      insert_vec(project(act_poly(C, e_rho, a, w)));
    for (int a = 1; a <= dmax_stag; ++a)
      insert_vec(project(act_poly(C, h_rho, a, w)));
    for (int s = 0; s < C.s_star; ++s) {
      std::map<int, Rat> img;
      for (const auto& [mon, c] : w) {
        std::vector<int> exps(C.s_star, 0);
        for (int v : mon) exps[C.var_deg(v)] += 1;
        exps[s] += 1;
        if (exps[s] > Q.expcap) continue;
        Rat& slot = img[Q.stag_idx.at(exps)];
        slot += c;
        if (slot.is_zero()) img.erase(Q.stag_idx.at(exps));
      }
      insert_vec(img);
    }
  }

  // Freeze the quotient basis.
  Q.q_of_stag.assign(Q.stag.size(), -1);
  for (auto& [key, b] : blocks) {
    std::vector<char> is_pivot(b.ids.size(), 0);
    for (int r = 0; r < b.ech.size(); ++r) is_pivot[b.ech.pivot(r)] = 1;
    for (size_t k = 0; k < b.ids.size(); ++k) {
      if (is_pivot[k]) continue;
      int q = static_cast<int>(Q.q_rep.size());
      Q.q_of_stag[b.ids[k]] = q;
      Q.q_rep.push_back(b.ids[k]);
      Q.q_grade.emplace_back(key.N, key.d);
      Q.maxN = std::max(Q.maxN, key.N);
      Q.maxd = std::max(Q.maxd, key.d);
    }
  }
  Q.qsize = static_cast<int>(Q.q_rep.size());
  {
    std::vector<int> zero(C.s_star, 0);
    Q.q0 = Q.q_of_stag[Q.stag_idx.at(zero)];
    if (Q.q0 < 0)
      throw InternalError("single-root quotient killed the cyclic vector");
  }

  // Classes of all staging monomials.
  Q.stag_class.resize(Q.stag.size());
  for (auto& [key, b] : blocks) {
    for (size_t k = 0; k < b.ids.size(); ++k) {
      std::vector<Rat> unit(b.ids.size());
      unit[k] = Rat(1);
      std::vector<Rat> rem = b.ech.reduce(std::move(unit));
      QVec cls;
      for (size_t j = 0; j < rem.size(); ++j) {
        if (rem[j].is_zero()) continue;
        int q = Q.q_of_stag[b.ids[j]];
        if (q < 0) throw InternalError("reduced form touches a pivot");
        cls.emplace_back(q, rem[j]);
      }
      std::sort(cls.begin(), cls.end());
      Q.stag_class[b.ids[k]] = std::move(cls);
    }
  }

  // Multiplication matrices on the quotient.
  Q.mult.assign(C.s_star, {});
  for (int s = 0; s < C.s_star; ++s) {
    Q.mult[s].resize(Q.qsize);
    for (int q = 0; q < Q.qsize; ++q) {
      std::vector<int> exps = Q.stag[Q.q_rep[q]];
      exps[s] += 1;
      if (exps[s] > Q.expcap) continue;  // factors through a power relation
      Q.mult[s][q] = Q.stag_class[Q.stag_idx.at(exps)];
    }
  }

  // Relation rows for leak seeding.
  for (auto& [key, b] : blocks) {
    for (int r = 0; r < b.ech.size(); ++r) {
      std::map<std::vector<int>, Rat> poly;
      const std::vector<Rat>& dense = b.ech.row(r);
      for (size_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero()) poly[Q.stag[b.ids[k]]] = dense[k];
      Q.nrows.push_back(std::move(poly));
    }
  }
  return Q;
}

// ---- stages two and three: tuple closures ----------------------------------

struct TupleRows {
  // Relation rows of a sub-closure, as (tuple over its slots) polynomials.
  std::vector<int> roots;
  std::vector<std::vector<std::pair<std::vector<uint16_t>, Rat>>> rows;
};

struct KillSet {
  std::vector<int> roots;  // ascending
  std::unordered_set<uint64_t> dead;  // packed q-tuples
};

uint64_t pack_tuple(const std::vector<uint16_t>& qs, int bits) {
  uint64_t key = 0;
  for (size_t i = 0; i < qs.size(); ++i)
    key |= static_cast<uint64_t>(qs[i]) << (bits * i);
  return key;
}

struct ClosureOut {
  // Universe and relation span of the closure over the root subset T.
  std::vector<int> T;
  struct Blk {
    Weight w;
    int d = 0;
    std::vector<int> uids;
    std::unordered_map<int, int> local;
    EchelonBasis ech{0};
  };
  std::vector<std::vector<uint16_t>> tuples;
  std::unordered_map<uint64_t, int> uid_of;
  std::vector<int> ublock, ulocal;
  std::vector<Blk> blocks;
  long long iterations = 0;
  int bits = 10;
};

class Closure {
 public:
  Closure(const Ctx& C, const QData& Q, const Partition& ell,
          const RelationCaps& caps, std::vector<int> T, bool full,
          const std::vector<KillSet>& kills, const std::vector<TupleRows>& seeds)
      : C_(C), Q_(Q), ell_(ell), caps_(caps), full_(full), kills_(kills),
        seeds_(seeds) {
    out_.T = std::move(T);
    bits_ = 1;
    while ((1 << bits_) < Q_.qsize + 1) ++bits_;
    if (bits_ * static_cast<int>(out_.T.size()) > 62)
      throw CapExceeded("presented module closure: tuple universe too wide");
    out_.bits = bits_;
    dcap_ = full_ ? caps_.max_tdegree
                  : static_cast<int>(out_.T.size()) * Q_.maxd;
    run();
  }

  ClosureOut take() { return std::move(out_); }

 private:
  const Ctx& C_;
  const QData& Q_;
  const Partition& ell_;
  const RelationCaps& caps_;
  bool full_;
  const std::vector<KillSet>& kills_;
  const std::vector<TupleRows>& seeds_;
  ClosureOut out_;
  int bits_ = 10;
  int dcap_ = 0;
  std::map<std::pair<Weight, int>, int> block_of_;
  std::map<std::vector<int>, QVec> class_memo_;
  std::deque<std::pair<int, int>> work_;  // (block, row)
  // Packed (letter, uid) -> image columns for the parabolic letters.
  std::unordered_map<uint64_t, std::vector<std::pair<int, Rat>>> pcol_memo_;

  int slot_of_root(int root) const {
    for (size_t i = 0; i < out_.T.size(); ++i)
      if (out_.T[i] == root) return static_cast<int>(i);
    return -1;
  }

  void enumerate_universe() {
    // Kill filters restricted to slots of this closure.
    struct PairKill {
      int si, sj;
      const std::unordered_set<uint64_t>* dead;
      int bits;
    };
    std::vector<PairKill> pk;
    struct TripleKill {
      int si, sj, sk;
      const std::unordered_set<uint64_t>* dead;
      int bits;
    };
    std::vector<TripleKill> tk;
    for (const KillSet& ks : kills_) {
      std::vector<int> slots;
      bool ok = true;
      for (int r : ks.roots) {
        int s = slot_of_root(r);
        if (s < 0) ok = false;
        slots.push_back(s);
      }
      if (!ok) continue;
      if (slots.size() == 2) pk.push_back({slots[0], slots[1], &ks.dead, bits_});
      if (slots.size() == 3)
        tk.push_back({slots[0], slots[1], slots[2], &ks.dead, bits_});
    }

    int slots = static_cast<int>(out_.T.size());
    std::vector<uint16_t> cur(slots, 0);
    std::function<void(int, int, long long)> rec = [&](int i, int d, long long N) {
      if (d > dcap_) return;
      if (caps_.max_word >= 0 && N > caps_.max_word) return;
      if (i == slots) {
        for (const PairKill& f : pk) {
          std::vector<uint16_t> sub{cur[f.si], cur[f.sj]};
          if (f.dead->count(pack_tuple(sub, f.bits))) return;
        }
        for (const TripleKill& f : tk) {
          std::vector<uint16_t> sub{cur[f.si], cur[f.sj], cur[f.sk]};
          if (f.dead->count(pack_tuple(sub, f.bits))) return;
        }
        int uidx = static_cast<int>(out_.tuples.size());
        out_.tuples.push_back(cur);
        out_.uid_of.emplace(pack_tuple(cur, bits_), uidx);
        return;
      }
      for (int q = 0; q < Q_.qsize; ++q) {
        cur[i] = static_cast<uint16_t>(q);
        rec(i + 1, d + Q_.q_grade[q].second, N + Q_.q_grade[q].first);
      }
      cur[i] = 0;
    };
    rec(0, 0, 0);

    // Blocks by (weight, degree).
    out_.ublock.resize(out_.tuples.size());
    out_.ulocal.resize(out_.tuples.size());
    for (int u = 0; u < static_cast<int>(out_.tuples.size()); ++u) {
      Weight w = fundamental_weight(C_.n, C_.m);
      for (int& x : w) x *= static_cast<int>(C_.L1);
      int d = 0;
      for (size_t i = 0; i < out_.T.size(); ++i) {
        int q = out_.tuples[u][i];
        int N = Q_.q_grade[q].first;
        d += Q_.q_grade[q].second;
        if (N != 0) {
          Weight rw = root_weight(C_.n, C_.dirs[out_.T[i]]);
          for (int& x : rw) x *= N;
          w = weight_sub(w, rw);
        }
      }
      auto key = std::make_pair(w, d);
      auto it = block_of_.find(key);
      int b;
      if (it == block_of_.end()) {
        b = static_cast<int>(out_.blocks.size());
        block_of_.emplace(key, b);
        out_.blocks.push_back({});
        out_.blocks[b].w = w;
        out_.blocks[b].d = d;
      } else {
        b = it->second;
      }
      out_.ublock[u] = b;
      out_.ulocal[u] = static_cast<int>(out_.blocks[b].uids.size());
      out_.blocks[b].local.emplace(u, out_.ulocal[u]);
      out_.blocks[b].uids.push_back(u);
    }
    for (auto& b : out_.blocks) b.ech = EchelonBasis(static_cast<int>(b.uids.size()));
  }

  // Reduces a free polynomial into tuple coordinates (dropping killed and
  // out-of-cap tuples, both certified to lie in the relation span).
  std::map<int, Rat> reduce_free(const FreePoly& w) {
    std::map<int, Rat> out;
    for (const auto& [mon, c] : w) {
      // Split per root.
      std::vector<std::vector<int>> exps(out_.T.size(),
                                         std::vector<int>(C_.s_star, 0));
      bool foreign = false;
      for (int v : mon) {
        int slot = slot_of_root(C_.var_root(v));
        if (slot < 0) {
          foreign = true;
          break;
        }
        exps[slot][C_.var_deg(v)] += 1;
      }
      if (foreign)
        throw InternalError("closure image uses a variable outside its root set");
      // Outer product of the per-slot classes.
      std::vector<const QVec*> cls(out_.T.size());
      bool dead = false;
      for (size_t i = 0; i < out_.T.size(); ++i) {
        cls[i] = &class_of_exps(Q_, exps[i], class_memo_);
        if (cls[i]->empty()) dead = true;
      }
      if (dead) continue;
      std::vector<uint16_t> tup(out_.T.size(), 0);
      std::function<void(size_t, Rat)> rec = [&](size_t i, Rat coeff) {
        if (i == out_.T.size()) {
          auto it = out_.uid_of.find(pack_tuple(tup, bits_));
          if (it == out_.uid_of.end()) return;  // killed or beyond the cap
          Rat& slot = out[it->second];
          slot += coeff;
          if (slot.is_zero()) out.erase(it->second);
          return;
        }
        for (const auto& [q, qc] : *cls[i]) {
          tup[i] = static_cast<uint16_t>(q);
          rec(i + 1, coeff * qc);
        }
        tup[i] = 0;
      };
      rec(0, c);
    }
    return out;
  }

  void insert_vec(const std::map<int, Rat>& vec) {
    if (vec.empty()) return;
    int b = out_.ublock[vec.begin()->first];
    auto& blk = out_.blocks[b];
    std::vector<Rat> dense(blk.uids.size());
    for (const auto& [u, c] : vec) {
      if (out_.ublock[u] != b)
        throw InternalError("closure vector is not block homogeneous");
      dense[out_.ulocal[u]] = c;
    }
    int r = blk.ech.insert(std::move(dense), 0);
    if (r >= 0) work_.emplace_back(b, r);
  }

  FlatMon tuple_monomial(int u) const {
    FlatMon mon;
    for (size_t i = 0; i < out_.T.size(); ++i) {
      const std::vector<int>& exps = Q_.stag[Q_.q_rep[out_.tuples[u][i]]];
      for (int s = 0; s < C_.s_star; ++s)
        for (int e = 0; e < exps[s]; ++e) mon.push_back(C_.var(out_.T[i], s));
    }
    std::sort(mon.begin(), mon.end());
    return mon;
  }

  // Letters.
  struct Letter {
    Gl y;
    int a;
  };
  std::vector<Letter> p_letters_;

  bool letter_admissible(const Gl& y) const {
    return admissible_for(C_, out_.T, y);
  }

  // BFS through brackets with the lowering currents of the root subset;
  // admissible when no level-one output leaves the subset.
  static bool admissible_for(const Ctx& C, const std::vector<int>& roots,
                             const Gl& y) {
    auto in_set = [&roots](int r) {
      for (int x : roots)
        if (x == r) return true;
      return false;
    };
    std::vector<Gl> seen{y};
    std::deque<Gl> frontier{y};
    while (!frontier.empty()) {
      Gl z = frontier.front();
      frontier.pop_front();
      for (int root : roots) {
        for (const GlTerm& t : gl_bracket(z, f_matrix(C.dirs[root]))) {
          if (!t.z.diag && t.z.a > t.z.b) {
            int lo = t.z.b, hi = t.z.a - 1;
            if (lo <= C.m && C.m <= hi) {
              if (!C.dir_index.count({lo, hi})) return false;
              if (!in_set(C.dir_index.at({lo, hi}))) return false;
              continue;  // a variable of the subset: fine
            }
          }
          bool fresh = true;
          for (const Gl& s : seen)
            if (s == t.z) {
              fresh = false;
              break;
            }
          if (fresh) {
            seen.push_back(t.z);
            frontier.push_back(t.z);
          }
        }
      }
    }
    return true;
  }

  void collect_letters() {
    // The full Chevalley basis of the parabolic, at every t-degree within
    // the cap.  Bracket cascades through mixed monomials can produce any of
    // these, so relation-row images under all of them must be tracked.
    std::vector<Gl> cand;
    for (const Root& b : positive_roots(C_.n)) {
      cand.push_back(e_matrix(b));
      if (root_level(b, C_.m, C_.n) == 0) cand.push_back(f_matrix(b));
    }
    for (const Gl& y : cand) {
      if (!full_ && !letter_admissible(y)) continue;
      for (int a = 0; a <= dcap_; ++a) p_letters_.push_back({y, a});
    }
    for (int i = 1; i <= C_.n; ++i)
      for (int a = 1; a <= dcap_; ++a)
        p_letters_.push_back({Gl{true, i, i + 1}, a});
  }

  void seed() {
    // Raw relations for each root of the subset.
    for (int root : out_.T) {
      for (int r = 1; r + 1 <= caps_.max_rs; ++r) {
        for (int s = 1; r + s <= caps_.max_rs; ++s) {
          bool adm = false;
          for (int k = 1; k <= s / r + 1 && !adm; ++k)
            adm = tq_admissible(ell_, 1, r, s, k);
          if (!adm) continue;
          FreePoly w;
          w[FlatMon(static_cast<size_t>(r + s), C_.var(root, 0))] = Rat(1);
          for (int j = 0; j < s; ++j)
            w = act_poly(C_, e_matrix(C_.dirs[root]), 1, w);
          insert_vec(reduce_free(w));
        }
      }
    }
    // Leak images of the single-root relation rows under the letters that
    // leave the single sl2 (their internal images are already closed).
    for (int root : out_.T) {
      for (const auto& poly : Q_.nrows) {
        FreePoly w;
        for (const auto& [exps, c] : poly) {
          FlatMon mon;
          for (int s = 0; s < C_.s_star; ++s)
            for (int e = 0; e < exps[s]; ++e) mon.push_back(C_.var(root, s));
          w[mon] = c;
        }
        for (const Letter& L : p_letters_) {
          // Diagonal letters and the root's own raising current stay inside
          // the single sl2, where the rows are already closed.
          if (L.y.diag) continue;
          if (L.y == e_matrix(C_.dirs[root])) continue;
          FreePoly img = act_poly(C_, L.y, L.a, w);
          if (!img.empty()) insert_vec(reduce_free(img));
        }
      }
    }
    // Relation rows of the strict sub-closures: their own embeddings (with
    // vacuum slots), plus their images under every letter that leaves the
    // sub-closure's root set.  The latter matters when a row's embedding
    // vanishes because its support was pre-killed: the images still carry
    // relation content the parent cannot re-derive from a zero vector.
    for (const TupleRows& tr : seeds_) {
      std::vector<int> slots;
      bool ok = true;
      for (int r : tr.roots) {
        int s = slot_of_root(r);
        if (s < 0) ok = false;
        slots.push_back(s);
      }
      if (!ok) continue;
      std::vector<char> leak(p_letters_.size(), 0);
      for (size_t li = 0; li < p_letters_.size(); ++li)
        leak[li] = !p_letters_[li].y.diag &&
                   !admissible_for(C_, tr.roots, p_letters_[li].y);
      for (const auto& row : tr.rows) {
        std::map<int, Rat> vec;
        FreePoly w;
        for (const auto& [sub, c] : row) {
          std::vector<uint16_t> tup(out_.T.size(),
                                    static_cast<uint16_t>(Q_.q0));
          for (size_t i = 0; i < slots.size(); ++i) tup[slots[i]] = sub[i];
          auto it = out_.uid_of.find(pack_tuple(tup, bits_));
          if (it != out_.uid_of.end()) {
            Rat& slot = vec[it->second];
            slot += c;
            if (slot.is_zero()) vec.erase(it->second);
          }
          FlatMon mon;
          for (size_t i = 0; i < slots.size(); ++i) {
            const std::vector<int>& exps = Q_.stag[Q_.q_rep[sub[i]]];
            for (int s = 0; s < C_.s_star; ++s)
              for (int e = 0; e < exps[s]; ++e)
                mon.push_back(C_.var(tr.roots[i], s));
          }
          std::sort(mon.begin(), mon.end());
          poly_add(w, mon, c);
        }
        insert_vec(vec);
        for (size_t li = 0; li < p_letters_.size(); ++li) {
          if (!leak[li]) continue;
          FreePoly img = act_poly(C_, p_letters_[li].y, p_letters_[li].a, w);
          if (!img.empty()) insert_vec(reduce_free(img));
        }
      }
    }
  }

  void run() {
    enumerate_universe();
    collect_letters();
    seed();
    if (std::getenv("FUSIONPROD_DEBUG_BLOCKS"))
      fprintf(stderr, "closure |T|=%zu universe=%zu letters=%zu seeds->rows=%zu\n",
              out_.T.size(), out_.tuples.size(), p_letters_.size(), work_.size());
    while (!work_.empty()) {
      auto [b, r] = work_.front();
      work_.pop_front();
      ++out_.iterations;
      const auto& blk = out_.blocks[b];
      // Materialize the row sparsely over universe ids.
      std::vector<std::pair<int, Rat>> row;
      {
        const std::vector<Rat>& dense = blk.ech.row(r);
        for (size_t k = 0; k < dense.size(); ++k)
          if (!dense[k].is_zero()) row.emplace_back(blk.uids[k], dense[k]);
      }
      // Multiplication letters.
      for (size_t slot = 0; slot < out_.T.size(); ++slot) {
        for (int s = 0; s < C_.s_star; ++s) {
          std::map<int, Rat> img;
          for (const auto& [u, c] : row) {
            const std::vector<uint16_t>& tup = out_.tuples[u];
            for (const auto& [q2, c2] : Q_.mult[s][tup[slot]]) {
              std::vector<uint16_t> t2 = tup;
              t2[slot] = static_cast<uint16_t>(q2);
              auto it = out_.uid_of.find(pack_tuple(t2, bits_));
              if (it == out_.uid_of.end()) continue;
              Rat& acc = img[it->second];
              acc += c * c2;
              if (acc.is_zero()) img.erase(it->second);
            }
          }
          insert_vec(img);
        }
      }
      // Parabolic letters.
      for (size_t li = 0; li < p_letters_.size(); ++li) {
        const Letter& L = p_letters_[li];
        std::map<int, Rat> img;
        for (const auto& [u, c] : row) {
          uint64_t memo_key = (static_cast<uint64_t>(u) << 10) | li;
          auto mit = pcol_memo_.find(memo_key);
          if (mit == pcol_memo_.end()) {
            FreePoly w;
            w[tuple_monomial(u)] = Rat(1);
            FreePoly iw = act_poly(C_, L.y, L.a, w);
            std::map<int, Rat> col = reduce_free(iw);
            std::vector<std::pair<int, Rat>> colv(col.begin(), col.end());
            mit = pcol_memo_.emplace(memo_key, std::move(colv)).first;
          }
          for (const auto& [u2, c2] : mit->second) {
            Rat& acc = img[u2];
            acc += c * c2;
            if (acc.is_zero()) img.erase(u2);
          }
        }
        insert_vec(img);
      }
    }
  }
};

KillSet kills_from(const ClosureOut& co) {
  KillSet ks;
  ks.roots = co.T;
  for (const auto& blk : co.blocks) {
    for (size_t k = 0; k < blk.uids.size(); ++k) {
      std::vector<Rat> unit(blk.uids.size());
      unit[k] = Rat(1);
      std::vector<Rat> rem = blk.ech.reduce(std::move(unit));
      bool zero = true;
      for (const Rat& x : rem)
        if (!x.is_zero()) {
          zero = false;
          break;
        }
      if (zero)
        ks.dead.insert(pack_tuple(co.tuples[blk.uids[k]], co.bits));
    }
  }
  return ks;
}

TupleRows rows_from(const ClosureOut& co) {
  TupleRows tr;
  tr.roots = co.T;
  for (const auto& blk : co.blocks) {
    for (int r = 0; r < blk.ech.size(); ++r) {
      std::vector<std::pair<std::vector<uint16_t>, Rat>> row;
      const std::vector<Rat>& dense = blk.ech.row(r);
      for (size_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero())
          row.emplace_back(co.tuples[blk.uids[k]], dense[k]);
      tr.rows.push_back(std::move(row));
    }
  }
  return tr;
}

}  // namespace

PresentedModule PresentedModule::build(int n, int m, const Partition& ell,
                                       RelationCaps caps_in) {
  if (n < 1 || m < 1 || m > n)
    throw std::invalid_argument("PresentedModule::build: bad (n, m)");
  RelationCaps caps = resolve_caps(n, m, ell, caps_in);

  PresentedModule M;
  M.n_ = n;
  M.m_ = m;
  M.ell_ = ell;
  M.caps_ = caps;

  int p = ell.length();
  if (p == 0) {
    M.dim_ = 1;
    M.gchar_[{zero_weight(n), 0}] = 1;
    return M;
  }
  if (caps.max_rs < p + 1)
    throw CapExceeded("presented module: relation cap R=" +
                      std::to_string(caps.max_rs) + " cannot reach k=p; need R >= " +
                      std::to_string(p + 1));

  Ctx C;
  C.n = n;
  C.m = m;
  C.p = p;
  C.L1 = ell.tail_sum(1);
  int s_star = p;
  for (int k = 1; k <= p; ++k)
    s_star = std::min<long long>(s_star, k + ell.tail_sum(k + 1));
  C.s_star = std::max(1, s_star);
  C.dirs = level_one_roots(n, m);
  C.nroots = static_cast<int>(C.dirs.size());
  for (int i = 0; i < C.nroots; ++i)
    C.dir_index[{C.dirs[i].lo, C.dirs[i].hi}] = i;

  QData Q = build_Q(C, ell, caps);

  long long iterations = Q.iterations;
  std::vector<KillSet> kills;
  std::vector<TupleRows> seeds;

  auto subsets_of_size = [&](int k) {
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == k) {
        subs.push_back(cur);
        return;
      }
      for (int i = start; i < C.nroots; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return subs;
  };

  if (C.nroots >= 3) {
    for (const auto& T : subsets_of_size(2)) {
      Closure cl(C, Q, ell, caps, T, false, kills, seeds);
      ClosureOut co = cl.take();
      iterations += co.iterations;
      kills.push_back(kills_from(co));
      seeds.push_back(rows_from(co));
    }
  }
  if (C.nroots >= 4) {
    for (const auto& T : subsets_of_size(3)) {
      Closure cl(C, Q, ell, caps, T, false, kills, seeds);
      ClosureOut co = cl.take();
      iterations += co.iterations;
      kills.push_back(kills_from(co));
      seeds.push_back(rows_from(co));
    }
  }

  std::vector<int> full(C.nroots);
  for (int i = 0; i < C.nroots; ++i) full[i] = i;
  Closure cl(C, Q, ell, caps, full, true, kills, seeds);
  ClosureOut co = cl.take();
  iterations += co.iterations;
  M.iterations_ = iterations;

  for (const auto& blk : co.blocks) {
    long long dm = static_cast<long long>(blk.uids.size()) - blk.ech.size();
    if (dm < 0) throw InternalError("relation span exceeds its block");
    if (dm == 0) continue;
    M.gchar_[{blk.w, blk.d}] += dm;
    M.dim_ += dm;
    M.top_degree_ = std::max(M.top_degree_, blk.d);
  }

  long long product = 1;
  for (int i = 1; i <= p; ++i) {
    Weight lw = fundamental_weight(n, m);
    for (int& x : lw) x *= ell.part(i);
    product *= weyl_dimension(n, lw);
  }
  if (M.dim_ > product) {
    if (std::getenv("FUSIONPROD_DEBUG_BLOCKS")) {
      for (const auto& blk : co.blocks) {
        long long dm = static_cast<long long>(blk.uids.size()) - blk.ech.size();
        if (dm == 0) continue;
        fprintf(stderr, "block wt=(");
        for (size_t i = 0; i < blk.w.size(); ++i)
          fprintf(stderr, "%s%d", i ? "," : "", blk.w[i]);
        fprintf(stderr, ") d=%d size=%zu rank=%d -> %lld\n", blk.d,
                blk.uids.size(), blk.ech.size(), dm);
      }
    }
    throw InternalError(
        "presented module dimension " + std::to_string(M.dim_) +
        " exceeds the fusion dimension " + std::to_string(product) +
        "; the relation closure is incomplete (raise the caps)");
  }
  return M;
}

std::vector<long long> PresentedModule::graded_dims() const {
  std::vector<long long> dims(top_degree_ + 1, 0);
  for (const auto& [key, mult] : gchar_) dims[key.second] += mult;
  return dims;
}

}  // namespace fusionprod
