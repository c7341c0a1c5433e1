#include "fusionprod/cv.hpp"

#include <map>

#include "fusionprod/errors.hpp"

namespace fusionprod {

namespace {

void enum_rec(int r, int s, int j, int jmin, ExponentSeq& cur,
              std::vector<ExponentSeq>& out) {
  if (j < jmin) {
    if (r == 0 && s == 0) {
      ExponentSeq seq = cur;
      while (!seq.empty() && seq.back() == 0) seq.pop_back();
      out.push_back(seq);
    }
    return;
  }
  int bmax = r;
  if (j > 0) bmax = std::min(r, s / j);
  for (int b = 0; b <= bmax; ++b) {
    cur[j] = b;
    enum_rec(r - b, s - j * b, j - 1, jmin, cur, out);
    cur[j] = 0;
  }
}

}  // namespace

std::vector<ExponentSeq> enum_exponent_sequences(int r, int s, SeqMode mode,
                                                 int k) {
  if (r < 0 || s < 0) throw std::invalid_argument("enum_exponent_sequences");
  std::vector<ExponentSeq> out;
  // b_j = 0 for j > s always; the mode narrows the admissible index window.
  int jmax = s;
  int jmin = 0;
  if (mode == SeqMode::BelowK) jmax = std::min(s, k - 1);
  if (mode == SeqMode::FromK) jmin = k;
  if (jmax < jmin) {
    if (r == 0 && s == 0) out.push_back({});
    return out;
  }
  ExponentSeq cur(jmax + 1, 0);
  enum_rec(r, s, jmax, jmin, cur, out);
  return out;
}

SparseVec apply_relation(const RelationElement& R, const EvaluationTensor& T,
                         const SparseVec& v) {
  SparseVec out;
  for (const RelTerm& term : R.terms) {
    SparseVec w = v;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it)
      w = T.apply_power(it->gen, it->tdeg, it->power, it->divided, w);
    sparse_add(out, w, term.coeff);
  }
  return out;
}

RelationElement power_sum(const GenLabel& gen, int r, int s, SeqMode mode,
                          int k) {
  RelationElement R;
  R.family = "power_sum";
  R.tdegree = s;
  for (const ExponentSeq& seq : enum_exponent_sequences(r, s, mode, k)) {
    RelTerm term;
    term.coeff = Rat(1);
    for (int j = 0; j < static_cast<int>(seq.size()); ++j)
      if (seq[j] > 0) term.word.push_back(RelLetter{gen, j, seq[j], true});
    R.terms.push_back(std::move(term));
  }
  return R;
}

RelationElement raw_relation(const Root& a, int r, int s) {
  RelationElement R;
  R.family = "raw";
  R.label = "(e" + a.str() + "*t)^" + std::to_string(s) + " f^" +
            std::to_string(r + s);
  R.tdegree = s;
  RelTerm term;
  term.coeff = Rat(1);
  if (s > 0) term.word.push_back(RelLetter{GenLabel::E(a), 1, s, false});
  term.word.push_back(RelLetter{GenLabel::F(a), 0, r + s, false});
  R.terms.push_back(std::move(term));
  return R;
}

CheckStatus check_garland(const FusionProduct& G, const Root& a, int r, int s) {
  if (r < 0 || s < 0) return CheckStatus::Inapplicable;
  const EvaluationTensor& T = G.space();
  SparseVec v0 = G.cyclic_vector();
  // Hypotheses: e_a (x) t^j v = 0 exactly, h_a (x) t^j v = 0 in the graded
  // module for j >= 1.
  int jtop = std::max(s + 1, 2);
  for (int j = 0; j <= jtop; ++j)
    if (!T.apply(GenLabel::E(a), j, v0).empty()) return CheckStatus::Inapplicable;
  for (int j = 1; j <= jtop; ++j) {
    SparseVec hv;
    for (int i = a.lo; i <= a.hi; ++i)
      sparse_add(hv, T.apply(GenLabel::H(i), j, v0), Rat(1));
    if (!G.in_filtration(hv, j - 1)) return CheckStatus::Inapplicable;
  }

  SparseVec lhs = T.apply_power(GenLabel::F(a), 0, r + s, true, v0);
  lhs = T.apply_power(GenLabel::E(a), 1, s, true, lhs);
  RelationElement frs = power_sum(GenLabel::F(a), r, s);
  SparseVec rhs = apply_relation(frs, T, v0);
  Rat sign = (s % 2 == 0) ? Rat(1) : Rat(-1);
  sparse_add(lhs, rhs, -sign);
  return G.in_filtration(lhs, s - 1) ? CheckStatus::Holds : CheckStatus::Fails;
}

namespace {

using Poly = std::map<std::vector<int>, Rat>;  // exponents of y_0..y_smax

Poly poly_mul(const Poly& a, const Poly& b, size_t vars) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(vars, 0);
      for (size_t i = 0; i < vars; ++i) {
        if (i < ma.size()) m[i] += ma[i];
        if (i < mb.size()) m[i] += mb[i];
      }
      Rat& c = out[m];
      c += ca * cb;
      if (c.is_zero()) out.erase(m);
    }
  return out;
}

Poly power_sum_poly(int r, int s, SeqMode mode, int k, size_t vars) {
  Poly out;
  for (const ExponentSeq& seq : enum_exponent_sequences(r, s, mode, k)) {
    std::vector<int> m(vars, 0);
    Rat coeff(1);
    for (int j = 0; j < static_cast<int>(seq.size()); ++j) {
      m[j] = seq[j];
      coeff /= Rat::factorial(seq[j]);
    }
    Rat& c = out[m];
    c += coeff;
    if (c.is_zero()) out.erase(m);
  }
  return out;
}

}  // namespace

CheckStatus check_cv_recursion(int r, int s, int k, int K) {
  if (r <= 0 || s <= 0 || k <= 0 || K < 0 || r + s < k * r + K)
    return CheckStatus::Inapplicable;
  size_t vars = static_cast<size_t>(s) + 1;
  Poly lhs = power_sum_poly(r, s, SeqMode::Full, 0, vars);
  Poly rhs = power_sum_poly(r, s, SeqMode::FromK, k, vars);
  for (int rp = 0; rp < r; ++rp) {
    for (int sp = 0; sp <= s; ++sp) {
      if (rp + sp < k * rp + K) continue;
      Poly left = power_sum_poly(r - rp, s - sp, SeqMode::BelowK, k, vars);
      Poly right = power_sum_poly(rp, sp, SeqMode::FromK, k, vars);
      for (auto& [m, c] : poly_mul(left, right, vars)) {
        Rat& acc = rhs[m];
        acc += c;
        if (acc.is_zero()) rhs.erase(m);
      }
    }
  }
  return lhs == rhs ? CheckStatus::Holds : CheckStatus::Fails;
}

bool tq_admissible(const Partition& ell, int q, int r, int s, int k) {
  if (r < 1 || s < 1 || k < 1) return false;
  return r + s >= 1 + k * r + ell.tail_sum(k + q);
}

RelationCaps resolve_caps(int n, int m, const Partition& ell,
                          const RelationCaps& caps) {
  RelationCaps out = caps;
  int p = ell.length();
  long long l1 = ell.tail_sum(1);
  if (out.max_rs < 0) out.max_rs = static_cast<int>(2 * (l1 + p) + 2);
  if (out.max_tdegree < 0) {
    long long degree_sum = 0;
    for (int i = 1; i <= p; ++i)
      degree_sum += static_cast<long long>(i - 1) * ell.part(i);
    out.max_tdegree =
        static_cast<int>(std::min(m, n + 1 - m) * degree_sum) + 1;
  }
  return out;
}

std::vector<RelationElement> relation_set(int n, int m, const Partition& ell,
                                          const RelationCaps& caps_in) {
  if (n < 1 || m < 1 || m > n) throw std::invalid_argument("relation_set");
  RelationCaps caps = resolve_caps(n, m, ell, caps_in);
  int p = ell.length();
  long long l1 = ell.tail_sum(1);
  if (p >= 1 && caps.max_rs < p + 1)
    throw CapExceeded(
        "relation cap R=" + std::to_string(caps.max_rs) +
        " excludes every (r,s,k) with k=p; need R >= " + std::to_string(p + 1));

  std::vector<RelationElement> out;
  auto push = [&out](RelationElement R, std::string label, std::string family) {
    R.label = std::move(label);
    R.family = std::move(family);
    out.push_back(std::move(R));
  };

  // (a) annihilation by the raising currents e_b (x) t^d.
  for (const Root& b : positive_roots(n)) {
    for (int d = 0; d <= caps.max_tdegree; ++d) {
      RelationElement R;
      R.tdegree = d;
      R.terms.push_back(RelTerm{Rat(1), {RelLetter{GenLabel::E(b), d, 1, false}}});
      push(std::move(R), "e" + b.str() + "*t^" + std::to_string(d), "nplus");
    }
  }
  // (b) Cartan eigenvalue relations.
  for (int i = 1; i <= n; ++i) {
    for (int d = 0; d <= caps.max_tdegree; ++d) {
      RelationElement R;
      R.tdegree = d;
      R.terms.push_back(RelTerm{Rat(1), {RelLetter{GenLabel::H(i), d, 1, false}}});
      if (d == 0 && i == m && l1 != 0)
        R.terms.push_back(RelTerm{Rat(-l1), {}});
      push(std::move(R), "h" + std::to_string(i) + "*t^" + std::to_string(d),
           "cartan");
    }
  }
  // (c) annihilation by the level zero lowering currents.
  for (const Root& g : positive_roots(n)) {
    if (root_level(g, m, n) != 0) continue;
    for (int d = 0; d <= caps.max_tdegree; ++d) {
      RelationElement R;
      R.tdegree = d;
      R.terms.push_back(RelTerm{Rat(1), {RelLetter{GenLabel::F(g), d, 1, false}}});
      push(std::move(R), "f" + g.str() + "*t^" + std::to_string(d), "levi");
    }
  }
  // (d) power relations at level one.
  for (const Root& a : level_one_roots(n, m)) {
    RelationElement R;
    R.tdegree = 0;
    R.terms.push_back(
        RelTerm{Rat(1), {RelLetter{GenLabel::F(a), 0, l1 + 1, false}}});
    push(std::move(R), "f" + a.str() + "^" + std::to_string(l1 + 1), "power");
  }
  // (e) the graded families, plain and divided.
  for (const Root& a : level_one_roots(n, m)) {
    for (int r = 1; r + 1 <= caps.max_rs; ++r) {
      for (int s = 1; r + s <= caps.max_rs; ++s) {
        bool any_k = false;
        for (int k = 1; k <= s / r + 1; ++k) {
          if (!tq_admissible(ell, 1, r, s, k)) continue;
          any_k = true;
          if (k * r <= s) {
            RelationElement R = power_sum(GenLabel::F(a), r, s, SeqMode::FromK, k);
            R.tdegree = s;
            push(std::move(R),
                 "_" + std::to_string(k) + "f" + a.str() + "(" +
                     std::to_string(r) + "," + std::to_string(s) + ")",
                 "garland");
          }
        }
        if (any_k)
          push(raw_relation(a, r, s),
               "raw" + a.str() + "(" + std::to_string(r) + "," +
                   std::to_string(s) + ")",
               "raw");
      }
    }
  }
  return out;
}

WitnessReport relations_annihilate(const std::vector<RelationElement>& rels,
                                   const FusionProduct& G) {
  WitnessReport rep;
  SparseVec v0 = G.cyclic_vector();
  for (const RelationElement& R : rels) {
    SparseVec img = apply_relation(R, G.space(), v0);
    ++rep.checked;
    if (!G.in_filtration(img, R.tdegree - 1)) {
      rep.all_hold = false;
      if (rep.first_failure.empty())
        rep.first_failure = R.family + " " + R.label;
    }
  }
  return rep;
}

std::pair<bool, bool> family_equivalence(const FusionProduct& G,
                                         const RelationCaps& caps_in) {
  const EvaluationTensor& T = G.space();
  int n = T.rank(), m = T.fund_index();
  const Partition& ell = T.ell();
  RelationCaps caps = resolve_caps(n, m, ell, caps_in);
  SparseVec v0 = G.cyclic_vector();

  // Hypotheses of the equivalence.
  for (const Root& a : level_one_roots(n, m)) {
    for (int j = 0; j <= caps.max_tdegree; ++j)
      if (!T.apply(GenLabel::E(a), j, v0).empty())
        throw InternalError("family_equivalence: raising hypothesis fails");
    for (int j = 1; j <= caps.max_tdegree; ++j) {
      SparseVec hv;
      for (int i = a.lo; i <= a.hi; ++i)
        sparse_add(hv, T.apply(GenLabel::H(i), j, v0), Rat(1));
      if (!G.in_filtration(hv, j - 1))
        throw InternalError("family_equivalence: Cartan hypothesis fails");
    }
  }

  bool raw_all = true, divided_all = true;
  for (const RelationElement& R : relation_set(n, m, ell, caps)) {
    if (R.family != "raw" && R.family != "garland") continue;
    SparseVec img = apply_relation(R, T, v0);
    bool ok = G.in_filtration(img, R.tdegree - 1);
    if (R.family == "raw") raw_all = raw_all && ok;
    if (R.family == "garland") divided_all = divided_all && ok;
  }
  return {raw_all, divided_all};
}

}  // namespace fusionprod
