#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fusionprod/cv.hpp"
#include "fusionprod/errors.hpp"

using namespace fusionprod;

namespace {

// Brute-force enumeration oracle: all compositions (b_0..b_s) checked
// directly against the two linear constraints.
int count_sequences(int r, int s, SeqMode mode, int k) {
  std::vector<int> b(s + 1, 0);
  int count = 0;
  std::function<void(int)> rec = [&](int j) {
    if (j > s) {
      int sum = 0, wsum = 0;
      for (int i = 0; i <= s; ++i) {
        sum += b[i];
        wsum += i * b[i];
      }
      if (sum != r || wsum != s) return;
      if (mode == SeqMode::BelowK)
        for (int i = k; i <= s; ++i)
          if (b[i]) return;
      if (mode == SeqMode::FromK)
        for (int i = 0; i < k && i <= s; ++i)
          if (b[i]) return;
      ++count;
      return;
    }
    for (int v = 0; v <= r; ++v) {
      b[j] = v;
      rec(j + 1);
    }
    b[j] = 0;
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("exponent sequence enumeration") {
  // S(2,2) = {(b0=1, b2=1), (b1=2)}
  auto s22 = enum_exponent_sequences(2, 2);
  REQUIRE(s22.size() == 2);
  // S(0, s>0) is empty, S(0,0) holds the empty sequence
  CHECK(enum_exponent_sequences(0, 3).empty());
  CHECK(enum_exponent_sequences(0, 0).size() == 1);
  // S(r, 0) = {(b0 = r)}
  auto s30 = enum_exponent_sequences(3, 0);
  REQUIRE(s30.size() == 1);
  CHECK(s30[0] == ExponentSeq{3});
}

TEST_CASE("exponent sequence counts match brute force") {
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 6; ++s) {
      CHECK(static_cast<int>(enum_exponent_sequences(r, s).size()) ==
            count_sequences(r, s, SeqMode::Full, 0));
      for (int k = 0; k <= 3; ++k) {
        CHECK(static_cast<int>(enum_exponent_sequences(r, s, SeqMode::BelowK, k).size()) ==
              count_sequences(r, s, SeqMode::BelowK, k));
        CHECK(static_cast<int>(enum_exponent_sequences(r, s, SeqMode::FromK, k).size()) ==
              count_sequences(r, s, SeqMode::FromK, k));
      }
    }
}

TEST_CASE("operators applied to the cyclic vector") {
  FusionProduct fp = FusionProduct::build(1, 1, Partition({2, 1}));
  const EvaluationTensor& T = fp.space();
  SparseVec v0 = fp.cyclic_vector();
  Root a1 = simple_root(1);
  // x(r,s) with S(r,s) empty evaluates to zero on any vector
  RelationElement zero = power_sum(GenLabel::F(a1), 0, 2);
  CHECK(apply_relation(zero, T, v0).empty());
  // f(1,1) v = (f (x) t) v
  RelationElement f11 = power_sum(GenLabel::F(a1), 1, 1);
  SparseVec lhs = apply_relation(f11, T, v0);
  SparseVec rhs = T.apply(GenLabel::F(a1), 1, v0);
  sparse_add(lhs, rhs, Rat(-1));
  CHECK(lhs.empty());
  // _k f(r,s) with k r > s has an empty index set
  RelationElement kf = power_sum(GenLabel::F(a1), 2, 1, SeqMode::FromK, 1);
  CHECK(kf.terms.empty());
}

TEST_CASE("divided-power identity on graded fusion products") {
  // s = 0 reduces to f^{(r)} v on both sides.
  FusionProduct fp = FusionProduct::build(1, 1, Partition({2, 1}));
  CHECK(check_garland(fp, simple_root(1), 1, 0) == CheckStatus::Holds);
  CHECK(check_garland(fp, simple_root(1), 2, 0) == CheckStatus::Holds);
  // the sl2 example (r,s) = (1,1) on the (2,1) fusion
  CHECK(check_garland(fp, simple_root(1), 1, 1) == CheckStatus::Holds);
  // a small grid on rank two
  FusionProduct fp2 = FusionProduct::build(2, 1, Partition({1, 1}));
  for (const Root& a : level_one_roots(2, 1))
    for (int r = 1; r <= 3; ++r)
      for (int s = 0; r + s <= 4; ++s)
        CHECK(check_garland(fp2, a, r, s) == CheckStatus::Holds);
}

TEST_CASE("symbolic recursion identity") {
  CHECK(check_cv_recursion(1, 2, 1, 1) == CheckStatus::Holds);
  CHECK(check_cv_recursion(2, 2, 1, 0) == CheckStatus::Holds);
  // r = 1: reduces to the single-letter split
  for (int s = 2; s <= 6; ++s)
    CHECK(check_cv_recursion(1, s, 1, s - 1) == CheckStatus::Holds);
  // inapplicable cases
  CHECK(check_cv_recursion(2, 1, 2, 0) == CheckStatus::Inapplicable);
  CHECK(check_cv_recursion(0, 1, 1, 0) == CheckStatus::Inapplicable);
}

TEST_CASE("admissible index set") {
  Partition ell({2, 1});
  // minimal s with f (x) t^s v = 0 is min_k(k + L_{k+1}) = 2
  int s_min = 0;
  for (int s = 1; s <= 6 && s_min == 0; ++s)
    for (int k = 1; k <= s && s_min == 0; ++k)
      if (tq_admissible(ell, 1, 1, s, k)) s_min = s;
  CHECK(s_min == 2);
  // L-values of (3,2,1)
  Partition l321({3, 2, 1});
  CHECK(l321.tail_sum(1) == 6);
  CHECK(l321.tail_sum(2) == 3);
  CHECK(l321.tail_sum(3) == 1);
  CHECK(l321.tail_sum(4) == 0);
}

TEST_CASE("relation set families and caps") {
  Partition ell({2, 1});
  RelationCaps caps = resolve_caps(1, 1, ell, {});
  auto rels = relation_set(1, 1, ell, caps);
  bool has_nplus = false, has_cartan = false, has_power = false,
       has_raw = false, has_garland = false;
  for (const auto& R : rels) {
    if (R.family == "nplus") has_nplus = true;
    if (R.family == "cartan") has_cartan = true;
    if (R.family == "power") has_power = true;
    if (R.family == "raw") has_raw = true;
    if (R.family == "garland") has_garland = true;
  }
  CHECK(has_nplus);
  CHECK(has_cartan);
  CHECK(has_power);
  CHECK(has_raw);
  CHECK(has_garland);
  // n = 1 has no level-zero lowering family
  for (const auto& R : rels) CHECK(R.family != "levi");
  auto rels2 = relation_set(2, 1, Partition({1, 1}), resolve_caps(2, 1, Partition({1, 1}), {}));
  bool has_levi = false;
  for (const auto& R : rels2) has_levi = has_levi || R.family == "levi";
  CHECK(has_levi);
  // cap too small to reach k = p
  RelationCaps tiny;
  tiny.max_rs = 2;
  CHECK_THROWS_AS(relation_set(1, 1, Partition({1, 1, 1}), tiny), CapExceeded);
}

TEST_CASE("p=1 relation set forces a trivial current action") {
  // family (e) contains (1, s, s) for all s >= 1: f (x) t^s v = 0 directly.
  Partition ell({2});
  for (int s = 1; s <= 4; ++s) CHECK(tq_admissible(ell, 1, 1, s, s));
  FusionProduct fp = FusionProduct::build(1, 1, ell);
  CHECK(fp.top_degree() == 0);
  auto rels = relation_set(1, 1, ell, resolve_caps(1, 1, ell, {}));
  CHECK(relations_annihilate(rels, fp).all_hold);
}

TEST_CASE("relations annihilate the graded generator; a wrong relation fails") {
  FusionProduct fp = FusionProduct::build(1, 1, Partition({2, 1}));
  auto rels = relation_set(1, 1, Partition({2, 1}), resolve_caps(1, 1, Partition({2, 1}), {}));
  WitnessReport rep = relations_annihilate(rels, fp);
  CHECK(rep.all_hold);
  CHECK(rep.checked == static_cast<int>(rels.size()));
  // f^{L1} (one power short) does not annihilate
  RelationElement wrong;
  wrong.family = "test";
  wrong.tdegree = 0;
  wrong.terms.push_back(RelTerm{Rat(1), {RelLetter{GenLabel::F(simple_root(1)), 0, 3, false}}});
  CHECK_FALSE(relations_annihilate({wrong}, fp).all_hold);
}

TEST_CASE("plain and divided families agree on fusion generators") {
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= n; ++m) {
      FusionProduct fp = FusionProduct::build(n, m, Partition({2, 1}));
      auto [raw_ok, divided_ok] = family_equivalence(fp);
      CHECK(raw_ok == divided_ok);
      CHECK(raw_ok);
    }
  }
}
