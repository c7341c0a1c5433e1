#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fusionprod/characters.hpp"
#include "fusionprod/partitions.hpp"
#include "fusionprod/weights.hpp"

using namespace fusionprod;

TEST_CASE("positive roots are the intervals") {
  CHECK(positive_roots(1).size() == 1);
  CHECK(positive_roots(2).size() == 3);
  auto r3 = positive_roots(3);
  CHECK(r3.size() == 6);
  CHECK(highest_root(3) == Root{1, 3, true});
  CHECK_THROWS_AS(positive_roots(0), std::invalid_argument);
}

TEST_CASE("coroot pairing") {
  // <h_i, w_j> = delta_ij
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pairing(simple_root(i), fundamental_weight(3, j)) == (i == j));
  // <h_theta, w_m> = 1 for every m
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(pairing(highest_root(n), fundamental_weight(n, m)) == 1);
  // bilinearity on an interval root
  Weight two_w1 = {2, 0};
  CHECK(pairing(Root{1, 2, true}, two_w1) == 2);
  CHECK_THROWS_AS(pairing(Root{1, 3, true}, two_w1), std::invalid_argument);
}

TEST_CASE("root levels partition the roots") {
  // n=2, m=1: positive level-one roots are alpha_1 and theta
  auto lvl1 = roots_at_level(2, 1, 1);
  int pos = 0;
  for (const Root& a : lvl1)
    if (a.positive) ++pos;
  CHECK(pos == 2);
  // Delta[+-1] lies in +-Delta_+
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (const Root& a : roots_at_level(n, m, 1)) CHECK(a.positive);
      for (const Root& a : roots_at_level(n, m, -1)) CHECK_FALSE(a.positive);
    }
  }
  // |Delta[1] cap Delta_+| = m(n+1-m)
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      int count = 0;
      for (const Root& a : positive_roots(n))
        if (root_level(a, m, n) == 1) ++count;
      CHECK(count == m * (n + 1 - m));
    }
}

TEST_CASE("level-one roots are pairwise non-summable (minuscule)") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      std::vector<Root> dirs;
      for (const Root& a : positive_roots(n))
        if (root_level(a, m, n) == 1) dirs.push_back(a);
      for (const Root& a : dirs)
        for (const Root& b : dirs) {
          Weight sum = weight_add(root_weight(n, a), root_weight(n, b));
          for (const Root& c : positive_roots(n))
            CHECK_FALSE(root_weight(n, c) == sum);
        }
    }
  }
}

TEST_CASE("dual index") {
  CHECK(dual_index(1, 3) == 3);
  CHECK(dual_index(2, 3) == 2);
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) CHECK(dual_index(dual_index(i, n), n) == i);
  CHECK_THROWS_AS(dual_index(4, 3), std::invalid_argument);
  // w0(w_i) = -w_{i*}
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      Weight neg = w0_action(fundamental_weight(n, i));
      Weight expect = fundamental_weight(n, dual_index(i, n));
      for (int& x : expect) x = -x;
      CHECK(neg == expect);
    }
}

TEST_CASE("Demazure operator on monomials") {
  // D_i(e^0) = e^0
  CharacterPoly one = CharacterPoly::monomial(zero_weight(2));
  CHECK(demazure(1, one) == one);
  // D_i(e^{w_i}) = e^{w_i} + e^{w_i - alpha_i}
  CharacterPoly f = demazure(1, CharacterPoly::monomial(fundamental_weight(2, 1)));
  CHECK(f.dimension() == 2);
  CHECK(f.at(fundamental_weight(2, 1)) == 1);
  CHECK(f.at(weight_sub(fundamental_weight(2, 1), root_weight(2, simple_root(1)))) == 1);
  // D_i(e^{-w_i}) = 0
  Weight neg = fundamental_weight(2, 1);
  for (int& x : neg) x = -x;
  CHECK(demazure(1, CharacterPoly::monomial(neg)).empty());
}

TEST_CASE("Demazure idempotence") {
  CharacterPoly f(2);
  f.add({3, -1}, 2);
  f.add({-2, 2}, 1);
  f.add({0, 0}, -3);
  f.add({1, 1}, 5);
  for (int i = 1; i <= 2; ++i) {
    CharacterPoly once = demazure(i, f);
    CHECK(demazure(i, once) == once);
  }
}

TEST_CASE("Demazure idempotence on random polynomials") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coord(-4, 4), mult(-5, 5);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      CharacterPoly f(n);
      int terms = 1 + static_cast<int>(rng() % 6);
      for (int t = 0; t < terms; ++t) {
        Weight w(n);
        for (int& x : w) x = coord(rng);
        f.add(w, mult(rng));
      }
      for (int i = 1; i <= n; ++i) {
        CharacterPoly once = demazure(i, f);
        CHECK(demazure(i, once) == once);
      }
    }
  }
}

TEST_CASE("random dominant products decompose consistently") {
  // Positivity, dimension bookkeeping, and reconstruction from the parts.
  std::mt19937 rng(909090);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      Weight a(n), b(n);
      for (int& x : a) x = static_cast<int>(rng() % 3);
      for (int& x : b) x = static_cast<int>(rng() % 2);
      CharacterPoly prod = weyl_character(n, a) * weyl_character(n, b);
      CharacterPoly rebuilt(n);
      for (const auto& [w, mult] : decompose_character(prod)) {
        CHECK(mult > 0);
        CharacterPoly part = weyl_character(n, w);
        for (const auto& [ww, mm] : part.terms()) rebuilt.add(ww, mult * mm);
      }
      CHECK(rebuilt == prod);
    }
  }
}

TEST_CASE("Weyl characters") {
  // sl2 strings
  CharacterPoly v1 = weyl_character(1, {1});
  CHECK(v1.dimension() == 2);
  CHECK(weyl_character(1, {2}).dimension() == 3);
  // n=2: V(w_1) has dimension 3 with the expected weights
  CharacterPoly w = weyl_character(2, {1, 0});
  CHECK(w.dimension() == 3);
  CHECK(w.at({1, 0}) == 1);
  CHECK(w.at({-1, 1}) == 1);
  CHECK(w.at({0, -1}) == 1);
  // Weyl invariance
  for (int i = 1; i <= 2; ++i) CHECK(w.reflected(i) == w);
  CharacterPoly big = weyl_character(3, {1, 0, 2});
  for (int i = 1; i <= 3; ++i) CHECK(big.reflected(i) == big);
  CHECK_THROWS_AS(weyl_character(2, {-1, 0}), std::invalid_argument);
}

TEST_CASE("decompose_character round trips and Clebsch-Gordan") {
  // irreducible round trip
  auto dec = decompose_character(weyl_character(2, {1, 1}));
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == Weight{1, 1});
  CHECK(dec[0].second == 1);
  // ch V(w1) * ch V(w1) on sl2 = V(2) + V(0)
  auto cg = decompose_character(weyl_character(1, {1}) * weyl_character(1, {1}));
  REQUIRE(cg.size() == 2);
  CHECK(cg[0].first == Weight{2});
  CHECK(cg[1].first == Weight{0});
  // ch V(2) * ch V(1) = V(3) + V(1)
  auto cg2 = decompose_character(weyl_character(1, {2}) * weyl_character(1, {1}));
  REQUIRE(cg2.size() == 2);
  CHECK(cg2[0].first == Weight{3});
  CHECK(cg2[1].first == Weight{1});
  // non-invariant input is rejected
  CharacterPoly bad(2);
  bad.add({1, 0}, 1);
  CHECK_THROWS_AS(decompose_character(bad), std::invalid_argument);
}

TEST_CASE("products decompose nonnegatively with matching dimension") {
  for (int n = 1; n <= 3; ++n) {
    Weight l1 = fundamental_weight(n, 1);
    Weight l2 = fundamental_weight(n, n);
    for (int& x : l1) x *= 2;
    CharacterPoly a = weyl_character(n, l1);
    CharacterPoly b = weyl_character(n, l2);
    auto dec = decompose_character(a * b);
    long long total = 0;
    for (const auto& [w, mult] : dec) {
      CHECK(mult > 0);
      total += mult * weyl_dimension(n, w);
    }
    CHECK(total == a.dimension() * b.dimension());
  }
}

TEST_CASE("partitions") {
  Partition p({3, 2, 1});
  CHECK(p.tail_sum(1) == 6);
  CHECK(p.tail_sum(2) == 3);
  CHECK(p.tail_sum(3) == 1);
  CHECK(p.tail_sum(4) == 0);
  // construction sorts and strips zeros
  CHECK(Partition({0, 2, 1, 0}) == Partition({2, 1}));
  CHECK(Partition(std::vector<int>{}).length() == 0);
  CHECK(Partition::parse("2, 1").parts() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("tail-sum dominance") {
  CHECK(dominates(Partition({2, 2, 2}), Partition({3, 2, 1})));
  CHECK_FALSE(dominates(Partition({2}), Partition({1, 1})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({1})), std::invalid_argument);
  // sl2 criterion: (l1,l2) dominates (r1,r2) iff l2 >= r2
  for (int total = 2; total <= 6; ++total)
    for (int l2 = 0; 2 * l2 <= total; ++l2)
      for (int r2 = 0; 2 * r2 <= total; ++r2)
        CHECK(dominates(Partition({total - l2, l2}), Partition({total - r2, r2})) ==
              (l2 >= r2));
}
