#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fusionprod/linalg.hpp"
#include "fusionprod/rational.hpp"

using namespace fusionprod;

TEST_CASE("arithmetic and canonical form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(1, 3) * Rat(3, 7)) == Rat(1, 7));
  CHECK((Rat(1, 3) / Rat(1, 6)) == Rat(2));
  CHECK((Rat(5) - Rat(5)).is_zero());
  CHECK(Rat(7, 3).str() == "7/3");
  CHECK(Rat(-7).str() == "-7");
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(2, 6) <= Rat(1, 3));
  CHECK(Rat(5, 4) > Rat(1));
}

TEST_CASE("overflow promotes to big integers and demotes back") {
  Rat big(1);
  for (int i = 0; i < 5; ++i) big *= Rat(1LL << 40);  // 2^200
  CHECK(big.is_big());
  CHECK(big.num_str().size() > 19);
  Rat back = big;
  for (int i = 0; i < 5; ++i) back /= Rat(1LL << 40);
  CHECK(back == Rat(1));
  CHECK_FALSE(back.is_big());
  // Exactness through a big detour.
  Rat x = big + Rat(1, 3);
  x -= big;
  CHECK(x == Rat(1, 3));
}

TEST_CASE("factorials") {
  CHECK(Rat::factorial(0) == Rat(1));
  CHECK(Rat::factorial(5) == Rat(120));
  CHECK(Rat::factorial(25).is_big());
}

TEST_CASE("echelon basis ranks agree with fraction-free elimination") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 7);
    int cols = 1 + static_cast<int>(rng() % 7);
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (auto& r : m)
      for (auto& x : r) x = Rat(val(rng), 1 + static_cast<int>(rng() % 3));
    EchelonBasis ech(cols);
    for (const auto& r : m) ech.insert(r, 0);
    CHECK(ech.size() == rank_bareiss(m));
  }
}

TEST_CASE("echelon expansion recovers inserted vectors") {
  EchelonBasis ech(4);
  std::vector<Rat> a{1, 2, 0, 1}, b{0, 1, 1, 0};
  ech.insert(a, 0);
  ech.insert(b, 1);
  std::vector<Rat> v{2, 5, 1, 2};  // 2a + b
  std::vector<std::pair<int, Rat>> coeffs;
  CHECK(ech.expand(v, &coeffs));
  CHECK(coeffs.size() == 2);
  std::vector<Rat> bad{1, 0, 0, 0};
  CHECK_FALSE(ech.expand(bad, &coeffs));
  std::vector<Rat> rem = ech.reduce(v);
  for (const Rat& x : rem) CHECK(x.is_zero());
}
