#pragma once

#include <string>
#include <vector>

namespace fusionprod {

/// Integral weight of sl(n+1), stored as coordinates on the fundamental
/// weight basis: coords[i-1] = <h_i, lambda> for i = 1..n.
using Weight = std::vector<int>;

/// Root of type A_n. Positive roots are the intervals
/// alpha_lo + ... + alpha_hi (1 <= lo <= hi <= n); negative roots carry
/// the same interval with positive = false.
struct Root {
  int lo = 1;
  int hi = 1;
  bool positive = true;

  bool operator==(const Root&) const = default;
  std::string str() const;
};

/// All n(n+1)/2 positive interval roots, sorted by (lo, hi).
/// The last of the hi == n, lo == 1 intervals is the highest root theta.
std::vector<Root> positive_roots(int n);

Root highest_root(int n);
Root simple_root(int i);
Root negate(const Root& a);

/// Coordinates of the root alpha on the fundamental weight basis.
Weight root_weight(int n, const Root& a);

/// Coroot pairing <h_alpha, lambda>.  Sign-adjusted for negative roots.
int pairing(const Root& a, const Weight& lam);

/// <h_alpha, varpi_m>, which is -1, 0 or 1 for interval roots.
int root_level(const Root& a, int m, int n);

/// The set Delta[a] for a in {-1, 0, 1}: all roots alpha (both signs) with
/// <h_alpha, varpi_m> = a.
std::vector<Root> roots_at_level(int n, int m, int a);

/// i* = n+1-i.
int dual_index(int i, int n);

/// Simple reflection s_i acting on a weight.
Weight reflect(int i, const Weight& lam);

/// Action of the longest element w_0, computed along the canonical reduced
/// word (s_1)(s_2 s_1)(s_3 s_2 s_1)...
Weight w0_action(const Weight& lam);

/// Canonical reduced word of w_0 as a sequence of simple indices.
std::vector<int> w0_word(int n);

bool is_dominant(const Weight& lam);
Weight zero_weight(int n);
Weight fundamental_weight(int n, int m);

/// lambda - mu as an integer vector.
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_add(const Weight& a, const Weight& b);

/// Dominance-order comparison: returns true when a - b is a nonnegative
/// integer combination of simple roots.
bool dominance_geq(const Weight& a, const Weight& b);

void check_rank(const Weight& lam, int n, const char* where);

}  // namespace fusionprod
