#include "fusionprod/weights.hpp"

#include <stdexcept>

namespace fusionprod {

std::string Root::str() const {
  std::string s = positive ? "" : "-";
  s += "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
  return s;
}

std::vector<Root> positive_roots(int n) {
  if (n < 1) throw std::invalid_argument("positive_roots: rank must be >= 1");
  std::vector<Root> out;
  out.reserve(n * (n + 1) / 2);
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) out.push_back(Root{lo, hi, true});
  return out;
}

Root highest_root(int n) { return Root{1, n, true}; }

Root simple_root(int i) { return Root{i, i, true}; }

Root negate(const Root& a) { return Root{a.lo, a.hi, !a.positive}; }

Weight root_weight(int n, const Root& a) {
  Weight w(n, 0);
  int s = a.positive ? 1 : -1;
  for (int i = a.lo; i <= a.hi; ++i) {
    w[i - 1] += 2 * s;
    if (i - 2 >= 0) w[i - 2] -= s;
    if (i < n) w[i] -= s;
  }
  return w;
}

int pairing(const Root& a, const Weight& lam) {
  int n = static_cast<int>(lam.size());
  if (a.lo < 1 || a.hi > n)
    throw std::invalid_argument("pairing: root and weight rank mismatch");
  int s = 0;
  for (int i = a.lo; i <= a.hi; ++i) s += lam[i - 1];
  return a.positive ? s : -s;
}

int root_level(const Root& a, int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("root_level: index out of range");
  int in = (a.lo <= m && m <= a.hi) ? 1 : 0;
  return a.positive ? in : -in;
}

std::vector<Root> roots_at_level(int n, int m, int a) {
  std::vector<Root> out;
  for (const Root& r : positive_roots(n)) {
    if (root_level(r, m, n) == a) out.push_back(r);
    Root neg = negate(r);
    if (root_level(neg, m, n) == a) out.push_back(neg);
  }
  return out;
}

int dual_index(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("dual_index: index out of range");
  return n + 1 - i;
}

Weight reflect(int i, const Weight& lam) {
  int n = static_cast<int>(lam.size());
  if (i < 1 || i > n) throw std::invalid_argument("reflect: index out of range");
  int c = lam[i - 1];
  if (c == 0) return lam;
  Weight out = lam;
  out[i - 1] -= 2 * c;
  if (i - 2 >= 0) out[i - 2] += c;
  if (i < n) out[i] += c;
  return out;
}

std::vector<int> w0_word(int n) {
  std::vector<int> word;
  word.reserve(n * (n + 1) / 2);
  for (int k = 1; k <= n; ++k)
    for (int j = k; j >= 1; --j) word.push_back(j);
  return word;
}

Weight w0_action(const Weight& lam) {
  Weight out = lam;
  for (int i : w0_word(static_cast<int>(lam.size()))) out = reflect(i, out);
  return out;
}

bool is_dominant(const Weight& lam) {
  for (int c : lam)
    if (c < 0) return false;
  return true;
}

Weight zero_weight(int n) { return Weight(n, 0); }

Weight fundamental_weight(int n, int m) {
  if (m < 1 || m > n)
    throw std::invalid_argument("fundamental_weight: index out of range");
  Weight w(n, 0);
  w[m - 1] = 1;
  return w;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool dominance_geq(const Weight& a, const Weight& b) {
  // Solve d = C c for the simple-root coordinates c, where C is the Cartan
  // matrix.  In type A, (n+1) c_i = sum_j min(i,j) (n+1-max(i,j)) d_j; the
  // comparison holds when every c_i is a nonnegative integer.
  int n = static_cast<int>(a.size());
  if (b.size() != a.size())
    throw std::invalid_argument("dominance_geq: rank mismatch");
  for (int i = 1; i <= n; ++i) {
    long long acc = 0;
    for (int j = 1; j <= n; ++j) {
      long long d = a[j - 1] - b[j - 1];
      acc += static_cast<long long>(std::min(i, j)) * (n + 1 - std::max(i, j)) * d;
    }
    if (acc < 0 || acc % (n + 1) != 0) return false;
  }
  return true;
}

void check_rank(const Weight& lam, int n, const char* where) {
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument(std::string(where) + ": rank mismatch");
}

}  // namespace fusionprod
