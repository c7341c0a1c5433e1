#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fusionprod {

/// Exact rational scalar.
///
/// Values live on a 64-bit fast path and promote to GMP transparently when
/// an intermediate would overflow; results demote back when they fit again.
/// Always canonical: den > 0, gcd(num, den) = 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);
  Rat(const Rat& o);
  Rat(Rat&& o) noexcept = default;
  Rat& operator=(const Rat& o);
  Rat& operator=(Rat&& o) noexcept = default;

  static Rat from_mpq(const mpq_class& q);

  bool is_zero() const { return big_ ? big_->get_num() == 0 : num_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;

  // Fast-path accessors; valid only when !is_big().
  bool is_big() const { return big_ != nullptr; }
  long long num_small() const { return num_; }
  long long den_small() const { return den_; }
  const mpq_class& big() const { return *big_; }
  mpq_class to_mpq() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  Rat inv() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const;       // "n" or "n/d"
  std::string num_str() const;
  std::string den_str() const;

  static Rat factorial(long long k);

 private:
  void set_from_i128(__int128 n, __int128 d);
  void promote_set(const mpq_class& q);
  void demote_if_possible();

  long long num_, den_;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace fusionprod
