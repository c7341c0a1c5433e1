#include "fusionprod/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace fusionprod {

namespace {

using i128 = __int128;

i128 i128_abs(i128 x) { return x < 0 ? -x : x; }

i128 i128_gcd(i128 a, i128 b) {
  a = i128_abs(a);
  b = i128_abs(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kI64Min = std::numeric_limits<long long>::min();
constexpr i128 kI64Max = std::numeric_limits<long long>::max();

bool fits_i64(i128 x) { return x >= kI64Min && x <= kI64Max; }

mpz_class mpz_from_i128(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)x : (unsigned __int128)x;
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rat::Rat(long long n, long long d) : num_(0), den_(1) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  set_from_i128(n, d);
}

Rat::Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rat& Rat::operator=(const Rat& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

Rat Rat::from_mpq(const mpq_class& q) {
  Rat r;
  r.promote_set(q);
  r.demote_if_possible();
  return r;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(num_));
  q /= mpq_class(static_cast<long>(den_));
  return q;
}

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

void Rat::set_from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  i128 g = i128_gcd(n, d);
  n /= g;
  d /= g;
  if (fits_i64(n) && fits_i64(d)) {
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
    big_.reset();
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    promote_set(q);
  }
}

void Rat::promote_set(const mpq_class& q) {
  if (big_)
    *big_ = q;
  else
    big_ = std::make_unique<mpq_class>(q);
}

void Rat::demote_if_possible() {
  if (!big_) return;
  if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
    num_ = big_->get_num().get_si();
    den_ = big_->get_den().get_si();
    big_.reset();
  }
}

Rat Rat::operator-() const {
  Rat r(*this);
  if (r.big_)
    *r.big_ = -(*r.big_);
  else
    r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!big_ && !o.big_) {
    i128 n = (i128)num_ * o.den_ + (i128)o.num_ * den_;
    i128 d = (i128)den_ * o.den_;
    set_from_i128(n, d);
  } else {
    mpq_class q = to_mpq() + o.to_mpq();
    promote_set(q);
    demote_if_possible();
  }
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  if (!big_ && !o.big_) {
    i128 n = (i128)num_ * o.den_ - (i128)o.num_ * den_;
    i128 d = (i128)den_ * o.den_;
    set_from_i128(n, d);
  } else {
    mpq_class q = to_mpq() - o.to_mpq();
    promote_set(q);
    demote_if_possible();
  }
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  if (!big_ && !o.big_) {
    i128 n = (i128)num_ * o.num_;
    i128 d = (i128)den_ * o.den_;
    set_from_i128(n, d);
  } else {
    mpq_class q = to_mpq() * o.to_mpq();
    promote_set(q);
    demote_if_possible();
  }
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  if (!big_ && !o.big_) {
    i128 n = (i128)num_ * o.den_;
    i128 d = (i128)den_ * o.num_;
    set_from_i128(n, d);
  } else {
    mpq_class q = to_mpq() / o.to_mpq();
    promote_set(q);
    demote_if_possible();
  }
  return *this;
}

bool Rat::operator==(const Rat& o) const {
  if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
  return to_mpq() == o.to_mpq();
}

bool Rat::operator<(const Rat& o) const {
  if (!big_ && !o.big_)
    return (i128)num_ * o.den_ < (i128)o.num_ * den_;
  return to_mpq() < o.to_mpq();
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r;
  if (!big_) {
    r.set_from_i128(den_, num_);
  } else {
    mpq_class q = 1 / *big_;
    r.promote_set(q);
    r.demote_if_possible();
  }
  return r;
}

std::string Rat::str() const {
  if (big_) return big_->get_str();
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::string Rat::num_str() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rat::den_str() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

Rat Rat::factorial(long long k) {
  if (k < 0) throw std::domain_error("Rat: factorial of negative");
  Rat r(1);
  for (long long i = 2; i <= k; ++i) r *= Rat(i);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace fusionprod
