#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "core/error.hpp"

// Exact integer/rational arithmetic, prime valuations, and rigorous rational
// interval enclosures of e^(1/r). Everything here is exact: no floating point
// anywhere, and every interval comes with a proven tail bound.

namespace igp::exact {

using Integer = mpz_class;

// Arbitrary-precision rational in canonical form: lowest terms, positive
// denominator, sign carried by the numerator. Serializes as "num/den" with
// the denominator omitted when it is 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}                  // NOLINT: implicit by design
  Rational(const Integer& n) : q_(n) {}        // NOLINT
  Rational(const Integer& num, const Integer& den);
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Integer floor() const;  // toward -infinity
  Rational abs() const;
  std::string str() const { return q_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;  // kept canonical via mpq_canonicalize
};

// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
 public:
  RationalInterval(Rational lo, Rational hi);
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& inner) const {
    return lo_ <= inner.lo_ && inner.hi_ <= hi_;
  }
  RationalInterval scaled_by(const Rational& c) const;   // endpoint swap when c < 0
  RationalInterval shifted_by(const Rational& c) const;

 private:
  Rational lo_, hi_;
};

bool is_prime(unsigned long p);

Integer factorial(unsigned long n);

// Binomial coefficient with integer top (valid for negative tops too) and the
// generalized form x(x-1)...(x-k+1)/k! for rational x.
Integer binomial(const Integer& n, unsigned long k);
Rational binomial(const Rational& x, unsigned long k);

// p-adic valuation: largest e with p^e | n. Undefined (throws) at 0.
unsigned long vp(const Integer& n, unsigned long p);
long vp(const Rational& q, unsigned long p);

unsigned long digit_sum(const Integer& n, unsigned long p);

// v_p(n!) by Legendre's formula (n - digit_sum_p(n)) / (p - 1); exact and
// O(log n), no factorial is ever formed.
Integer vp_factorial(const Integer& n, unsigned long p);

// Rigorous enclosure of e^(1/r) for a nonzero integer r, from the partial sum
// S_K of K+1 = terms leading series terms plus the geometric-majorant tail
// bound |1/r|^(K+1)/(K+1)! * 1/(1 - |1/r|/(K+2)). Successive enclosures are
// nested with nonincreasing width.
RationalInterval exp_reciprocal_interval(long r, unsigned long terms);

}  // namespace igp::exact
