#pragma once

#include <string>

#include "core/exact.hpp"

// Finite-precision p-adic integers. A value is a residue mod p^N together
// with the pair (p, N); all arithmetic tracks absolute precision as the
// minimum of the operand precisions. Zero at precision N means "valuation at
// least N", and valuation() reports that explicitly instead of guessing.
//
// exp_p / log_p sum their defining series with truncation indices derived
// from Legendre-style valuation lower bounds, never from heuristics:
//   v_p(x^k / k!) >= k v_p(x) - (k - 1)/(p - 1)
//   v_p(z^k / k)  >= k v_p(z) - log_p(k)
// Both bounds are strictly increasing in k on the stated domains, so the
// first index whose bound reaches N certifies every later term.
//
// Domains: exp_p needs v_p(x) >= 1 for odd p and v_2(x) >= 2; log_p needs
// u = 1 mod p for odd p and u = 1 mod 4. These are exactly the disks where
// the series converge and invert each other.

namespace igp::padic {

using exact::Integer;
using exact::Rational;

struct PadicContext {
  unsigned long p;
  unsigned precision;
  PadicContext(unsigned long p_, unsigned precision_);
};

struct Valuation {
  unsigned value;
  bool at_least;  // true when the residue is 0: valuation is >= value
};

class PadicInt {
 public:
  // Reduces value into [0, p^precision); negative inputs wrap around.
  PadicInt(unsigned long p, unsigned precision, const Integer& value);
  PadicInt(const PadicContext& ctx, const Integer& value)
      : PadicInt(ctx.p, ctx.precision, value) {}

  // q must be a p-adic integer: p may not divide the denominator.
  static PadicInt from_rational(const Rational& q, const PadicContext& ctx);

  unsigned long prime() const { return p_; }
  unsigned precision() const { return prec_; }
  const Integer& residue() const { return residue_; }
  Integer modulus() const;
  bool is_zero() const { return residue_ == 0; }

  Valuation valuation() const;
  PadicInt with_precision(unsigned m) const;  // m <= precision(): truncation only

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);

  PadicInt inverse() const;         // unit (valuation 0) required
  PadicInt pow(const Integer& e) const;  // negative e requires a unit base

  // Equal prime and congruent residues at the smaller of the two precisions.
  friend bool operator==(const PadicInt& a, const PadicInt& b);
  friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

  std::string to_json() const;

 private:
  unsigned long p_;
  unsigned prec_;
  Integer residue_;
};

PadicInt exp_p(const PadicInt& x);
PadicInt log_p(const PadicInt& u);

// r^y := exp_p(y * log_p(r)) for r = 1 mod p (mod 4 when p = 2). Interpolates
// the integer powers of r p-adically in the exponent.
PadicInt pow_interpolated(const PadicInt& r, const PadicInt& y);

}  // namespace igp::padic
