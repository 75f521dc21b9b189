#include "core/padic.hpp"

#include <algorithm>
#include <sstream>

namespace igp::padic {

namespace {

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Largest e with p^e <= k, i.e. floor(log_p k); 0 for k = 1.
unsigned long floor_log(unsigned long k, unsigned long p) {
  unsigned long e = 0;
  for (Integer pw(p); pw <= k; pw *= p) ++e;
  return e;
}

}  // namespace

PadicContext::PadicContext(unsigned long p_, unsigned precision_)
    : p(p_), precision(precision_) {
  if (!exact::is_prime(p)) throw InvalidArgumentError("p-adic context: p must be prime");
  if (precision == 0)
    throw InvalidArgumentError("p-adic context: precision must be positive");
}

PadicInt::PadicInt(unsigned long p, unsigned precision, const Integer& value)
    : p_(p), prec_(precision) {
  if (!exact::is_prime(p)) throw InvalidArgumentError("p-adic integer: p must be prime");
  if (precision == 0)
    throw InvalidArgumentError("p-adic integer: precision must be positive");
  Integer m = pow_ui(p_, prec_);
  mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
}

PadicInt PadicInt::from_rational(const Rational& q, const PadicContext& ctx) {
  Integer den = q.denominator();
  if (den % ctx.p == 0)
    throw DomainError("from_rational: denominator divisible by p");
  Integer m = pow_ui(ctx.p, ctx.precision);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("from_rational: denominator not invertible");  // unreachable
  return PadicInt(ctx.p, ctx.precision, q.numerator() * inv);
}

Integer PadicInt::modulus() const { return pow_ui(p_, prec_); }

Valuation PadicInt::valuation() const {
  if (residue_ == 0) return {prec_, true};
  // 0 < residue < p^N forces v_p(residue) <= N - 1, so the cast is safe.
  return {static_cast<unsigned>(exact::vp(residue_, p_)), false};
}

PadicInt PadicInt::with_precision(unsigned m) const {
  if (m == 0 || m > prec_)
    throw InvalidArgumentError("with_precision: can only truncate precision");
  return PadicInt(p_, m, residue_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, prec_, -residue_); }

namespace {
unsigned joint_precision(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime())
    throw InvalidArgumentError("p-adic arithmetic: prime mismatch");
  return std::min(a.precision(), b.precision());
}
}  // namespace

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  unsigned n = joint_precision(a, b);
  return PadicInt(a.prime(), n, a.residue() + b.residue());
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  unsigned n = joint_precision(a, b);
  return PadicInt(a.prime(), n, a.residue() - b.residue());
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  unsigned n = joint_precision(a, b);
  return PadicInt(a.prime(), n, a.residue() * b.residue());
}

PadicInt PadicInt::inverse() const {
  Valuation v = valuation();
  if (v.at_least || v.value != 0)
    throw DomainError("inverse: not a unit (positive valuation)");
  Integer m = modulus(), inv;
  mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t());
  return PadicInt(p_, prec_, inv);
}

PadicInt PadicInt::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  Integer m = modulus(), r;
  mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return PadicInt(p_, prec_, r);
}

bool operator==(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime()) return false;
  unsigned n = std::min(a.precision(), b.precision());
  Integer m = pow_ui(a.prime(), n);
  return (a.residue() - b.residue()) % m == 0;
}

std::string PadicInt::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p_ << ",\"precision\":" << prec_ << ",\"residue\":\""
     << residue_.get_str() << "\"}";
  return os.str();
}

PadicInt exp_p(const PadicInt& x) {
  const unsigned long p = x.prime();
  const unsigned N = x.precision();
  const unsigned long vmin = (p == 2) ? 2 : 1;
  Valuation v = x.valuation();
  if (!v.at_least && v.value < vmin)
    throw DomainError("exp_p: argument outside the convergence disk");
  if (x.is_zero()) return PadicInt(p, N, 1);

  const unsigned long vx = v.value;
  // Truncate after K where k*vx - (k-1)/(p-1) >= N for every k > K; the
  // bound increases strictly in k (vx > 1/(p-1) on the domain), so testing
  // K+1 suffices. Integer form: k*vx*(p-1) - (k-1) >= N*(p-1).
  unsigned long K = 1;
  while ((K + 1) * vx * (p - 1) < (K + 1) - 1 + static_cast<unsigned long>(N) * (p - 1))
    ++K;

  // Sum x^k/k! for k <= K without ever dividing a residue by p: evaluate the
  // integer polynomial P(a) = sum_k (K!/k!) a^k = K! * S_K(a) by Horner at
  // the elevated modulus p^(N+g), g = v_p(K!), then strip p^g and the unit
  // part of K! from P. P is divisible by p^g because K! * S_K(a) is.
  const unsigned long g = exact::vp_factorial(Integer(K), p).get_ui();
  Integer modN;
  mpz_ui_pow_ui(modN.get_mpz_t(), p, N);
  Integer modNg;
  mpz_ui_pow_ui(modNg.get_mpz_t(), p, N + g);

  const Integer& a = x.residue();
  Integer acc = 1;        // coefficient K!/K! of a^K
  Integer coeff = 1;      // running K!/j!
  for (unsigned long j = K; j-- > 0;) {
    coeff *= (j + 1);
    acc = (acc * a + coeff) % modNg;
  }
  Integer pg;
  mpz_ui_pow_ui(pg.get_mpz_t(), p, g);
  Integer stripped;
  mpz_divexact(stripped.get_mpz_t(), acc.get_mpz_t(), pg.get_mpz_t());
  Integer unit;  // K! / p^g, invertible mod p^N
  mpz_divexact(unit.get_mpz_t(), coeff.get_mpz_t(), pg.get_mpz_t());
  Integer unit_inv;
  mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), modN.get_mpz_t());
  return PadicInt(p, N, stripped * unit_inv);
}

PadicInt log_p(const PadicInt& u) {
  const unsigned long p = u.prime();
  const unsigned N = u.precision();
  Integer z = u.residue() - 1;
  if (p == 2) {
    if (z % 4 != 0) throw DomainError("log_p: argument must be 1 mod 4");
  } else if (z % static_cast<long>(p) != 0) {
    throw DomainError("log_p: argument must be 1 mod p");
  }
  if (z == 0) return PadicInt(p, N, 0);

  const unsigned long vz = exact::vp(z, p);
  // Stop once k*vz - (floor_log_p(k) + 1) >= N with k >= 2: the real-valued
  // bound k*vz - log_p(k) is increasing from k = 2 on, so all later terms
  // have valuation >= N as well.
  unsigned long K = 1;
  while (!(K >= 2 && K * vz >= static_cast<unsigned long>(N) + floor_log(K, p) + 1))
    ++K;
  const unsigned long g = floor_log(K, p);  // max v_p(k) over k <= K

  Integer modN;
  mpz_ui_pow_ui(modN.get_mpz_t(), p, N);
  Integer modNg;
  mpz_ui_pow_ui(modNg.get_mpz_t(), p, N + g);

  Integer sum = 0, zk = 1;
  for (unsigned long k = 1; k <= K; ++k) {
    zk = (zk * z) % modNg;
    // v_p(z^k) >= k > v_p(k), so the residue mod p^(N+g) is divisible by
    // p^(v_p(k)) and the exact division below is safe.
    unsigned long vk = 0, kk = k;
    while (kk % p == 0) { kk /= p; ++vk; }
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, vk);
    Integer reduced;
    mpz_divexact(reduced.get_mpz_t(), zk.get_mpz_t(), pk.get_mpz_t());
    Integer unit(static_cast<unsigned long>(kk)), unit_inv;
    mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), modN.get_mpz_t());
    Integer term = (reduced % modN) * unit_inv % modN;
    if (k % 2 == 0) sum -= term; else sum += term;
  }
  return PadicInt(p, N, sum);
}

PadicInt pow_interpolated(const PadicInt& r, const PadicInt& y) {
  return exp_p(y * log_p(r));
}

}  // namespace igp::padic
