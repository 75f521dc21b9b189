#include "core/exact.hpp"

#include <cctype>

namespace igp::exact {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  // Accepted forms: "-123", "123", "-3/4", "3/4". Whitespace at the ends only.
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  if (body.empty()) throw ParseError("empty rational literal");

  auto parse_int = [](std::string_view s, bool allow_sign) -> Integer {
    if (s.empty()) throw ParseError("empty integer literal");
    size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("sign without digits");
    for (size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw ParseError("bad digit in integer literal: " + std::string(s));
    if (s[0] == '+') s.remove_prefix(1);  // mpz_set_str rejects a leading '+'
    return Integer(std::string(s), 10);
  };

  size_t slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body, true));
  Integer num = parse_int(body.substr(0, slash), true);
  Integer den = parse_int(body.substr(slash + 1), false);
  if (den == 0) throw ParseError("zero denominator in rational literal");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return q;
}

Rational Rational::abs() const {
  Rational r = *this;
  r.q_ = ::abs(r.q_);
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.q_ = -r.q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw InvalidArgumentError("interval endpoints out of order");
}

RationalInterval RationalInterval::scaled_by(const Rational& c) const {
  Rational a = lo_ * c, b = hi_ * c;
  if (c.sign() < 0) return RationalInterval(b, a);
  return RationalInterval(a, b);
}

RationalInterval RationalInterval::shifted_by(const Rational& c) const {
  return RationalInterval(lo_ + c, hi_ + c);
}

bool is_prime(unsigned long p) {
  mpz_class n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Rational binomial(const Rational& x, unsigned long k) {
  Rational falling = 1;
  for (unsigned long i = 0; i < k; ++i) falling *= x - Rational(Integer(i));
  return falling / Rational(factorial(k));
}

unsigned long vp(const Integer& n, unsigned long p) {
  if (p < 2 || !is_prime(p)) throw InvalidArgumentError("vp: p must be prime");
  if (n == 0) throw DomainError("vp: valuation of zero is undefined");
  Integer rest, pz(p);
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
}

long vp(const Rational& q, unsigned long p) {
  if (q.is_zero()) throw DomainError("vp: valuation of zero is undefined");
  return static_cast<long>(vp(q.numerator(), p)) -
         static_cast<long>(vp(q.denominator(), p));
}

unsigned long digit_sum(const Integer& n, unsigned long p) {
  if (p < 2) throw InvalidArgumentError("digit_sum: base must be at least 2");
  if (n < 0) throw DomainError("digit_sum: negative argument");
  Integer rest = n, digit;
  unsigned long s = 0;
  while (rest != 0) {
    digit = rest % p;
    s += digit.get_ui();
    rest /= p;
  }
  return s;
}

Integer vp_factorial(const Integer& n, unsigned long p) {
  if (!is_prime(p)) throw InvalidArgumentError("vp_factorial: p must be prime");
  if (n < 0) throw DomainError("vp_factorial: negative argument");
  Integer num = n - Integer(digit_sum(n, p));
  Integer q;
  // Legendre guarantees exact divisibility by p - 1.
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), p - 1);
  return q;
}

RationalInterval exp_reciprocal_interval(long r, unsigned long terms) {
  if (r == 0) throw InvalidArgumentError("exp_reciprocal_interval: r must be nonzero");
  if (terms < 2)
    throw InvalidArgumentError("exp_reciprocal_interval: need at least 2 terms");

  const Rational x(Integer(1), Integer(r));
  const unsigned long K = terms - 1;

  Rational sum = 0, term = 1;  // term holds x^k / k!
  for (unsigned long k = 0; k <= K; ++k) {
    sum += term;
    term *= x / Rational(Integer(k + 1));
  }
  // After the loop, |term| = |x|^(K+1)/(K+1)!. The dropped tail is dominated
  // by the geometric series with ratio |x|/(K+2) < 1, hence the bound below.
  Rational t = term.abs();
  Rational ratio = x.abs() / Rational(Integer(K + 2));
  Rational tail = t / (Rational(1) - ratio);
  return RationalInterval(sum - tail, sum + tail);
}

}  // namespace igp::exact
