#include "core/gammap.hpp"

#include <sstream>

#include "core/error.hpp"

namespace igp::gammap {

TruncatedExponential TruncatedExponential::make(unsigned n) {
  TruncatedExponential t;
  t.degree = n;
  t.coefficients.reserve(n + 1);
  Integer kfact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) kfact *= k;
    t.coefficients.emplace_back(Integer(1), kfact);
  }
  return t;
}

Rational TruncatedExponential::eval(const Rational& x) const {
  // Horner from the top coefficient down.
  Rational acc = coefficients[degree];
  for (unsigned k = degree; k-- > 0;) {
    acc = acc * x + coefficients[k];
  }
  return acc;
}

namespace {

void require_odd_prime(const PadicInt& v, const char* what) {
  if (v.prime() == 2) {
    throw DomainError(std::string(what) +
                      ": requires an odd prime (exp at valuation 1 does not "
                      "converge 2-adically)");
  }
}

void require_unit_one_mod_p(const PadicInt& r) {
  Integer rem = r.residue() % r.prime();
  if (rem != 1) {
    throw DomainError("gamma_p: r must satisfy r = 1 (mod p), got residue " +
                      rem.get_str() + " mod " + Integer(r.prime()).get_str());
  }
}

}  // namespace

GammaPInput::GammaPInput(PadicInt s_, PadicInt r_) : s(std::move(s_)), r(std::move(r_)) {
  if (s.prime() != r.prime()) {
    throw InvalidArgumentError("gamma_p: s and r must share the same prime");
  }
  require_odd_prime(r, "gamma_p");
  require_unit_one_mod_p(r);
  unsigned N = std::min(s.precision(), r.precision());
  s = s.with_precision(N);
  r = r.with_precision(N);
}

PadicInt a_tilde(const PadicInt& y, const PadicInt& s) {
  if (y.prime() != s.prime()) {
    throw InvalidArgumentError("a_tilde: mixed primes");
  }
  unsigned long p = y.prime();
  unsigned N = std::min(y.precision(), s.precision());
  PadicInt yy = y.with_precision(N);
  PadicInt ss = s.with_precision(N);

  // Term k is s^k * y (y-1) ... (y-k+1).  A product of k consecutive p-adic
  // integers shifted from y is divisible by as many powers of p as k! is, so
  // v_p(term k) >= v_p(k!) and once v_p(k!) >= N every later term vanishes
  // mod p^N.  Find the first such K by Legendre's formula.
  unsigned K = 0;
  while (exact::vp_factorial(K, p) < N) ++K;

  PadicInt one(p, N, 1);
  PadicInt acc = one;
  PadicInt falling = one;   // y (y-1) ... (y-k+1), empty product for k = 0
  PadicInt spow = one;      // s^k
  for (unsigned k = 1; k <= K; ++k) {
    falling = falling * (yy - PadicInt(p, N, Integer(k) - 1));
    spow = spow * ss;
    acc = acc + spow * falling;
  }
  return acc;
}

PadicInt gamma_p(const GammaPInput& in) {
  unsigned long p = in.r.prime();
  unsigned N = in.r.precision();
  PadicInt y = in.s - PadicInt(p, N, 1);                 // s - 1
  PadicInt rpow = padic::pow_interpolated(in.r, y);      // r^(s-1)
  PadicInt ex = padic::exp_p(in.r * PadicInt(p, N, Integer(p)));
  return rpow * ex * a_tilde(y, in.r.inverse());
}

PadicInt gamma_p_series(const GammaPInput& in) {
  unsigned long p = in.r.prime();
  unsigned N = in.r.precision();
  PadicInt y = in.s - PadicInt(p, N, 1);  // s - 1

  unsigned K = 0;
  while (exact::vp_factorial(K, p) < N) ++K;

  // sum_k r^(s-1-k) (s-1)(s-2)...(s-k); the exponent drops by one per term,
  // so divide the running power by r instead of re-interpolating it.
  PadicInt rinv = in.r.inverse();
  PadicInt rpow = padic::pow_interpolated(in.r, y);  // r^(s-1-k) at k = 0
  PadicInt falling(p, N, 1);                         // (s-1)...(s-k) at k = 0
  PadicInt acc = rpow;                               // k = 0 term
  for (unsigned k = 1; k <= K; ++k) {
    falling = falling * (y - PadicInt(p, N, Integer(k) - 1));
    rpow = rpow * rinv;
    acc = acc + rpow * falling;
  }
  PadicInt ex = padic::exp_p(in.r * PadicInt(p, N, Integer(p)));
  return ex * acc;
}

PadicInt gamma_p_truncexp(unsigned n, const PadicInt& r) {
  require_odd_prime(r, "gamma_p_truncexp");
  require_unit_one_mod_p(r);
  unsigned long p = r.prime();
  unsigned N = r.precision();

  // n! f_n(r) = sum_{k<=n} (n!/k!) r^k is an integer polynomial in r.
  std::vector<Integer> coeff(n + 1);
  coeff[n] = 1;
  Integer desc = 1;  // n!/k!, built downward from k = n
  for (unsigned k = n; k-- > 0;) {
    desc *= (k + 1);
    coeff[k] = desc;
  }
  PadicInt acc(p, N, 0);
  PadicInt rpow(p, N, 1);
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc + PadicInt(p, N, coeff[k]) * rpow;
    rpow = rpow * r;
  }
  PadicInt ex = padic::exp_p(r * PadicInt(p, N, Integer(p)));
  return ex * acc;
}

ConsistencyResult classical_consistency(unsigned n, long r, const PadicContext& ctx) {
  if (n < 1) {
    throw InvalidArgumentError("classical_consistency: n must be >= 1");
  }
  unsigned long p = ctx.p;
  unsigned N = ctx.precision;
  PadicInt rp(p, N, Integer(r));
  require_odd_prime(rp, "classical_consistency");
  require_unit_one_mod_p(rp);

  GammaPInput in(PadicInt(p, N, Integer(n)), rp);
  PadicInt via_gamma = gamma_p(in);

  // a(n-1, 1/r) r^(n-1) = sum_k binom(n-1, k) k! r^(n-1-k) is an exact
  // rational (an integer when r is +-1); reduce it p-adically and attach the
  // same exponential factor.
  Rational sum(Integer(0));
  Rational rq{Integer(r), Integer(1)};
  for (unsigned k = 0; k + 1 <= n; ++k) {
    Rational term{exact::binomial(Integer(n - 1), k) * exact::factorial(k),
                  Integer(1)};
    Rational power{Integer(1), Integer(1)};
    for (unsigned j = 0; j < n - 1 - k; ++j) power = power * rq;
    sum = sum + term * power;
  }
  PadicInt ex = padic::exp_p(rp * PadicInt(p, N, Integer(p)));
  PadicInt via_classical =
      PadicInt::from_rational(sum, PadicContext(p, N)) * ex;

  return ConsistencyResult{p,        N,
                           n,        r,
                           via_gamma, via_classical,
                           via_gamma == via_classical};
}

std::string ConsistencyResult::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"precision\":" << N << ",\"n\":" << n
     << ",\"r\":" << r << ",\"gamma_route\":" << via_gamma.residue().get_str()
     << ",\"classical_route\":" << via_classical.residue().get_str()
     << ",\"equal\":" << (equal ? "true" : "false") << "}";
  return os.str();
}

FloorPadicResult verify_floor_padic(unsigned n, long r, const PadicContext& ctx) {
  unsigned long p = ctx.p;
  unsigned N = ctx.precision;
  if (r == 0) {
    throw InvalidArgumentError("verify_floor_padic: r must be nonzero");
  }
  PadicInt rp(p, N, Integer(r));
  require_odd_prime(rp, "verify_floor_padic");
  require_unit_one_mod_p(rp);

  // Left side: gamma_p(n + 1, 1/r); 1/r = 1 mod p whenever r is.
  PadicInt rinv = rp.inverse();
  GammaPInput in(PadicInt(p, N, Integer(n) + 1), rinv);
  PadicInt lhs = gamma_p(in);

  // Right side: r^(-n) exp_p(p / r) floor(e^(1/r) r^n n! [+ 1/2 when r < 0]),
  // the floor taken over a certified rational enclosure.
  Integer fl = combinat::certified_floor(n, r);
  PadicInt ex = padic::exp_p(rinv * PadicInt(p, N, Integer(p)));
  PadicInt rpow_neg = rp.pow(Integer(-static_cast<long>(n)));
  PadicInt rhs = rpow_neg * ex * PadicInt(p, N, fl);

  return FloorPadicResult{p, N, n, r, lhs, rhs, fl, lhs == rhs};
}

std::string FloorPadicResult::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"precision\":" << N << ",\"n\":" << n
     << ",\"r\":" << r << ",\"lhs\":" << lhs.residue().get_str()
     << ",\"rhs\":" << rhs.residue().get_str()
     << ",\"floor\":" << floor_value.get_str()
     << ",\"equal\":" << (equal ? "true" : "false") << "}";
  return os.str();
}

std::vector<Integer> zero_scan(const PadicInt& r, unsigned level, uint64_t budget) {
  if (level == 0) {
    throw InvalidArgumentError("zero_scan: level must be >= 1");
  }
  unsigned long p = r.prime();
  if (level > r.precision()) {
    throw InvalidArgumentError("zero_scan: level exceeds the precision of r");
  }
  Integer count = 1;
  for (unsigned i = 0; i < level; ++i) {
    count *= p;
    if (count > Integer(static_cast<unsigned long>(budget))) {
      throw BudgetError("zero_scan: p^level exceeds the enumeration budget");
    }
  }
  PadicInt rr = r.with_precision(level);
  std::vector<Integer> zeros;
  for (Integer y = 0; y < count; ++y) {
    PadicInt yy(p, level, y);
    if (a_tilde(yy, rr).is_zero()) zeros.push_back(y);
  }
  return zeros;
}

}  // namespace igp::gammap
