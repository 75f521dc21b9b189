#pragma once

#include <string>
#include <vector>

#include "core/combinat.hpp"
#include "core/exact.hpp"
#include "core/padic.hpp"

// The p-adic incomplete gamma function on Z_p x (1 + pZ_p), for odd p:
//
//   gamma_p(s, r) = r^(s-1) exp_p(p r) atilde(s - 1, 1/r)
//
// with the two-variable series atilde(y, s) = 1 + sum_{k>=1} s^k y(y-1)...(y-k+1).
// Because k! binom(y,k) is the falling factorial, no term ever divides a
// p-adic value by k!; the truncation index comes from v_p(k!) >= N via
// Legendre. Three independent evaluation routes are provided and must agree:
//   factored   r^(s-1) exp_p(pr) atilde(s-1, 1/r)
//   series     exp_p(pr) sum_k r^(s-1-k) (s-1)(s-2)...(s-k)
//   truncexp   exp_p(pr) n! f_n(r) at s = n+1, f_n = degree-n exponential sum
// The function interpolates e^z Gamma(n, z) z^(1-n) evaluated p-adically:
// at integer s = n the value is a(n-1, 1/r) r^(n-1) exp_p(pr), an exact
// rational times an exponential, which classical_consistency checks. The
// floor identity transports the combinatorial floor formula into Z_p, which
// verify_floor_padic checks against a rigorously certified floor.
//
// All of this needs exp_p(p r) with v_p(pr) = 1, so p = 2 is outside the
// convergence disk and every entry point rejects it.

namespace igp::gammap {

using exact::Integer;
using exact::Rational;
using padic::PadicContext;
using padic::PadicInt;

// Degree-n truncation f_n(X) = sum_{k<=n} X^k / k! of the exponential series.
struct TruncatedExponential {
  unsigned degree;
  std::vector<Rational> coefficients;  // 1/k! for k = 0..degree
  static TruncatedExponential make(unsigned n);
  Rational eval(const Rational& x) const;
};

// Validated argument pair: s in Z_p, r = 1 mod p, shared odd prime, working
// precision = min of the operands.
struct GammaPInput {
  PadicInt s;
  PadicInt r;
  GammaPInput(PadicInt s_, PadicInt r_);
};

// atilde(y, s): defined for any y, s in Z_p (any p, including 2).
PadicInt a_tilde(const PadicInt& y, const PadicInt& s);

PadicInt gamma_p(const GammaPInput& in);
PadicInt gamma_p_series(const GammaPInput& in);
PadicInt gamma_p_truncexp(unsigned n, const PadicInt& r);

struct ConsistencyResult {
  unsigned long p;
  unsigned N;
  unsigned n;
  long r;
  PadicInt via_gamma;      // gamma_p at integer s = n
  PadicInt via_classical;  // a(n-1, 1/r) r^(n-1) exp_p(p r), rational route
  bool equal;
  std::string to_json() const;
};
// n >= 1, r = 1 mod p.
ConsistencyResult classical_consistency(unsigned n, long r, const PadicContext& ctx);

struct FloorPadicResult {
  unsigned long p;
  unsigned N;
  unsigned n;
  long r;
  PadicInt lhs;         // gamma_p(n + 1, 1/r)
  PadicInt rhs;         // r^(-n) exp_p(p/r) * certified floor
  Integer floor_value;
  bool equal;
  std::string to_json() const;
};
// n >= 0, r = 1 mod p nonzero.
FloorPadicResult verify_floor_padic(unsigned n, long r, const PadicContext& ctx);

// Residues y mod p^level with atilde(y, r) = 0 mod p^level; sound because
// atilde contracts distances (1-Lipschitz in both arguments). The scan size
// p^level is guarded by the budget.
std::vector<Integer> zero_scan(const PadicInt& r, unsigned level,
                               uint64_t budget = combinat::kDefaultBudget);

}  // namespace igp::gammap
