#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/exact.hpp"
#include "core/mahler.hpp"

// The m-value transform of a normalized sequence and the continuity
// criterion built on it. For f with f(0) = 1, the m-values are defined by
//   sum_n f(n) X^n / n! = exp( sum_k m_k X^k / k ),
// equivalently by the recursion
//   m_k = f(k)/(k-1)! - sum_{j=1}^{k-1} f(k-j)/(k-j)! * m_j,
// or by the partition expansion of log of the exponential generating
// function. When every m_k with k >= 2 is a p-adic integer, f extends
// continuously to Z_p exactly when m_p = m_1 - 1 (mod p).

namespace igp::mvalues {

using exact::Integer;
using exact::Rational;
using mahler::SequencePrefix;

// m_1..m_K; index 0 of values holds m_1.
struct MSeries {
  std::vector<Rational> values;
  const Rational& m(size_t k) const { return values.at(k - 1); }
};

// Coefficients c_0..c_K of an exponential generating function sum c_n X^n/n!.
struct EGFPrefix {
  std::vector<Rational> coeffs;
};

// Recursion route; requires f(0) = 1.
MSeries m_from_f(const SequencePrefix& f);

// Independent route: m_k via the sum over partitions of k of
//   (-1)^(len+1)/len * multinomial(len; multiplicities) * prod (f(j)/j!)^e_j,
// scaled by k. Exponential in nothing, polynomial in p(k); fine for k <= ~30.
Rational m_from_f_partition(const SequencePrefix& f, unsigned k);

// Coefficients of exp(sum_k m_k X^k / k) through degree K (K <= len(m)).
EGFPrefix zeta_egf(const MSeries& m, unsigned K);

// Gauss-norm statistic of an EGF prefix: the minimum p-adic valuation of the
// coefficients, or nullopt when every coefficient is zero.
std::optional<Rational> egf_norm(const EGFPrefix& c, unsigned long p);

// Binomial convolution c_n = sum_k binom(n,k) a_(n-k) b_k, truncated to the
// shorter operand.
EGFPrefix egf_product(const EGFPrefix& a, const EGFPrefix& b);

struct CriterionVerdict {
  enum class Kind { Continuous, NotContinuous, Inapplicable };
  unsigned long p;
  Kind verdict;
  Rational m1, mp;
  // (m_p - m_1 + 1) mod p, absent when that difference is not p-integral.
  std::optional<unsigned long> congruence_residue;
  std::vector<std::pair<unsigned, Rational>> integrality_violations;  // k >= 2
  std::string to_json() const;
};

// Requires f(0) = 1 and a prefix of length at least p + 1.
CriterionVerdict continuity_criterion(const SequencePrefix& f, unsigned long p);

// f(n) = (-1)^n * product of k < n+1 prime to p -- the sign-adjusted Morita
// gamma values, a worked example with m_p = p - 2.
SequencePrefix morita_f(unsigned long p, size_t len);

// EGF coefficients of exp(X + X^l/l + X^(l^2)/l^2 + ...); the m-values are
// the indicator of {1, l, l^2, ...}.
SequencePrefix artin_hasse_f(unsigned long ell, size_t len);

}  // namespace igp::mvalues
