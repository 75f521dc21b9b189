#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/exact.hpp"
#include "core/padic.hpp"

// Finite differences of integer-indexed sequences and the classification
// diagnostics built on them. For f: N -> Q the forward differences at 0 are
//   Delta_n = sum_{k=0}^{n} (-1)^(n-k) binom(n,k) f(k),
// with inverse f(n) = sum_k binom(n,k) Delta_k. The p-adic behaviour of f is
// read off the valuations of Delta_n:
//   continuous            v_p(Delta_n) -> infinity
//   metric map (1-Lip)    sup_n |Delta_n|_p p^floor(log_p n) <= 1
//   analytic              v_p(Delta_n / n!) -> infinity
//   locally analytic      liminf v_p(Delta_n)/n > 0
// A finite prefix can refute the sup condition outright but can only ever
// give evidence for the limit conditions, so every verdict is labelled
// diagnostic. Decision rule for the limit-type criteria: split the prefix in
// half and compare windowed minima of the exact statistic; growth passes,
// decline fails, a tail flat at the overall minimum fails, anything else is
// inconclusive. Zero differences count as +infinity.

namespace igp::mahler {

using exact::Integer;
using exact::Rational;
using padic::PadicInt;

// f(0..K) as exact rationals; never empty.
struct SequencePrefix {
  std::vector<Rational> values;
  size_t K() const { return values.size() - 1; }
};

std::vector<Rational> finite_differences(const SequencePrefix& f);
Rational mahler_reconstruct(const std::vector<Rational>& deltas, unsigned long n);

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

struct CriterionRecord {
  std::vector<std::string> statistic;  // exact per-index values; "inf" for Delta_n = 0
  Verdict verdict;
};

struct RegularityReport {
  unsigned long p;
  size_t prefix_len;
  CriterionRecord continuous;        // v_p(Delta_n), n = 0..K
  CriterionRecord metric_map;        // floor(log_p n) - v_p(Delta_n), n = 1..K ("-inf" at 0 diffs)
  CriterionRecord analytic;          // v_p(Delta_n) - v_p(n!), n = 0..K
  CriterionRecord locally_analytic;  // v_p(Delta_n)/n as exact rationals, n = 1..K
  std::string to_json() const;
};

// Requires a prefix of at least 8 values so the windowed rule has substance.
RegularityReport classify_regularity(const SequencePrefix& f, unsigned long p);

// Evaluate sum_k Delta_k binom(y, k) at a p-adic point. Each term is
// assembled as (Delta_k / k!) * y(y-1)...(y-k+1); Delta_k / k! must be a
// p-adic integer. term_bound(k) must be a certified lower bound on the
// p-adic valuation of term k, nondecreasing in k; summation stops at the
// first index whose bound reaches the working precision. Throws a precision
// error if the bound never gets there within the prefix.
PadicInt mahler_eval(const std::vector<Rational>& deltas, const PadicInt& y,
                     const std::function<Rational(size_t)>& term_bound);

}  // namespace igp::mahler
