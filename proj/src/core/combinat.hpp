#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/exact.hpp"
#include "core/mvalues.hpp"

// Exact enumeration of colored permutations and cycle-restricted
// permutations, plus the closed forms they must match.
//
// An element of the wreath product of a cyclic group of order r with S_n is
// a pair (colors, perm) with colors: [n] -> {0..r-1}; it fixes a point
// exactly when some m has perm(m) = m and colors(m) = 0. Derangements (no
// fixed point) number (-1)^n a(n, -r); arrangements (a subset of [n]
// together with a wreath element on it) number a(n, r), where
//   a(n, x) = sum_{k=0}^{n} binom(n,k) k! x^k.
// The counting routines here are deliberately literal loops over every
// element: they are the oracles the closed forms are tested against.
//
// The floor identity: for n >= 1 and nonzero integer r,
//   a(n, r) = floor( e^(1/r) r^n n! )        (r > 0)
//   a(n, r) = floor( e^(1/r) r^n n! + 1/2 )  (r < 0)
// verified rigorously with rational interval enclosures of e^(1/r).

namespace igp::combinat {

using exact::Integer;
using exact::Rational;
using mvalues::EGFPrefix;

// Set of permitted cycle lengths with decidable membership up to a bound B;
// querying beyond B is a contract violation, so every consumer checks its
// range against B first.
class CycleLengthSet {
 public:
  static CycleLengthSet squares(uint64_t bound);
  static CycleLengthSet non_squares(uint64_t bound);
  static CycleLengthSet primes(uint64_t bound);
  static CycleLengthSet non_primes(uint64_t bound);
  static CycleLengthSet powers(unsigned long ell, uint64_t bound);         // {1, l, l^2, ...}
  static CycleLengthSet proper_powers(unsigned long ell, uint64_t bound);  // {l, l^2, ...}
  static CycleLengthSet complement_powers(unsigned long ell, uint64_t bound);
  static CycleLengthSet derangements(uint64_t bound);  // {2, 3, ...}
  static CycleLengthSet all(uint64_t bound);
  static CycleLengthSet none(uint64_t bound);
  static CycleLengthSet explicit_set(std::vector<uint64_t> members, uint64_t bound);

  // Parse "squares", "powers:3", "explicit:1,4,9", ... as above.
  static CycleLengthSet preset(const std::string& name, uint64_t bound);

  bool contains(uint64_t k) const;
  uint64_t bound() const { return bound_; }
  const std::string& description() const { return desc_; }

 private:
  CycleLengthSet(std::function<bool(uint64_t)> member, uint64_t bound, std::string desc);
  std::function<bool(uint64_t)> member_;
  uint64_t bound_;
  std::string desc_;
};

inline constexpr uint64_t kDefaultBudget = 100000000;  // elements enumerated

Rational a_closed(unsigned n, const Rational& r);

// Literal enumeration over all r^n * n! pairs; budget guards that product.
uint64_t count_wreath_derangements(unsigned n, unsigned r, uint64_t budget = kDefaultBudget);
// Literal enumeration over all subsets and all group elements on them.
uint64_t count_wreath_arrangements(unsigned n, unsigned r, uint64_t budget = kDefaultBudget);

// Literal scan of S_n (n! <= budget); use egf_cycle_restricted for large n.
Integer count_cycle_restricted(const CycleLengthSet& L, unsigned n,
                               uint64_t budget = kDefaultBudget);

// Counts for n = 0..K via the exponential generating function
// prod_{r in L} exp(X^r / r); exact rational pipeline, integer results.
std::vector<Integer> cycle_restricted_counts(const CycleLengthSet& L, unsigned K);
EGFPrefix egf_cycle_restricted(const CycleLengthSet& L, unsigned K);

// Sorted cycle lengths of a permutation in one-line form (1-based values).
std::vector<unsigned> cycle_type(const std::vector<unsigned>& perm);

struct FloorCertificate {
  unsigned n;
  long r;
  Rational lo, hi;        // enclosure of e^(1/r) r^n n! (+ 1/2 when r < 0)
  Integer floor_value;    // certified floor of the enclosed quantity
  Integer closed_value;   // a(n, r)
  bool pass;
  unsigned terms;         // series terms that sufficed to separate the floor
  std::string to_json() const;
};

// n >= 1. Tightens the enclosure until the floor is determined; throws a
// precision error if the interval refuses to separate (it cannot, the
// remainder term is strictly interior, but the guard stays).
FloorCertificate verify_floor_formula(unsigned n, long r);

// Floor of e^(1/r) r^n n! (+1/2 for r < 0) certified by interval arithmetic
// alone, valid for n >= 0; used by the p-adic floor check.
Integer certified_floor(unsigned n, long r);

struct WreathElement {
  std::vector<unsigned> colors;  // size n, entries in [0, r)
  std::vector<unsigned> perm;    // one-line, 1-based
};
struct WreathArrangement {
  std::vector<unsigned> subset;  // increasing
  WreathElement element;         // colors/perm over the subset positions
};

// Deterministic order: colors ascending lexicographically (first position
// most significant), permutations in lexicographic rank order within each
// coloring; arrangements iterate subsets by ascending bitmask (bit i =
// element i+1) outermost.
void stream_wreath_derangements(unsigned n, unsigned r, uint64_t budget,
                                const std::function<void(const WreathElement&)>& emit);
void stream_wreath_arrangements(unsigned n, unsigned r, uint64_t budget,
                                const std::function<void(const WreathArrangement&)>& emit);

}  // namespace igp::combinat
