#include "core/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

namespace igp::combinat {

CycleLengthSet::CycleLengthSet(std::function<bool(uint64_t)> member, uint64_t bound,
                               std::string desc)
    : member_(std::move(member)), bound_(bound), desc_(std::move(desc)) {
  if (bound_ == 0) throw InvalidArgumentError("cycle-length set: bound must be positive");
}

bool CycleLengthSet::contains(uint64_t k) const {
  if (k == 0) throw InvalidArgumentError("cycle-length set: lengths start at 1");
  if (k > bound_)
    throw InvalidArgumentError("cycle-length set: query beyond the declared bound");
  return member_(k);
}

namespace {

bool is_square(uint64_t k) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(k)));
  for (uint64_t c = (r > 1 ? r - 1 : 0); c <= r + 1; ++c)
    if (c * c == k) return true;
  return false;
}

bool is_prime_u64(uint64_t k) {
  if (k < 2) return false;
  for (uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

bool is_power_of(uint64_t k, unsigned long ell) {
  while (k % ell == 0) k /= ell;
  return k == 1;
}

}  // namespace

CycleLengthSet CycleLengthSet::squares(uint64_t bound) {
  return CycleLengthSet(is_square, bound, "squares");
}
CycleLengthSet CycleLengthSet::non_squares(uint64_t bound) {
  return CycleLengthSet([](uint64_t k) { return !is_square(k); }, bound, "non-squares");
}
CycleLengthSet CycleLengthSet::primes(uint64_t bound) {
  return CycleLengthSet(is_prime_u64, bound, "primes");
}
CycleLengthSet CycleLengthSet::non_primes(uint64_t bound) {
  return CycleLengthSet([](uint64_t k) { return !is_prime_u64(k); }, bound, "non-primes");
}
CycleLengthSet CycleLengthSet::powers(unsigned long ell, uint64_t bound) {
  if (ell < 2) throw InvalidArgumentError("powers preset: base must be at least 2");
  return CycleLengthSet([ell](uint64_t k) { return is_power_of(k, ell); }, bound,
                        "powers:" + std::to_string(ell));
}
CycleLengthSet CycleLengthSet::proper_powers(unsigned long ell, uint64_t bound) {
  if (ell < 2) throw InvalidArgumentError("proper-powers preset: base must be at least 2");
  return CycleLengthSet([ell](uint64_t k) { return k > 1 && is_power_of(k, ell); }, bound,
                        "proper-powers:" + std::to_string(ell));
}
CycleLengthSet CycleLengthSet::complement_powers(unsigned long ell, uint64_t bound) {
  if (ell < 2)
    throw InvalidArgumentError("complement-powers preset: base must be at least 2");
  return CycleLengthSet([ell](uint64_t k) { return !is_power_of(k, ell); }, bound,
                        "complement-powers:" + std::to_string(ell));
}
CycleLengthSet CycleLengthSet::derangements(uint64_t bound) {
  return CycleLengthSet([](uint64_t k) { return k >= 2; }, bound, "derangements");
}
CycleLengthSet CycleLengthSet::all(uint64_t bound) {
  return CycleLengthSet([](uint64_t) { return true; }, bound, "all");
}
CycleLengthSet CycleLengthSet::none(uint64_t bound) {
  return CycleLengthSet([](uint64_t) { return false; }, bound, "none");
}
CycleLengthSet CycleLengthSet::explicit_set(std::vector<uint64_t> members, uint64_t bound) {
  for (uint64_t m : members)
    if (m == 0) throw InvalidArgumentError("explicit preset: lengths start at 1");
  std::sort(members.begin(), members.end());
  std::string desc = "explicit:";
  for (size_t i = 0; i < members.size(); ++i)
    desc += (i ? "," : "") + std::to_string(members[i]);
  return CycleLengthSet(
      [members](uint64_t k) {
        return std::binary_search(members.begin(), members.end(), k);
      },
      bound, desc);
}

CycleLengthSet CycleLengthSet::preset(const std::string& name, uint64_t bound) {
  auto with_param = [&](const std::string& prefix) -> std::optional<unsigned long> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string arg = name.substr(prefix.size());
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("preset parameter must be a positive integer: " + name);
    return std::stoul(arg);
  };
  if (name == "squares") return squares(bound);
  if (name == "non-squares") return non_squares(bound);
  if (name == "primes") return primes(bound);
  if (name == "non-primes") return non_primes(bound);
  if (name == "derangements") return derangements(bound);
  if (name == "all") return all(bound);
  if (name == "none") return none(bound);
  if (auto ell = with_param("powers:")) return powers(*ell, bound);
  if (auto ell = with_param("proper-powers:")) return proper_powers(*ell, bound);
  if (auto ell = with_param("complement-powers:")) return complement_powers(*ell, bound);
  if (name.rfind("explicit:", 0) == 0) {
    std::vector<uint64_t> members;
    std::string rest = name.substr(9);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      std::string tok = rest.substr(pos, comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("explicit preset: bad member \"" + tok + "\"");
      members.push_back(std::stoull(tok));
      pos = comma + 1;
    }
    return explicit_set(std::move(members), bound);
  }
  throw ParseError("unknown cycle-length preset: " + name);
}

Rational a_closed(unsigned n, const Rational& r) {
  // sum_k binom(n,k) k! r^k with binom(n,k) k! accumulated as the falling
  // factorial n (n-1) ... (n-k+1).
  Rational acc = 1, term = 1;
  for (unsigned k = 1; k <= n; ++k) {
    term *= Rational(Integer(n - k + 1)) * r;
    acc += term;
  }
  return acc;
}

namespace {

void check_wreath_args(unsigned /*n*/, unsigned r) {
  // n = 0 is legal: the single empty element is vacuously a derangement and
  // the empty subset carries the one empty arrangement.
  if (r == 0)
    throw InvalidArgumentError("wreath enumeration: r must be positive");
}

// r^n * n! as a big integer for the budget guard.
Integer wreath_order(unsigned n, unsigned r) {
  Integer o;
  mpz_ui_pow_ui(o.get_mpz_t(), r, n);
  return o * exact::factorial(n);
}

void check_budget(const Integer& work, uint64_t budget, const char* who) {
  if (work > Integer(static_cast<unsigned long>(budget)))
    throw BudgetError(std::string(who) + ": enumeration exceeds the work budget");
}

// Advance a base-r odometer; returns false after the last combination.
bool next_coloring(std::vector<unsigned>& colors, unsigned r) {
  for (size_t i = colors.size(); i-- > 0;) {
    if (++colors[i] < r) return true;
    colors[i] = 0;
  }
  return false;
}

bool has_colored_fixed_point(const std::vector<unsigned>& colors,
                             const std::vector<unsigned>& perm) {
  for (size_t m = 0; m < perm.size(); ++m)
    if (perm[m] == m + 1 && colors[m] == 0) return true;
  return false;
}

}  // namespace

void stream_wreath_derangements(unsigned n, unsigned r, uint64_t budget,
                                const std::function<void(const WreathElement&)>& emit) {
  check_wreath_args(n, r);
  check_budget(wreath_order(n, r), budget, "wreath derangements");
  std::vector<unsigned> colors(n, 0);
  do {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
      if (!has_colored_fixed_point(colors, perm)) emit({colors, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (next_coloring(colors, r));
}

uint64_t count_wreath_derangements(unsigned n, unsigned r, uint64_t budget) {
  uint64_t count = 0;
  stream_wreath_derangements(n, r, budget, [&](const WreathElement&) { ++count; });
  return count;
}

void stream_wreath_arrangements(unsigned n, unsigned r, uint64_t budget,
                                const std::function<void(const WreathArrangement&)>& emit) {
  check_wreath_args(n, r);
  // Total element count is a(n, r); guard on it directly.
  Rational total = a_closed(n, Rational(Integer(static_cast<unsigned long>(r))));
  check_budget(total.numerator(), budget, "wreath arrangements");

  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    std::vector<unsigned> subset;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (uint64_t(1) << i)) subset.push_back(i + 1);
    const size_t k = subset.size();
    std::vector<unsigned> colors(k, 0);
    bool more_colors = true;
    while (more_colors) {
      std::vector<unsigned> perm(k);
      std::iota(perm.begin(), perm.end(), 1u);
      do {
        emit({subset, {colors, perm}});
      } while (std::next_permutation(perm.begin(), perm.end()));
      more_colors = k > 0 && next_coloring(colors, r);
    }
  }
}

uint64_t count_wreath_arrangements(unsigned n, unsigned r, uint64_t budget) {
  uint64_t count = 0;
  stream_wreath_arrangements(n, r, budget, [&](const WreathArrangement&) { ++count; });
  return count;
}

std::vector<unsigned> cycle_type(const std::vector<unsigned>& perm) {
  const size_t n = perm.size();
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : perm)
    if (v < 1 || v > n || seen[v])
      throw InvalidArgumentError("cycle_type: not a permutation in one-line form");
    else
      seen[v] = true;
  std::vector<bool> visited(n + 1, false);
  std::vector<unsigned> type;
  for (unsigned start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    unsigned len = 0, cur = start;
    while (!visited[cur]) {
      visited[cur] = true;
      cur = perm[cur - 1];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

Integer count_cycle_restricted(const CycleLengthSet& L, unsigned n, uint64_t budget) {
  if (n == 0) return 1;
  if (L.bound() < n)
    throw InvalidArgumentError("count_cycle_restricted: set bound below n");
  check_budget(exact::factorial(n), budget, "cycle-restricted count");

  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  Integer count = 0;
  do {
    bool ok = true;
    for (unsigned len : cycle_type(perm))
      if (!L.contains(len)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

EGFPrefix egf_cycle_restricted(const CycleLengthSet& L, unsigned K) {
  if (L.bound() < K && K >= 1)
    throw InvalidArgumentError("egf_cycle_restricted: set bound below the degree");
  mvalues::MSeries m;
  m.values.reserve(K);
  for (unsigned k = 1; k <= K; ++k)
    m.values.push_back(L.contains(k) ? Rational(1) : Rational(0));
  return mvalues::zeta_egf(m, K);
}

std::vector<Integer> cycle_restricted_counts(const CycleLengthSet& L, unsigned K) {
  EGFPrefix egf = egf_cycle_restricted(L, K);
  std::vector<Integer> counts;
  counts.reserve(egf.coeffs.size());
  for (const Rational& c : egf.coeffs) {
    if (!c.is_integer())
      throw PrecisionError("cycle_restricted_counts: non-integer coefficient");
    counts.push_back(c.numerator());
  }
  return counts;
}

namespace {

// Enclose e^(1/r) r^n n! (+1/2 for r < 0) and return the interval once its
// floor is unambiguous.
struct FloorEnclosure {
  exact::RationalInterval interval;
  Integer floor_value;
  unsigned terms;
};

FloorEnclosure enclose_floor(unsigned n, long r) {
  if (r == 0) throw InvalidArgumentError("floor formula: r must be nonzero");
  Integer rn;
  mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r < 0 ? -r : r), n);
  if (r < 0 && n % 2 == 1) rn = -rn;
  const Rational scale = Rational(rn * exact::factorial(n));

  for (unsigned terms = 16; terms <= 512; terms *= 2) {
    exact::RationalInterval base = exact::exp_reciprocal_interval(r, terms);
    exact::RationalInterval scaled = base.scaled_by(scale);
    if (r < 0) scaled = scaled.shifted_by(Rational(Integer(1), Integer(2)));
    Integer flo = scaled.lo().floor(), fhi = scaled.hi().floor();
    if (flo == fhi) return {scaled, flo, terms};
  }
  throw PrecisionError("floor formula: enclosure failed to separate the floor");
}

}  // namespace

Integer certified_floor(unsigned n, long r) { return enclose_floor(n, r).floor_value; }

FloorCertificate verify_floor_formula(unsigned n, long r) {
  if (n == 0) throw InvalidArgumentError("verify_floor_formula: n must be positive");
  FloorEnclosure e = enclose_floor(n, r);
  Rational closed = a_closed(n, Rational(Integer(r)));
  FloorCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.lo = e.interval.lo();
  cert.hi = e.interval.hi();
  cert.floor_value = e.floor_value;
  cert.closed_value = closed.numerator();  // integral for integer r
  cert.pass = closed.is_integer() && cert.floor_value == cert.closed_value;
  cert.terms = e.terms;
  return cert;
}

std::string FloorCertificate::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"r\":" << r << ",\"lo\":\"" << lo.str() << "\",\"hi\":\""
     << hi.str() << "\",\"floor\":\"" << floor_value.get_str() << "\",\"closed\":\""
     << closed_value.get_str() << "\",\"pass\":" << (pass ? "true" : "false")
     << ",\"terms\":" << terms << "}";
  return os.str();
}

}  // namespace igp::combinat
