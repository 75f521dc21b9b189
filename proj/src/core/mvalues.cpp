#include "core/mvalues.hpp"

#include <sstream>

namespace igp::mvalues {

namespace {

void require_normalized(const SequencePrefix& f, const char* who) {
  if (f.values.empty())
    throw InvalidArgumentError(std::string(who) + ": empty prefix");
  if (f.values[0] != Rational(1))
    throw DomainError(std::string(who) + ": sequence must start with f(0) = 1");
}

}  // namespace

MSeries m_from_f(const SequencePrefix& f) {
  require_normalized(f, "m_from_f");
  const size_t K = f.K();
  MSeries m;
  m.values.reserve(K);
  // b_n = f(n)/n! satisfies k b_k = sum_{j=1}^{k} m_j b_{k-j}.
  std::vector<Rational> b(K + 1);
  for (size_t n = 0; n <= K; ++n) b[n] = f.values[n] / Rational(exact::factorial(n));
  for (size_t k = 1; k <= K; ++k) {
    Rational s = Rational(Integer(k)) * b[k];
    for (size_t j = 1; j < k; ++j) s -= m.values[j - 1] * b[k - j];
    m.values.push_back(s);  // b_0 = 1
  }
  return m;
}

namespace {

// Enumerate partitions of k as multiplicity vectors e[1..k], calling visit on
// each. Plain descending-part recursion; p(30) = 5604 so this stays tiny.
void partitions(unsigned k, unsigned max_part, std::vector<unsigned>& mult,
                const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (k == 0) {
    visit(mult);
    return;
  }
  for (unsigned part = std::min(k, max_part); part >= 1; --part) {
    ++mult[part];
    partitions(k - part, part, mult, visit);
    --mult[part];
  }
}

}  // namespace

Rational m_from_f_partition(const SequencePrefix& f, unsigned k) {
  require_normalized(f, "m_from_f_partition");
  if (k == 0 || k > f.K())
    throw InvalidArgumentError("m_from_f_partition: k outside the prefix");

  std::vector<Rational> scaled(k + 1);  // f(j)/j!
  for (unsigned j = 1; j <= k; ++j)
    scaled[j] = f.values[j] / Rational(exact::factorial(j));

  Rational total = 0;
  std::vector<unsigned> mult(k + 1, 0);
  partitions(k, k, mult, [&](const std::vector<unsigned>& e) {
    unsigned len = 0;
    for (unsigned j = 1; j <= k; ++j) len += e[j];
    // multinomial(len; e_1,...,e_k) = len! / prod e_j!
    Rational coeff{exact::factorial(len)};
    for (unsigned j = 1; j <= k; ++j)
      if (e[j]) coeff /= Rational(exact::factorial(e[j]));
    Rational prod = 1;
    for (unsigned j = 1; j <= k; ++j)
      for (unsigned t = 0; t < e[j]; ++t) prod *= scaled[j];
    Rational term = coeff * prod / Rational(Integer(len));
    if (len % 2 == 0) total -= term; else total += term;
  });
  return total * Rational(Integer(k));
}

EGFPrefix zeta_egf(const MSeries& m, unsigned K) {
  if (K > m.values.size())
    throw InvalidArgumentError("zeta_egf: degree exceeds the m-value prefix");
  // b = exp(A) with A = sum m_k X^k / k obeys n b_n = sum_{j<=n} m_j b_{n-j}.
  std::vector<Rational> b(K + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= K; ++n) {
    Rational s = 0;
    for (unsigned j = 1; j <= n; ++j) s += m.values[j - 1] * b[n - j];
    b[n] = s / Rational(Integer(n));
  }
  EGFPrefix out;
  out.coeffs.reserve(K + 1);
  for (unsigned n = 0; n <= K; ++n)
    out.coeffs.push_back(b[n] * Rational(exact::factorial(n)));
  return out;
}

std::optional<Rational> egf_norm(const EGFPrefix& c, unsigned long p) {
  std::optional<Rational> best;
  for (const Rational& x : c.coeffs) {
    if (x.is_zero()) continue;
    Rational v{Integer(exact::vp(x, p))};
    if (!best || v < *best) best = v;
  }
  return best;
}

EGFPrefix egf_product(const EGFPrefix& a, const EGFPrefix& b) {
  if (a.coeffs.empty() || b.coeffs.empty())
    throw InvalidArgumentError("egf_product: empty operand");
  const size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  EGFPrefix out;
  out.coeffs.resize(len);
  for (size_t n = 0; n < len; ++n) {
    Rational s = 0;
    for (size_t k = 0; k <= n; ++k)
      s += Rational(exact::binomial(Integer(n), k)) * a.coeffs[n - k] * b.coeffs[k];
    out.coeffs[n] = s;
  }
  return out;
}

CriterionVerdict continuity_criterion(const SequencePrefix& f, unsigned long p) {
  if (!exact::is_prime(p))
    throw InvalidArgumentError("continuity_criterion: p must be prime");
  require_normalized(f, "continuity_criterion");
  if (f.K() < p)
    throw InvalidArgumentError("continuity_criterion: prefix too short (need K >= p)");

  MSeries m = m_from_f(f);
  CriterionVerdict v;
  v.p = p;
  v.m1 = m.m(1);
  v.mp = m.m(p);
  for (unsigned k = 2; k <= f.K(); ++k)
    if (!m.m(k).is_zero() && exact::vp(m.m(k), p) < 0)
      v.integrality_violations.emplace_back(k, m.m(k));

  Rational diff = v.mp - v.m1 + Rational(1);
  if (!diff.is_zero() && exact::vp(diff, p) < 0) {
    v.congruence_residue.reset();
  } else {
    padic::PadicContext ctx{p, 1};
    v.congruence_residue =
        padic::PadicInt::from_rational(diff, ctx).residue().get_ui();
  }

  if (!v.integrality_violations.empty())
    v.verdict = CriterionVerdict::Kind::Inapplicable;
  else if (v.congruence_residue && *v.congruence_residue == 0)
    v.verdict = CriterionVerdict::Kind::Continuous;
  else
    v.verdict = CriterionVerdict::Kind::NotContinuous;
  return v;
}

std::string CriterionVerdict::to_json() const {
  const char* name = verdict == Kind::Continuous        ? "continuous"
                     : verdict == Kind::NotContinuous   ? "not-continuous"
                                                        : "criterion-inapplicable";
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"verdict\":\"" << name << "\",\"m1\":\"" << m1.str()
     << "\",\"mp\":\"" << mp.str() << "\",\"residue\":";
  if (congruence_residue)
    os << "\"" << *congruence_residue << "\"";
  else
    os << "null";
  os << ",\"violations\":[";
  for (size_t i = 0; i < integrality_violations.size(); ++i) {
    if (i) os << ",";
    os << "{\"k\":" << integrality_violations[i].first << ",\"m\":\""
       << integrality_violations[i].second.str() << "\"}";
  }
  os << "]}";
  return os.str();
}

SequencePrefix morita_f(unsigned long p, size_t len) {
  if (!exact::is_prime(p)) throw InvalidArgumentError("morita_f: p must be prime");
  if (len == 0) throw InvalidArgumentError("morita_f: empty prefix requested");
  SequencePrefix f;
  f.values.reserve(len);
  Integer prod = 1;
  for (size_t n = 0; n < len; ++n) {
    if (n > 0 && n % p != 0) prod *= Integer(static_cast<unsigned long>(n));
    Rational val{prod};
    f.values.push_back(n % 2 == 0 ? val : -val);
  }
  return f;
}

SequencePrefix artin_hasse_f(unsigned long ell, size_t len) {
  if (!exact::is_prime(ell))
    throw InvalidArgumentError("artin_hasse_f: the parameter must be prime");
  if (len == 0) throw InvalidArgumentError("artin_hasse_f: empty prefix requested");
  MSeries m;
  m.values.resize(len - 1, Rational(0));
  for (Integer pw(1); pw <= Integer(static_cast<unsigned long>(m.values.size())); pw *= ell)
    m.values[pw.get_ui() - 1] = 1;
  EGFPrefix egf = zeta_egf(m, static_cast<unsigned>(len - 1));
  SequencePrefix f;
  f.values = std::move(egf.coeffs);
  return f;
}

}  // namespace igp::mvalues
