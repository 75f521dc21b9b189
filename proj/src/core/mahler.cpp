#include "core/mahler.hpp"

#include <optional>
#include <sstream>

namespace igp::mahler {

std::vector<Rational> finite_differences(const SequencePrefix& f) {
  if (f.values.empty()) throw InvalidArgumentError("finite_differences: empty prefix");
  const size_t len = f.values.size();
  std::vector<Rational> deltas(len);
  for (size_t n = 0; n < len; ++n) {
    Rational d = 0;
    for (size_t k = 0; k <= n; ++k) {
      Rational t = Rational(exact::binomial(Integer(n), k)) * f.values[k];
      if ((n - k) % 2 == 0) d += t; else d -= t;
    }
    deltas[n] = d;
  }
  return deltas;
}

Rational mahler_reconstruct(const std::vector<Rational>& deltas, unsigned long n) {
  if (deltas.size() <= n)
    throw InvalidArgumentError("mahler_reconstruct: prefix shorter than n+1");
  Rational s = 0;
  for (unsigned long k = 0; k <= n; ++k)
    s += Rational(exact::binomial(Integer(n), k)) * deltas[k];
  return s;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

namespace {

// Valuations with +infinity for zero entries, the lattice the diagnostics
// work in.
using ExtVal = std::optional<Rational>;  // nullopt = +infinity

bool ext_less(const ExtVal& a, const ExtVal& b) {
  if (!b) return a.has_value();  // finite < inf
  if (!a) return false;
  return *a < *b;
}

ExtVal window_min(const std::vector<ExtVal>& v, size_t begin, size_t end) {
  ExtVal m;  // +inf
  for (size_t i = begin; i < end && i < v.size(); ++i)
    if (ext_less(v[i], m)) m = v[i];
  return m;
}

ExtVal window_max(const std::vector<ExtVal>& v, size_t begin, size_t end) {
  bool seen = false;
  ExtVal m;
  for (size_t i = begin; i < end && i < v.size(); ++i) {
    if (!seen || ext_less(m, v[i])) m = v[i];
    seen = true;
  }
  return m;
}

// Windowed-minimum trend rule for "statistic tends to +infinity" evidence.
Verdict limit_verdict(const std::vector<ExtVal>& stat) {
  const size_t n = stat.size();
  const size_t half = n / 2;
  ExtVal m1 = window_min(stat, 0, half);
  ExtVal m2 = window_min(stat, half, n);
  if (!m2) return Verdict::Pass;                 // tail identically infinite
  if (ext_less(m1, m2)) return Verdict::Pass;    // minima grew
  if (ext_less(m2, m1)) return Verdict::Fail;    // minima fell
  // Equal minima: a tail that never rises above the floor is a refutation
  // in evidence; a tail with some rise is genuinely undecided.
  ExtVal tail_max = window_max(stat, half, n);
  if (!ext_less(m2, tail_max)) return Verdict::Fail;
  return Verdict::Inconclusive;
}

std::string ext_str(const ExtVal& v) { return v ? v->str() : "inf"; }

}  // namespace

RegularityReport classify_regularity(const SequencePrefix& f, unsigned long p) {
  if (!exact::is_prime(p))
    throw InvalidArgumentError("classify_regularity: p must be prime");
  if (f.values.size() < 8)
    throw InvalidArgumentError("classify_regularity: prefix too short (need 8 values)");

  std::vector<Rational> deltas = finite_differences(f);
  const size_t len = deltas.size();

  std::vector<ExtVal> vals(len);  // v_p(Delta_n), +inf at zeros
  for (size_t n = 0; n < len; ++n)
    if (!deltas[n].is_zero()) vals[n] = Rational(Integer(exact::vp(deltas[n], p)));

  RegularityReport rep;
  rep.p = p;
  rep.prefix_len = len;

  // Continuity: v_p(Delta_n) -> infinity.
  for (size_t n = 0; n < len; ++n) rep.continuous.statistic.push_back(ext_str(vals[n]));
  rep.continuous.verdict = limit_verdict(vals);

  // Metric map: slack floor(log_p n) - v_p(Delta_n) must stay <= 0. The sup
  // over a finite prefix is exact, so a positive slack refutes outright.
  {
    bool violated = false;
    for (size_t n = 1; n < len; ++n) {
      if (!vals[n]) {
        rep.metric_map.statistic.push_back("-inf");
        continue;
      }
      long fl = 0;
      for (Integer pw(p); pw <= static_cast<unsigned long>(n); pw *= p) ++fl;
      Rational slack = Rational(Integer(fl)) - *vals[n];
      rep.metric_map.statistic.push_back(slack.str());
      if (slack > 0) violated = true;
    }
    rep.metric_map.verdict = violated ? Verdict::Fail : Verdict::Pass;
  }

  // Analyticity: v_p(Delta_n / n!) -> infinity.
  {
    std::vector<ExtVal> stat(len);
    for (size_t n = 0; n < len; ++n)
      if (vals[n])
        stat[n] = *vals[n] - Rational(exact::vp_factorial(Integer(n), p));
    for (size_t n = 0; n < len; ++n) rep.analytic.statistic.push_back(ext_str(stat[n]));
    rep.analytic.verdict = limit_verdict(stat);
  }

  // Local analyticity: liminf v_p(Delta_n)/n > 0; judged by the tail-window
  // minimum of the exact ratio.
  {
    std::vector<ExtVal> stat;
    for (size_t n = 1; n < len; ++n) {
      if (vals[n])
        stat.push_back(*vals[n] / Rational(Integer(n)));
      else
        stat.push_back(std::nullopt);
      rep.locally_analytic.statistic.push_back(ext_str(stat.back()));
    }
    ExtVal tail = window_min(stat, stat.size() / 2, stat.size());
    rep.locally_analytic.verdict =
        (!tail || *tail > 0) ? Verdict::Pass : Verdict::Fail;
  }

  return rep;
}

std::string RegularityReport::to_json() const {
  auto emit = [](std::ostringstream& os, const char* name, const CriterionRecord& c) {
    os << "\"" << name << "\":{\"statistic\":[";
    for (size_t i = 0; i < c.statistic.size(); ++i) {
      if (i) os << ",";
      os << "\"" << c.statistic[i] << "\"";
    }
    os << "],\"verdict\":\"" << verdict_name(c.verdict) << "\"}";
  };
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"prefix_len\":" << prefix_len << ",\"diagnostic\":true,";
  emit(os, "continuous", continuous);
  os << ",";
  emit(os, "metric_map", metric_map);
  os << ",";
  emit(os, "analytic", analytic);
  os << ",";
  emit(os, "locally_analytic", locally_analytic);
  os << "}";
  return os.str();
}

PadicInt mahler_eval(const std::vector<Rational>& deltas, const PadicInt& y,
                     const std::function<Rational(size_t)>& term_bound) {
  if (deltas.empty()) throw InvalidArgumentError("mahler_eval: empty coefficient list");
  const unsigned N = y.precision();
  const Rational target{Integer(static_cast<unsigned long>(N))};

  // First index whose certified bound reaches N; all later terms vanish mod
  // p^N because the bound is nondecreasing.
  size_t stop = deltas.size();
  for (size_t k = 0; k < deltas.size(); ++k) {
    if (term_bound(k) >= target) {
      stop = k;
      break;
    }
  }
  if (stop == deltas.size())
    throw PrecisionError("mahler_eval: term bound never reaches the working precision");

  const padic::PadicContext ctx{y.prime(), N};
  PadicInt sum(ctx, 0), falling(ctx, 1);
  for (size_t k = 0; k < stop; ++k) {
    if (k > 0) falling = falling * (y - PadicInt(ctx, Integer(k - 1)));
    if (deltas[k].is_zero()) continue;
    Rational coeff = deltas[k] / Rational(exact::factorial(k));
    if (exact::vp(coeff, y.prime()) < 0)
      throw DomainError("mahler_eval: Delta_k / k! is not a p-adic integer");
    sum = sum + PadicInt::from_rational(coeff, ctx) * falling;
  }
  return sum;
}

}  // namespace igp::mahler
