#include <doctest.h>

#include <random>
#include <string>

#include "core/combinat.hpp"
#include "core/exact.hpp"
#include "core/mahler.hpp"
#include "core/padic.hpp"

using namespace igp::mahler;
using igp::exact::Integer;
using igp::exact::Rational;
using igp::exact::factorial;
using igp::exact::vp_factorial;

namespace {

SequencePrefix a_prefix(long r, unsigned K) {
  SequencePrefix f;
  for (unsigned n = 0; n <= K; ++n)
    f.values.push_back(igp::combinat::a_closed(n, Rational(r)));
  return f;
}

}  // namespace

TEST_CASE("finite differences of sum_k binom(n,k) k! r^k are r^k k!") {
  auto deltas = finite_differences(a_prefix(2, 12));
  REQUIRE(deltas.size() == 13);
  for (unsigned k = 0; k <= 12; ++k) {
    Integer want = factorial(Integer(k));
    mpz_mul_2exp(want.get_mpz_t(), want.get_mpz_t(), k);  // * 2^k
    CHECK(deltas[k] == Rational(want));
  }
}

TEST_CASE("differences of a constant collapse to the leading term") {
  SequencePrefix ones;
  for (int i = 0; i < 10; ++i) ones.values.push_back(Rational(1));
  auto d = finite_differences(ones);
  CHECK(d[0] == Rational(1));
  for (size_t i = 1; i < d.size(); ++i) CHECK(d[i] == Rational(0));
  CHECK_THROWS_AS(finite_differences(SequencePrefix{}), igp::InvalidArgumentError);
}

TEST_CASE("reconstruction inverts differencing on random rational prefixes") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 20; ++trial) {
    SequencePrefix f;
    for (int i = 0; i < 11; ++i)
      f.values.push_back(Rational(num(rng), den(rng)));
    auto d = finite_differences(f);
    for (unsigned long n = 0; n <= 10; ++n)
      CHECK(mahler_reconstruct(d, n) == f.values[n]);
  }
  CHECK_THROWS_AS(mahler_reconstruct({Rational(1)}, 1), igp::InvalidArgumentError);
}

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(Verdict::Pass)) == "pass");
  CHECK(std::string(verdict_name(Verdict::Fail)) == "fail");
  CHECK(std::string(verdict_name(Verdict::Inconclusive)) == "inconclusive");
}

TEST_CASE("regularity diagnostics: differences r^n n! with v_p(r) = 1") {
  // Delta_n = 5^n n! at p = 5: valuations grow linearly, so every
  // criterion up to local analyticity should report pass.
  auto rep = classify_regularity(a_prefix(5, 40), 5);
  CHECK(rep.p == 5);
  CHECK(rep.prefix_len == 41);
  CHECK(rep.continuous.verdict == Verdict::Pass);
  CHECK(rep.metric_map.verdict == Verdict::Pass);
  CHECK(rep.analytic.verdict == Verdict::Pass);
  CHECK(rep.locally_analytic.verdict == Verdict::Pass);

  // statistic freezes: v_5(Delta_n) = n + v_5(n!)
  CHECK(rep.continuous.statistic[0] == "0");
  CHECK(rep.continuous.statistic[1] == "1");
  CHECK(rep.continuous.statistic[4] == "4");
  CHECK(rep.continuous.statistic[5] == "6");  // 5 + v_5(5!) = 6
  // metric statistic starts at n = 1: floor(log_5 n) - v_5(Delta_n)
  CHECK(rep.metric_map.statistic[0] == "-1");
  CHECK(rep.metric_map.statistic[4] == "-5");  // n = 5: 1 - 6
  // locally-analytic statistic is v_5(Delta_n)/n, exact
  CHECK(rep.locally_analytic.statistic[0] == "1");
  CHECK(rep.locally_analytic.statistic[4] == "6/5");  // n = 5
}

TEST_CASE("regularity diagnostics: differences n! at p = 5") {
  // Delta_n = n!: continuous and a metric map, but Delta_n/n! = 1 has
  // constant valuation 0 (analytic fails) while v_5(n!)/n tends to 1/4
  // (locally analytic passes).
  auto rep = classify_regularity(a_prefix(1, 40), 5);
  CHECK(rep.continuous.verdict == Verdict::Pass);
  CHECK(rep.metric_map.verdict == Verdict::Pass);
  CHECK(rep.analytic.verdict == Verdict::Fail);
  CHECK(rep.locally_analytic.verdict == Verdict::Pass);
  CHECK(rep.analytic.statistic[7] == "0");
}

TEST_CASE("regularity diagnostics: n! / 5^n fails everything at p = 5") {
  SequencePrefix f;
  Rational pw(1);
  Integer fact = 1;
  for (unsigned n = 0; n <= 40; ++n) {
    if (n) fact *= n;
    f.values.push_back(Rational(fact) * pw);
    pw /= Rational(5);
  }
  auto rep = classify_regularity(f, 5);
  CHECK(rep.continuous.verdict == Verdict::Fail);
  CHECK(rep.metric_map.verdict == Verdict::Fail);
  CHECK(rep.analytic.verdict == Verdict::Fail);
  CHECK(rep.locally_analytic.verdict == Verdict::Fail);
}

TEST_CASE("regularity input validation") {
  SequencePrefix seven;
  for (int i = 0; i < 7; ++i) seven.values.push_back(Rational(i));
  CHECK_THROWS_AS(classify_regularity(seven, 5), igp::InvalidArgumentError);
  CHECK_THROWS_AS(classify_regularity(a_prefix(1, 10), 4), igp::InvalidArgumentError);
}

TEST_CASE("regularity report JSON skeleton") {
  auto rep = classify_regularity(a_prefix(5, 40), 5);
  std::string js = rep.to_json();
  CHECK(js.find("{\"p\":5,\"prefix_len\":41,\"diagnostic\":true,") == 0);
  CHECK(js.find("\"continuous\":{\"statistic\":[\"0\",\"1\",") != std::string::npos);
  CHECK(js.find("\"verdict\":\"pass\"") != std::string::npos);
  CHECK(js.find("\"locally_analytic\":") != std::string::npos);
}

TEST_CASE("interpolation at a p-adic point agrees with direct evaluation") {
  // f(n) = sum_k binom(n,k) k! 5^k has Delta_k = 5^k k!, so term k of the
  // Mahler series is bounded below by k + v_5(k!).
  auto deltas = finite_differences(a_prefix(5, 40));
  igp::padic::PadicInt y(5, 4, 7);
  auto bound = [](size_t k) { return Rational(Integer(k) + vp_factorial(Integer(k), 5)); };
  auto v = mahler_eval(deltas, y, bound);
  CHECK(v.residue() == 461);
  auto direct = igp::padic::PadicInt::from_rational(
      igp::combinat::a_closed(7, Rational(5)), igp::padic::PadicContext(5, 4));
  CHECK(v == direct);

  // Same function evaluated at y = 12, cross-checked directly.
  igp::padic::PadicInt y2(5, 4, 12);
  auto v2 = mahler_eval(deltas, y2, bound);
  auto direct2 = igp::padic::PadicInt::from_rational(
      igp::combinat::a_closed(12, Rational(5)), igp::padic::PadicContext(5, 4));
  CHECK(v2 == direct2);
}

TEST_CASE("interpolation failure modes") {
  // A bound stuck below the working precision exhausts the prefix.
  auto deltas = finite_differences(a_prefix(1, 12));
  igp::padic::PadicInt y(5, 6, 7);
  CHECK_THROWS_AS(mahler_eval(deltas, y, [](size_t) { return Rational(0); }),
                  igp::PrecisionError);
  // Delta_k / k! outside Z_p is rejected (bound reaches the precision inside
  // the prefix, so the offending term is actually evaluated).
  std::vector<Rational> bad = {Rational(1), Rational(1, 5), Rational(1, 5)};
  CHECK_THROWS_AS(
      mahler_eval(bad, y, [](size_t k) { return Rational(Integer(3 * k)); }),
      igp::DomainError);
  CHECK_THROWS_AS(mahler_eval({}, y, [](size_t) { return Rational(10); }),
                  igp::InvalidArgumentError);
}
