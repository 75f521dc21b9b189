// Exercises the shared library strictly through its C interface.
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "igp.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  igp_free_string(s);
  return out;
}

struct SeqGuard {
  igp_seq* s = nullptr;
  ~SeqGuard() { igp_seq_free(s); }
};
struct PadicGuard {
  igp_padic* x = nullptr;
  ~PadicGuard() { igp_padic_free(x); }
};
struct LsetGuard {
  igp_lset* L = nullptr;
  ~LsetGuard() { igp_lset_free(L); }
};

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::string(igp_version()) == "0.1.0");
  igp_seq* s = nullptr;
  CHECK(igp_seq_parse("1,2,oops", &s) == IGP_PARSE);
  CHECK(s == nullptr);
  CHECK(std::string(igp_last_error()).size() > 0);
}

TEST_CASE("sequence handles") {
  SeqGuard g;
  REQUIRE(igp_seq_parse(" 1, 0 , 1 ,-2, 9/2 ", &g.s) == IGP_OK);
  CHECK(igp_seq_len(g.s) == 5);
  char* item = nullptr;
  REQUIRE(igp_seq_get(g.s, 4, &item) == IGP_OK);
  CHECK(take(item) == "9/2");
  CHECK(igp_seq_get(g.s, 5, &item) == IGP_INVALID_ARGUMENT);
  REQUIRE(igp_seq_push(g.s, "7/3") == IGP_OK);
  CHECK(igp_seq_len(g.s) == 6);
  CHECK(igp_seq_push(g.s, "x") == IGP_PARSE);

  SeqGuard alt;
  REQUIRE(igp_seq_alternated(g.s, &alt.s) == IGP_OK);
  char* a1 = nullptr;
  REQUIRE(igp_seq_get(alt.s, 1, &a1) == IGP_OK);
  CHECK(take(a1) == "0");
  char* a5 = nullptr;
  REQUIRE(igp_seq_get(alt.s, 5, &a5) == IGP_OK);
  CHECK(take(a5) == "-7/3");

  CHECK(igp_seq_parse(nullptr, &g.s) == IGP_INVALID_ARGUMENT);
  CHECK(igp_seq_parse("1,2", nullptr) == IGP_INVALID_ARGUMENT);
  CHECK(igp_seq_parse("", &g.s) == IGP_PARSE);
}

TEST_CASE("built-in sequences") {
  SeqGuard m;
  REQUIRE(igp_seq_morita(3, 10, &m.s) == IGP_OK);
  const char* want[] = {"1", "-1", "2", "-2", "8", "-40", "40", "-280", "2240", "-2240"};
  for (size_t i = 0; i < 10; ++i) {
    char* v = nullptr;
    REQUIRE(igp_seq_get(m.s, i, &v) == IGP_OK);
    CHECK(take(v) == want[i]);
  }
  SeqGuard ah;
  REQUIRE(igp_seq_artin_hasse(3, 10, &ah.s) == IGP_OK);
  char* v9 = nullptr;
  REQUIRE(igp_seq_get(ah.s, 9, &v9) == IGP_OK);
  CHECK(take(v9) == "46089");
  igp_seq* bad = nullptr;
  CHECK(igp_seq_morita(4, 5, &bad) == IGP_INVALID_ARGUMENT);
  CHECK(igp_seq_artin_hasse(6, 5, &bad) == IGP_INVALID_ARGUMENT);
}

TEST_CASE("m-values through the C boundary") {
  SeqGuard f;
  REQUIRE(igp_seq_parse("1,0,1,-2,9,-44", &f.s) == IGP_OK);
  SeqGuard m;
  REQUIRE(igp_mvalues(f.s, 5, &m.s) == IGP_OK);
  const char* want[] = {"0", "1", "-1", "1", "-1"};
  REQUIRE(igp_seq_len(m.s) == 5);
  for (size_t i = 0; i < 5; ++i) {
    char* v = nullptr;
    REQUIRE(igp_seq_get(m.s, i, &v) == IGP_OK);
    CHECK(take(v) == want[i]);
  }
  // partition route agrees
  for (unsigned k = 1; k <= 5; ++k) {
    char* v = nullptr;
    REQUIRE(igp_mvalue_partition_route(f.s, k, &v) == IGP_OK);
    CHECK(take(v) == want[k - 1]);
  }
  igp_seq* out = nullptr;
  CHECK(igp_mvalues(f.s, 0, &out) == IGP_INVALID_ARGUMENT);
  CHECK(igp_mvalues(f.s, 6, &out) == IGP_INVALID_ARGUMENT);
  SeqGuard notnorm;
  REQUIRE(igp_seq_parse("2,1,1", &notnorm.s) == IGP_OK);
  CHECK(igp_mvalues(notnorm.s, 2, &out) == IGP_DOMAIN);

  // zeta_egf inverts
  SeqGuard egf;
  REQUIRE(igp_zeta_egf(m.s, 5, &egf.s) == IGP_OK);
  REQUIRE(igp_seq_len(egf.s) == 6);
  const char* fw[] = {"1", "0", "1", "-2", "9", "-44"};
  for (size_t i = 0; i < 6; ++i) {
    char* v = nullptr;
    REQUIRE(igp_seq_get(egf.s, i, &v) == IGP_OK);
    CHECK(take(v) == fw[i]);
  }
}

TEST_CASE("continuity criterion JSON") {
  SeqGuard f;
  REQUIRE(igp_seq_morita(3, 10, &f.s) == IGP_OK);
  char* js = nullptr;
  REQUIRE(igp_continuity_criterion(f.s, 3, &js) == IGP_OK);
  CHECK(take(js) ==
        "{\"p\":3,\"verdict\":\"continuous\",\"m1\":\"-1\",\"mp\":\"1\","
        "\"residue\":\"0\",\"violations\":[]}");
  CHECK(igp_continuity_criterion(f.s, 4, &js) == IGP_INVALID_ARGUMENT);
  CHECK(igp_continuity_criterion(f.s, 11, &js) == IGP_INVALID_ARGUMENT);
}

TEST_CASE("regularity report through the C boundary") {
  SeqGuard f;
  REQUIRE(igp_seq_new(&f.s) == IGP_OK);
  for (int n = 0; n <= 12; ++n) {
    char* closed = nullptr;
    REQUIRE(igp_a_closed(static_cast<unsigned>(n), "5", &closed) == IGP_OK);
    std::string v = take(closed);
    REQUIRE(igp_seq_push(f.s, v.c_str()) == IGP_OK);
  }
  char* js = nullptr;
  REQUIRE(igp_classify_regularity(f.s, 5, &js) == IGP_OK);
  std::string out = take(js);
  CHECK(out.find("\"p\":5,\"prefix_len\":13") != std::string::npos);
  CHECK(out.find("\"continuous\":{\"statistic\":[\"0\",\"1\",") != std::string::npos);
}

TEST_CASE("p-adic handles") {
  PadicGuard x;
  REQUIRE(igp_padic_new(5, 2, "1/2", &x.x) == IGP_OK);
  CHECK(igp_padic_prime(x.x) == 5);
  CHECK(igp_padic_precision(x.x) == 2);
  char* res = nullptr;
  REQUIRE(igp_padic_residue(x.x, &res) == IGP_OK);
  CHECK(take(res) == "13");
  char* js = nullptr;
  REQUIRE(igp_padic_json(x.x, &js) == IGP_OK);
  CHECK(take(js) == "{\"p\":5,\"precision\":2,\"residue\":\"13\"}");

  igp_padic* bad = nullptr;
  CHECK(igp_padic_new(4, 2, "1", &bad) == IGP_INVALID_ARGUMENT);
  CHECK(igp_padic_new(5, 0, "1", &bad) == IGP_INVALID_ARGUMENT);
  CHECK(igp_padic_new(5, 2, "1/5", &bad) == IGP_DOMAIN);
  CHECK(igp_padic_new(5, 2, "nope", &bad) == IGP_PARSE);

  PadicGuard y;
  REQUIRE(igp_padic_new(5, 4, "-1", &y.x) == IGP_OK);
  char* yres = nullptr;
  REQUIRE(igp_padic_residue(y.x, &yres) == IGP_OK);
  CHECK(take(yres) == "624");

  PadicGuard sum;
  REQUIRE(igp_padic_add(x.x, y.x, &sum.x) == IGP_OK);
  CHECK(igp_padic_precision(sum.x) == 2);
  char* sres = nullptr;
  REQUIRE(igp_padic_residue(sum.x, &sres) == IGP_OK);
  CHECK(take(sres) == "12");  // 1/2 - 1 = -1/2 = 12 mod 25

  PadicGuard prod, diff, neg;
  REQUIRE(igp_padic_mul(x.x, y.x, &prod.x) == IGP_OK);
  REQUIRE(igp_padic_sub(x.x, y.x, &diff.x) == IGP_OK);
  REQUIRE(igp_padic_neg(x.x, &neg.x) == IGP_OK);
  char* pres = nullptr;
  REQUIRE(igp_padic_residue(prod.x, &pres) == IGP_OK);
  CHECK(take(pres) == "12");  // -1/2 again
  int eq = 0;
  REQUIRE(igp_padic_equal(prod.x, sum.x, &eq) == IGP_OK);
  CHECK(eq == 1);
  REQUIRE(igp_padic_equal(prod.x, x.x, &eq) == IGP_OK);
  CHECK(eq == 0);
  PadicGuard other;
  REQUIRE(igp_padic_new(7, 2, "1", &other.x) == IGP_OK);
  REQUIRE(igp_padic_equal(x.x, other.x, &eq) == IGP_OK);
  CHECK(eq == 0);

  PadicGuard inv;
  REQUIRE(igp_padic_new(5, 4, "2", &inv.x) == IGP_OK);
  PadicGuard invr;
  REQUIRE(igp_padic_inverse(inv.x, &invr.x) == IGP_OK);
  char* ires = nullptr;
  REQUIRE(igp_padic_residue(invr.x, &ires) == IGP_OK);
  CHECK(take(ires) == "313");
  PadicGuard nonunit;
  REQUIRE(igp_padic_new(5, 4, "10", &nonunit.x) == IGP_OK);
  igp_padic* dead = nullptr;
  CHECK(igp_padic_inverse(nonunit.x, &dead) == IGP_DOMAIN);
}

TEST_CASE("p-adic exponential, logarithm, powers") {
  PadicGuard five;
  REQUIRE(igp_padic_new(5, 4, "5", &five.x) == IGP_OK);
  PadicGuard e5;
  REQUIRE(igp_padic_exp(five.x, &e5.x) == IGP_OK);
  char* res = nullptr;
  REQUIRE(igp_padic_residue(e5.x, &res) == IGP_OK);
  CHECK(take(res) == "456");
  PadicGuard back;
  REQUIRE(igp_padic_log(e5.x, &back.x) == IGP_OK);
  int eq = 0;
  REQUIRE(igp_padic_equal(back.x, five.x, &eq) == IGP_OK);
  CHECK(eq == 1);
  igp_padic* dead = nullptr;
  PadicGuard unit;
  REQUIRE(igp_padic_new(5, 4, "2", &unit.x) == IGP_OK);
  CHECK(igp_padic_exp(unit.x, &dead) == IGP_DOMAIN);
  CHECK(igp_padic_log(unit.x, &dead) == IGP_DOMAIN);

  PadicGuard six, three;
  REQUIRE(igp_padic_new(5, 8, "6", &six.x) == IGP_OK);
  REQUIRE(igp_padic_new(5, 8, "3", &three.x) == IGP_OK);
  PadicGuard cube;
  REQUIRE(igp_padic_pow(six.x, three.x, &cube.x) == IGP_OK);
  char* cres = nullptr;
  REQUIRE(igp_padic_residue(cube.x, &cres) == IGP_OK);
  CHECK(take(cres) == "216");
  CHECK(igp_padic_pow(three.x, six.x, &dead) == IGP_DOMAIN);  // 3 != 1 mod 5
}

TEST_CASE("gamma through the C boundary") {
  PadicGuard s, r;
  REQUIRE(igp_padic_new(5, 4, "3", &s.x) == IGP_OK);
  REQUIRE(igp_padic_new(5, 4, "1", &r.x) == IGP_OK);
  PadicGuard g1, g2, g3;
  REQUIRE(igp_gamma_p(s.x, r.x, &g1.x) == IGP_OK);
  REQUIRE(igp_gamma_p_series(s.x, r.x, &g2.x) == IGP_OK);
  REQUIRE(igp_gamma_p_truncexp(2, r.x, &g3.x) == IGP_OK);
  char* res = nullptr;
  REQUIRE(igp_padic_residue(g1.x, &res) == IGP_OK);
  CHECK(take(res) == "405");
  int eq = 0;
  REQUIRE(igp_padic_equal(g1.x, g2.x, &eq) == IGP_OK);
  CHECK(eq == 1);
  REQUIRE(igp_padic_equal(g1.x, g3.x, &eq) == IGP_OK);
  CHECK(eq == 1);

  PadicGuard badr;
  REQUIRE(igp_padic_new(5, 4, "2", &badr.x) == IGP_OK);
  igp_padic* dead = nullptr;
  CHECK(igp_gamma_p(s.x, badr.x, &dead) == IGP_DOMAIN);

  PadicGuard y;
  REQUIRE(igp_padic_new(5, 6, "3", &y.x) == IGP_OK);
  PadicGuard m1;
  REQUIRE(igp_padic_new(5, 6, "-1", &m1.x) == IGP_OK);
  PadicGuard at;
  REQUIRE(igp_a_tilde(y.x, m1.x, &at.x) == IGP_OK);
  char* ares = nullptr;
  REQUIRE(igp_padic_residue(at.x, &ares) == IGP_OK);
  CHECK(take(ares) == "15623");
}

TEST_CASE("gamma report JSON") {
  char* js = nullptr;
  REQUIRE(igp_gamma_report(5, 4, "3", "1", "all", &js) == IGP_OK);
  CHECK(take(js) ==
        "{\"p\":5,\"N\":4,\"s\":\"3\",\"r\":\"1\",\"gamma_p\":\"405\","
        "\"routes_agree\":true}");
  REQUIRE(igp_gamma_report(5, 4, "3", "1", "series", &js) == IGP_OK);
  CHECK(take(js) ==
        "{\"p\":5,\"N\":4,\"s\":\"3\",\"r\":\"1\",\"route\":\"series\","
        "\"gamma_p\":\"405\"}");
  // determinism
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(igp_gamma_report(7, 6, "12", "8", "all", &a) == IGP_OK);
  REQUIRE(igp_gamma_report(7, 6, "12", "8", "all", &b) == IGP_OK);
  CHECK(take(a) == take(b));
  CHECK(igp_gamma_report(5, 4, "3", "2", "all", &js) == IGP_DOMAIN);
  CHECK(igp_gamma_report(5, 4, "3", "1", "sideways", &js) == IGP_INVALID_ARGUMENT);
  CHECK(igp_gamma_report(2, 4, "3", "1", "all", &js) == IGP_DOMAIN);
}

TEST_CASE("consistency and floor reports") {
  char* js = nullptr;
  REQUIRE(igp_classical_consistency(3, 6, 5, 6, &js) == IGP_OK);
  CHECK(take(js).find("\"equal\":true") != std::string::npos);
  REQUIRE(igp_verify_floor_padic(2, 6, 5, 6, &js) == IGP_OK);
  std::string fl = take(js);
  CHECK(fl.find("\"equal\":true") != std::string::npos);
  CHECK(fl.find("\"floor\":85") != std::string::npos);
  CHECK(fl.find("\"lhs\":410") != std::string::npos);
  CHECK(igp_classical_consistency(0, 6, 5, 6, &js) == IGP_INVALID_ARGUMENT);
  CHECK(igp_verify_floor_padic(2, 0, 5, 6, &js) == IGP_INVALID_ARGUMENT);
}

TEST_CASE("zero scan JSON") {
  PadicGuard r;
  REQUIRE(igp_padic_new(5, 6, "6", &r.x) == IGP_OK);
  char* js = nullptr;
  REQUIRE(igp_zero_scan(r.x, 2, 100000000ull, &js) == IGP_OK);
  CHECK(take(js) == "{\"p\":5,\"level\":2,\"zeros\":[\"12\",\"24\"]}");
  CHECK(igp_zero_scan(r.x, 0, 100000000ull, &js) == IGP_INVALID_ARGUMENT);
  CHECK(igp_zero_scan(r.x, 2, 10ull, &js) == IGP_BUDGET);
}

TEST_CASE("cycle-length sets through the C boundary") {
  LsetGuard L;
  REQUIRE(igp_lset_preset("powers:3", 40, &L.L) == IGP_OK);
  int member = 0;
  REQUIRE(igp_lset_contains(L.L, 27, &member) == IGP_OK);
  CHECK(member == 1);
  REQUIRE(igp_lset_contains(L.L, 6, &member) == IGP_OK);
  CHECK(member == 0);
  CHECK(igp_lset_contains(L.L, 0, &member) == IGP_INVALID_ARGUMENT);
  CHECK(igp_lset_contains(L.L, 41, &member) == IGP_INVALID_ARGUMENT);
  char* desc = nullptr;
  REQUIRE(igp_lset_describe(L.L, &desc) == IGP_OK);
  CHECK(take(desc).size() > 0);
  igp_lset* bad = nullptr;
  CHECK(igp_lset_preset("gibberish", 10, &bad) == IGP_PARSE);
}

TEST_CASE("counting through the C boundary") {
  char* closed = nullptr;
  REQUIRE(igp_a_closed(3, "2", &closed) == IGP_OK);
  CHECK(take(closed) == "79");
  REQUIRE(igp_a_closed(2, "1/2", &closed) == IGP_OK);
  CHECK(take(closed) == "5/2");
  CHECK(igp_a_closed(2, "junk", &closed) == IGP_PARSE);

  uint64_t n = 0;
  REQUIRE(igp_wreath_derangements(2, 2, 100000000ull, &n) == IGP_OK);
  CHECK(n == 5);
  REQUIRE(igp_wreath_arrangements(1, 2, 100000000ull, &n) == IGP_OK);
  CHECK(n == 3);
  CHECK(igp_wreath_derangements(20, 5, 100000000ull, &n) == IGP_BUDGET);
  CHECK(igp_wreath_derangements(2, 0, 100000000ull, &n) == IGP_INVALID_ARGUMENT);

  LsetGuard L;
  REQUIRE(igp_lset_preset("powers:3", 16, &L.L) == IGP_OK);
  char* one = nullptr;
  REQUIRE(igp_cycle_restricted_count(L.L, 6, 100000000ull, &one) == IGP_OK);
  CHECK(take(one) == "81");
  char* js = nullptr;
  REQUIRE(igp_cycle_restricted_counts(L.L, 9, &js) == IGP_OK);
  CHECK(take(js) ==
        "[\"1\",\"1\",\"1\",\"3\",\"9\",\"21\",\"81\",\"351\",\"1233\",\"46089\"]");

  REQUIRE(igp_verify_floor(3, -1, &js) == IGP_OK);
  std::string fl = take(js);
  CHECK(fl.find("\"pass\":true") != std::string::npos);
  CHECK(fl.find("\"floor\":\"-2\"") != std::string::npos);
  CHECK(igp_verify_floor(0, 1, &js) == IGP_INVALID_ARGUMENT);
}

TEST_CASE("streaming enumeration emits frozen JSON lines in order") {
  std::vector<std::string> lines;
  auto grab = +[](const char* line, void* user) {
    static_cast<std::vector<std::string>*>(user)->push_back(line);
  };
  REQUIRE(igp_stream_wreath_derangements(2, 2, 100000000ull, grab, &lines) == IGP_OK);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "{\"colors\":[0,0],\"perm\":[2,1]}");
  CHECK(lines[1] == "{\"colors\":[0,1],\"perm\":[2,1]}");
  CHECK(lines[2] == "{\"colors\":[1,0],\"perm\":[2,1]}");
  CHECK(lines[3] == "{\"colors\":[1,1],\"perm\":[1,2]}");
  CHECK(lines[4] == "{\"colors\":[1,1],\"perm\":[2,1]}");

  lines.clear();
  REQUIRE(igp_stream_wreath_arrangements(1, 2, 100000000ull, grab, &lines) == IGP_OK);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "{\"subset\":[],\"colors\":[],\"perm\":[]}");
  CHECK(lines[1] == "{\"subset\":[1],\"colors\":[0],\"perm\":[1]}");
  CHECK(lines[2] == "{\"subset\":[1],\"colors\":[1],\"perm\":[1]}");

  CHECK(igp_stream_wreath_derangements(2, 2, 100000000ull, nullptr, &lines) ==
        IGP_INVALID_ARGUMENT);
  CHECK(igp_stream_wreath_derangements(3, 2, 10ull, grab, &lines) == IGP_BUDGET);
}
