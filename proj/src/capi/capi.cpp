#include "igp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/combinat.hpp"
#include "core/error.hpp"
#include "core/exact.hpp"
#include "core/gammap.hpp"
#include "core/mahler.hpp"
#include "core/mvalues.hpp"
#include "core/padic.hpp"

using igp::exact::Integer;
using igp::exact::Rational;
using igp::padic::PadicContext;
using igp::padic::PadicInt;

struct igp_seq {
  std::vector<Rational> values;
};

struct igp_padic {
  PadicInt v;
};

struct igp_lset {
  igp::combinat::CycleLengthSet L;
};

namespace {

thread_local std::string t_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

igp_status status_of(igp::ErrorKind kind) {
  switch (kind) {
    case igp::ErrorKind::InvalidArgument: return IGP_INVALID_ARGUMENT;
    case igp::ErrorKind::Domain: return IGP_DOMAIN;
    case igp::ErrorKind::Budget: return IGP_BUDGET;
    case igp::ErrorKind::Parse: return IGP_PARSE;
    case igp::ErrorKind::Precision: return IGP_PRECISION;
  }
  return IGP_INTERNAL;
}

igp_status fail(igp_status s, const std::string& message) {
  t_error = message;
  return s;
}

template <typename Fn>
igp_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return IGP_OK;
  } catch (const igp::Error& e) {
    t_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    t_error = "out of memory";
    return IGP_INTERNAL;
  } catch (const std::exception& e) {
    t_error = e.what();
    return IGP_INTERNAL;
  } catch (...) {
    t_error = "unknown failure";
    return IGP_INTERNAL;
  }
}

igp::mahler::SequencePrefix to_prefix(const igp_seq* s) {
  igp::mahler::SequencePrefix f;
  f.values = s->values;
  return f;
}

std::string json_uint_array(const std::vector<unsigned>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

std::string element_json(const igp::combinat::WreathElement& e) {
  return "{\"colors\":" + json_uint_array(e.colors) +
         ",\"perm\":" + json_uint_array(e.perm) + "}";
}

std::string arrangement_json(const igp::combinat::WreathArrangement& a) {
  return "{\"subset\":" + json_uint_array(a.subset) +
         ",\"colors\":" + json_uint_array(a.element.colors) +
         ",\"perm\":" + json_uint_array(a.element.perm) + "}";
}

}  // namespace

extern "C" {

const char* igp_version(void) { return "0.1.0"; }

const char* igp_last_error(void) { return t_error.c_str(); }

void igp_free_string(char* s) { std::free(s); }

/* ---------------- sequences ---------------- */

igp_status igp_seq_new(igp_seq** out) {
  if (out == nullptr) return fail(IGP_INVALID_ARGUMENT, "igp_seq_new: out is null");
  return guarded([&] { *out = new igp_seq(); });
}

igp_status igp_seq_parse(const char* text, igp_seq** out) {
  if (text == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_seq_parse: null argument");
  return guarded([&] {
    auto seq = std::make_unique<igp_seq>();
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
      seq->values.push_back(Rational::parse(item));
    }
    if (seq->values.empty()) {
      throw igp::ParseError("igp_seq_parse: empty sequence");
    }
    *out = seq.release();
  });
}

igp_status igp_seq_push(igp_seq* s, const char* rational) {
  if (s == nullptr || rational == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_seq_push: null argument");
  return guarded([&] { s->values.push_back(Rational::parse(rational)); });
}

size_t igp_seq_len(const igp_seq* s) { return s == nullptr ? 0 : s->values.size(); }

igp_status igp_seq_get(const igp_seq* s, size_t index, char** out) {
  if (s == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_seq_get: null argument");
  if (index >= s->values.size())
    return fail(IGP_INVALID_ARGUMENT, "igp_seq_get: index out of range");
  return guarded([&] { *out = dup_string(s->values[index].str()); });
}

igp_status igp_seq_alternated(const igp_seq* s, igp_seq** out) {
  if (s == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_seq_alternated: null argument");
  return guarded([&] {
    auto seq = std::make_unique<igp_seq>();
    seq->values.reserve(s->values.size());
    for (size_t n = 0; n < s->values.size(); ++n) {
      seq->values.push_back(n % 2 == 0 ? s->values[n] : -s->values[n]);
    }
    *out = seq.release();
  });
}

void igp_seq_free(igp_seq* s) { delete s; }

igp_status igp_seq_morita(unsigned long p, size_t len, igp_seq** out) {
  if (out == nullptr) return fail(IGP_INVALID_ARGUMENT, "igp_seq_morita: out is null");
  return guarded([&] {
    auto seq = std::make_unique<igp_seq>();
    seq->values = igp::mvalues::morita_f(p, len).values;
    *out = seq.release();
  });
}

igp_status igp_seq_artin_hasse(unsigned long ell, size_t len, igp_seq** out) {
  if (out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_seq_artin_hasse: out is null");
  return guarded([&] {
    auto seq = std::make_unique<igp_seq>();
    seq->values = igp::mvalues::artin_hasse_f(ell, len).values;
    *out = seq.release();
  });
}

/* ---------------- m-values ---------------- */

igp_status igp_mvalues(const igp_seq* f, size_t k, igp_seq** out) {
  if (f == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_mvalues: null argument");
  return guarded([&] {
    if (k == 0 || k >= f->values.size()) {
      throw igp::InvalidArgumentError(
          "igp_mvalues: k must satisfy 1 <= k <= len(f) - 1");
    }
    igp::mvalues::MSeries m = igp::mvalues::m_from_f(to_prefix(f));
    auto seq = std::make_unique<igp_seq>();
    seq->values.assign(m.values.begin(), m.values.begin() + k);
    *out = seq.release();
  });
}

igp_status igp_mvalue_partition_route(const igp_seq* f, unsigned k, char** out) {
  if (f == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_mvalue_partition_route: null argument");
  return guarded([&] {
    *out = dup_string(igp::mvalues::m_from_f_partition(to_prefix(f), k).str());
  });
}

igp_status igp_zeta_egf(const igp_seq* m, size_t K, igp_seq** out) {
  if (m == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_zeta_egf: null argument");
  return guarded([&] {
    igp::mvalues::MSeries ms;
    ms.values = m->values;
    igp::mvalues::EGFPrefix c = igp::mvalues::zeta_egf(ms, static_cast<unsigned>(K));
    auto seq = std::make_unique<igp_seq>();
    seq->values = std::move(c.coeffs);
    *out = seq.release();
  });
}

igp_status igp_continuity_criterion(const igp_seq* f, unsigned long p, char** json) {
  if (f == nullptr || json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_continuity_criterion: null argument");
  return guarded([&] {
    *json = dup_string(igp::mvalues::continuity_criterion(to_prefix(f), p).to_json());
  });
}

igp_status igp_classify_regularity(const igp_seq* f, unsigned long p, char** json) {
  if (f == nullptr || json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_classify_regularity: null argument");
  return guarded([&] {
    *json = dup_string(igp::mahler::classify_regularity(to_prefix(f), p).to_json());
  });
}

/* ---------------- p-adic integers ---------------- */

igp_status igp_padic_new(unsigned long p, unsigned precision, const char* value,
                         igp_padic** out) {
  if (value == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_new: null argument");
  return guarded([&] {
    Rational q = Rational::parse(value);
    *out = new igp_padic{PadicInt::from_rational(q, PadicContext(p, precision))};
  });
}

unsigned long igp_padic_prime(const igp_padic* x) {
  return x == nullptr ? 0 : x->v.prime();
}

unsigned igp_padic_precision(const igp_padic* x) {
  return x == nullptr ? 0 : x->v.precision();
}

igp_status igp_padic_residue(const igp_padic* x, char** out) {
  if (x == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_residue: null argument");
  return guarded([&] { *out = dup_string(x->v.residue().get_str()); });
}

igp_status igp_padic_json(const igp_padic* x, char** out) {
  if (x == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_json: null argument");
  return guarded([&] { *out = dup_string(x->v.to_json()); });
}

void igp_padic_free(igp_padic* x) { delete x; }

#define IGP_PADIC_BINOP(name, expr)                                        \
  igp_status name(const igp_padic* a, const igp_padic* b, igp_padic** out) { \
    if (a == nullptr || b == nullptr || out == nullptr)                    \
      return fail(IGP_INVALID_ARGUMENT, #name ": null argument");          \
    return guarded([&] { *out = new igp_padic{expr}; });                   \
  }

IGP_PADIC_BINOP(igp_padic_add, a->v + b->v)
IGP_PADIC_BINOP(igp_padic_sub, a->v - b->v)
IGP_PADIC_BINOP(igp_padic_mul, a->v * b->v)

#undef IGP_PADIC_BINOP

igp_status igp_padic_neg(const igp_padic* a, igp_padic** out) {
  if (a == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_neg: null argument");
  return guarded([&] { *out = new igp_padic{-a->v}; });
}

igp_status igp_padic_inverse(const igp_padic* a, igp_padic** out) {
  if (a == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_inverse: null argument");
  return guarded([&] { *out = new igp_padic{a->v.inverse()}; });
}

igp_status igp_padic_equal(const igp_padic* a, const igp_padic* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_equal: null argument");
  return guarded([&] { *out = (a->v == b->v) ? 1 : 0; });
}

igp_status igp_padic_exp(const igp_padic* x, igp_padic** out) {
  if (x == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_exp: null argument");
  return guarded([&] { *out = new igp_padic{igp::padic::exp_p(x->v)}; });
}

igp_status igp_padic_log(const igp_padic* x, igp_padic** out) {
  if (x == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_log: null argument");
  return guarded([&] { *out = new igp_padic{igp::padic::log_p(x->v)}; });
}

igp_status igp_padic_pow(const igp_padic* r, const igp_padic* y, igp_padic** out) {
  if (r == nullptr || y == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_padic_pow: null argument");
  return guarded([&] {
    *out = new igp_padic{igp::padic::pow_interpolated(r->v, y->v)};
  });
}

/* ---------------- gamma ---------------- */

igp_status igp_gamma_p(const igp_padic* s, const igp_padic* r, igp_padic** out) {
  if (s == nullptr || r == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_gamma_p: null argument");
  return guarded([&] {
    igp::gammap::GammaPInput in(s->v, r->v);
    *out = new igp_padic{igp::gammap::gamma_p(in)};
  });
}

igp_status igp_gamma_p_series(const igp_padic* s, const igp_padic* r,
                              igp_padic** out) {
  if (s == nullptr || r == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_gamma_p_series: null argument");
  return guarded([&] {
    igp::gammap::GammaPInput in(s->v, r->v);
    *out = new igp_padic{igp::gammap::gamma_p_series(in)};
  });
}

igp_status igp_gamma_p_truncexp(unsigned n, const igp_padic* r, igp_padic** out) {
  if (r == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_gamma_p_truncexp: null argument");
  return guarded([&] {
    *out = new igp_padic{igp::gammap::gamma_p_truncexp(n, r->v)};
  });
}

igp_status igp_a_tilde(const igp_padic* y, const igp_padic* s, igp_padic** out) {
  if (y == nullptr || s == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_a_tilde: null argument");
  return guarded([&] { *out = new igp_padic{igp::gammap::a_tilde(y->v, s->v)}; });
}

igp_status igp_gamma_report(unsigned long p, unsigned N, const char* s,
                            const char* r, const char* route, char** json) {
  if (s == nullptr || r == nullptr || route == nullptr || json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_gamma_report: null argument");
  return guarded([&] {
    const std::string route_name(route);
    Rational sq = Rational::parse(s);
    Rational rq = Rational::parse(r);
    PadicContext ctx(p, N);
    PadicInt sp = PadicInt::from_rational(sq, ctx);
    PadicInt rp = PadicInt::from_rational(rq, ctx);

    // The truncated-exponential route exists only at integer s = n + 1 >= 1.
    std::optional<unsigned> trunc_n;
    if (sq.is_integer() && sq.sign() > 0 &&
        sq.numerator() - 1 <= Integer(1000000UL)) {
      trunc_n = static_cast<unsigned>(Integer(sq.numerator() - 1).get_ui());
    }

    std::ostringstream os;
    if (route_name == "all") {
      igp::gammap::GammaPInput in(sp, rp);
      PadicInt factored = igp::gammap::gamma_p(in);
      PadicInt series = igp::gammap::gamma_p_series(in);
      bool agree = factored == series;
      if (trunc_n) {
        agree = agree && factored == igp::gammap::gamma_p_truncexp(*trunc_n, rp);
      }
      os << "{\"p\":" << p << ",\"N\":" << N << ",\"s\":\"" << sq.str()
         << "\",\"r\":\"" << rq.str() << "\",\"gamma_p\":\""
         << factored.residue().get_str() << "\",\"routes_agree\":"
         << (agree ? "true" : "false") << "}";
    } else {
      PadicInt value = [&] {
        if (route_name == "factored") {
          igp::gammap::GammaPInput in(sp, rp);
          return igp::gammap::gamma_p(in);
        }
        if (route_name == "series") {
          igp::gammap::GammaPInput in(sp, rp);
          return igp::gammap::gamma_p_series(in);
        }
        if (route_name == "truncexp") {
          if (!trunc_n) {
            throw igp::DomainError(
                "gamma_report: the truncexp route needs an integer s >= 1");
          }
          return igp::gammap::gamma_p_truncexp(*trunc_n, rp);
        }
        throw igp::InvalidArgumentError(
            "gamma_report: route must be all, factored, series, or truncexp");
      }();
      os << "{\"p\":" << p << ",\"N\":" << N << ",\"s\":\"" << sq.str()
         << "\",\"r\":\"" << rq.str() << "\",\"route\":\"" << route_name
         << "\",\"gamma_p\":\"" << value.residue().get_str() << "\"}";
    }
    *json = dup_string(os.str());
  });
}

igp_status igp_classical_consistency(unsigned n, long r, unsigned long p,
                                     unsigned N, char** json) {
  if (json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_classical_consistency: json is null");
  return guarded([&] {
    *json = dup_string(
        igp::gammap::classical_consistency(n, r, PadicContext(p, N)).to_json());
  });
}

igp_status igp_verify_floor_padic(unsigned n, long r, unsigned long p,
                                  unsigned N, char** json) {
  if (json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_verify_floor_padic: json is null");
  return guarded([&] {
    *json = dup_string(
        igp::gammap::verify_floor_padic(n, r, PadicContext(p, N)).to_json());
  });
}

igp_status igp_zero_scan(const igp_padic* r, unsigned level, uint64_t budget,
                         char** json) {
  if (r == nullptr || json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_zero_scan: null argument");
  return guarded([&] {
    std::vector<Integer> zeros = igp::gammap::zero_scan(r->v, level, budget);
    std::ostringstream os;
    os << "{\"p\":" << r->v.prime() << ",\"level\":" << level << ",\"zeros\":[";
    for (size_t i = 0; i < zeros.size(); ++i) {
      if (i) os << ",";
      os << "\"" << zeros[i].get_str() << "\"";
    }
    os << "]}";
    *json = dup_string(os.str());
  });
}

/* ---------------- enumeration ---------------- */

igp_status igp_lset_preset(const char* spec, uint64_t bound, igp_lset** out) {
  if (spec == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_lset_preset: null argument");
  return guarded([&] {
    *out = new igp_lset{igp::combinat::CycleLengthSet::preset(spec, bound)};
  });
}

igp_status igp_lset_contains(const igp_lset* L, uint64_t k, int* out) {
  if (L == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_lset_contains: null argument");
  return guarded([&] { *out = L->L.contains(k) ? 1 : 0; });
}

igp_status igp_lset_describe(const igp_lset* L, char** out) {
  if (L == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_lset_describe: null argument");
  return guarded([&] { *out = dup_string(L->L.description()); });
}

void igp_lset_free(igp_lset* L) { delete L; }

igp_status igp_a_closed(unsigned n, const char* r, char** out) {
  if (r == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_a_closed: null argument");
  return guarded([&] {
    *out = dup_string(igp::combinat::a_closed(n, Rational::parse(r)).str());
  });
}

igp_status igp_wreath_derangements(unsigned n, unsigned r, uint64_t budget,
                                   uint64_t* out) {
  if (out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_wreath_derangements: out is null");
  return guarded([&] {
    *out = igp::combinat::count_wreath_derangements(n, r, budget);
  });
}

igp_status igp_wreath_arrangements(unsigned n, unsigned r, uint64_t budget,
                                   uint64_t* out) {
  if (out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_wreath_arrangements: out is null");
  return guarded([&] {
    *out = igp::combinat::count_wreath_arrangements(n, r, budget);
  });
}

igp_status igp_cycle_restricted_count(const igp_lset* L, unsigned n,
                                      uint64_t budget, char** out) {
  if (L == nullptr || out == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_cycle_restricted_count: null argument");
  return guarded([&] {
    *out = dup_string(
        igp::combinat::count_cycle_restricted(L->L, n, budget).get_str());
  });
}

igp_status igp_cycle_restricted_counts(const igp_lset* L, unsigned K, char** json) {
  if (L == nullptr || json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_cycle_restricted_counts: null argument");
  return guarded([&] {
    std::vector<Integer> counts = igp::combinat::cycle_restricted_counts(L->L, K);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < counts.size(); ++i) {
      if (i) os << ",";
      os << "\"" << counts[i].get_str() << "\"";
    }
    os << "]";
    *json = dup_string(os.str());
  });
}

igp_status igp_verify_floor(unsigned n, long r, char** json) {
  if (json == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_verify_floor: json is null");
  return guarded([&] {
    *json = dup_string(igp::combinat::verify_floor_formula(n, r).to_json());
  });
}

igp_status igp_stream_wreath_derangements(unsigned n, unsigned r,
                                          uint64_t budget, igp_emit_fn emit,
                                          void* user) {
  if (emit == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_stream_wreath_derangements: emit is null");
  return guarded([&] {
    igp::combinat::stream_wreath_derangements(
        n, r, budget, [&](const igp::combinat::WreathElement& e) {
          emit(element_json(e).c_str(), user);
        });
  });
}

igp_status igp_stream_wreath_arrangements(unsigned n, unsigned r,
                                          uint64_t budget, igp_emit_fn emit,
                                          void* user) {
  if (emit == nullptr)
    return fail(IGP_INVALID_ARGUMENT, "igp_stream_wreath_arrangements: emit is null");
  return guarded([&] {
    igp::combinat::stream_wreath_arrangements(
        n, r, budget, [&](const igp::combinat::WreathArrangement& a) {
          emit(arrangement_json(a).c_str(), user);
        });
  });
}

}  // extern "C"
